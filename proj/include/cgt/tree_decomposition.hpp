#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/graph.hpp"

namespace cgt {

/// Identity of the decomposed graph, so a decomposition cannot silently be
/// verified against the wrong instance.
struct GraphRef {
    std::uint32_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t hash = 0;

    static GraphRef of(const MulticoloredGraph& g) {
        return GraphRef{g.n, g.edges.size(), g.structural_hash()};
    }
    bool matches(const MulticoloredGraph& g) const {
        return n == g.n && m == g.edges.size() && hash == g.structural_hash();
    }
};

// Tree of bags over a graph's vertices. Construction enforces that the bag ids
// form a tree (or a single bag with no edges); the Def.-1 conditions are the
// verifier's job, since decompositions under test may violate them.
struct TreeDecomposition {
    std::vector<std::vector<VertexId>> bags;          // each sorted
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;
    GraphRef graph_ref;

    static TreeDecomposition make(std::vector<std::vector<VertexId>> bags,
                                  std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges,
                                  GraphRef ref) {
        const std::size_t b = bags.size();
        if (b == 0) throw validation_error("tree decomposition: no bags");
        for (auto& bag : bags) {
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            for (VertexId v : bag)
                if (v >= ref.n) throw validation_error("tree decomposition: bag vertex out of range");
        }
        for (auto& e : tree_edges) {
            if (e.first >= b || e.second >= b || e.first == e.second)
                throw validation_error("tree decomposition: bad tree edge");
            if (e.first > e.second) std::swap(e.first, e.second);
        }
        std::sort(tree_edges.begin(), tree_edges.end());
        if (std::adjacent_find(tree_edges.begin(), tree_edges.end()) != tree_edges.end())
            throw validation_error("tree decomposition: duplicate tree edge");
        if (tree_edges.size() + 1 != b)
            throw validation_error("tree decomposition: bag tree must have exactly bags-1 edges");
        // connectivity of the bag tree
        std::vector<std::vector<std::uint32_t>> badj(b);
        for (auto& e : tree_edges) {
            badj[e.first].push_back(e.second);
            badj[e.second].push_back(e.first);
        }
        std::vector<char> seen(b, 0);
        std::queue<std::uint32_t> q;
        q.push(0);
        seen[0] = 1;
        std::size_t cnt = 0;
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            ++cnt;
            for (auto y : badj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    q.push(y);
                }
        }
        if (cnt != b) throw validation_error("tree decomposition: bag tree is disconnected");
        return TreeDecomposition{std::move(bags), std::move(tree_edges), ref};
    }

    std::vector<std::vector<std::uint32_t>> bag_adjacency() const {
        std::vector<std::vector<std::uint32_t>> badj(bags.size());
        for (auto& e : tree_edges) {
            badj[e.first].push_back(e.second);
            badj[e.second].push_back(e.first);
        }
        for (auto& nb : badj) std::sort(nb.begin(), nb.end());
        return badj;
    }
};

/// Checks the three Def.-1 conditions; returns the first violation as text.
inline std::optional<std::string> tree_decomposition_violation(const MulticoloredGraph& g,
                                                               const TreeDecomposition& td) {
    if (!td.graph_ref.matches(g))
        throw validation_error("tree decomposition: graph reference mismatch");

    std::vector<char> covered(g.n, 0);
    for (const auto& bag : td.bags)
        for (VertexId v : bag) covered[v] = 1;
    for (VertexId v = 0; v < g.n; ++v)
        if (!covered[v]) return "vertex " + std::to_string(v) + " is in no bag";

    for (const auto& e : g.edges) {
        bool ok = false;
        for (const auto& bag : td.bags) {
            if (std::binary_search(bag.begin(), bag.end(), e.first) &&
                std::binary_search(bag.begin(), bag.end(), e.second)) {
                ok = true;
                break;
            }
        }
        if (!ok)
            return "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " is covered by no bag";
    }

    // per-vertex bag subtrees must be connected
    auto badj = td.bag_adjacency();
    for (VertexId v = 0; v < g.n; ++v) {
        std::vector<std::uint32_t> holding;
        for (std::uint32_t b = 0; b < td.bags.size(); ++b)
            if (std::binary_search(td.bags[b].begin(), td.bags[b].end(), v)) holding.push_back(b);
        if (holding.empty()) continue;
        std::vector<char> in(td.bags.size(), 0), seen(td.bags.size(), 0);
        for (auto b : holding) in[b] = 1;
        std::queue<std::uint32_t> q;
        q.push(holding[0]);
        seen[holding[0]] = 1;
        std::size_t cnt = 0;
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            ++cnt;
            for (auto y : badj[x])
                if (in[y] && !seen[y]) {
                    seen[y] = 1;
                    q.push(y);
                }
        }
        if (cnt != holding.size())
            return "bags containing vertex " + std::to_string(v) + " are disconnected";
    }
    return std::nullopt;
}

inline bool verify_tree_decomposition(const MulticoloredGraph& g, const TreeDecomposition& td) {
    return !tree_decomposition_violation(g, td).has_value();
}

enum class Multiplicity { AtMostOnce, ExactlyOnce };

/// Color occurrence counts per bag, as the multiset union of member color sets.
inline std::optional<std::string> color_multiplicity_violation(const MulticoloredGraph& g,
                                                               const TreeDecomposition& td,
                                                               Multiplicity mode) {
    for (std::uint32_t b = 0; b < td.bags.size(); ++b) {
        std::vector<std::uint32_t> count(g.num_colors, 0);
        for (VertexId v : td.bags[b])
            for (ColorId c : g.colors[v]) ++count[c];
        for (ColorId c = 0; c < g.num_colors; ++c) {
            if (count[c] > 1)
                return "bag " + std::to_string(b) + " contains color " + std::to_string(c) + " " +
                       std::to_string(count[c]) + " times";
            if (mode == Multiplicity::ExactlyOnce && count[c] == 0)
                return "bag " + std::to_string(b) + " is missing color " + std::to_string(c);
        }
    }
    return std::nullopt;
}

inline bool color_multiplicity_ok(const MulticoloredGraph& g, const TreeDecomposition& td, Multiplicity mode) {
    return !color_multiplicity_violation(g, td, mode).has_value();
}

// ---------------------------------------------------------------------------
// Exactly-once normalization. Repeated augmentation step: a bag missing a
// color receives the missing color's vertex from an adjacent bag that has it.
// Two sweeps over the bag tree rooted at bag 0 suffice: leaf-to-root pulls
// every color up into the root, root-to-leaf pushes colors down. Bags only
// ever gain vertices.
// ---------------------------------------------------------------------------

inline TreeDecomposition normalize_exactly_once(const MulticoloredGraph& g, const TreeDecomposition& td) {
    std::vector<char> present(g.num_colors, 0);
    for (const auto& cs : g.colors)
        for (ColorId c : cs) present[c] = 1;
    for (ColorId c = 0; c < g.num_colors; ++c)
        if (!present[c])
            throw validation_error("normalize_exactly_once: color " + std::to_string(c) +
                                   " appears nowhere in the graph");

    auto bags = td.bags;
    auto badj = td.bag_adjacency();

    // BFS order from bag 0
    std::vector<std::uint32_t> order;
    std::vector<std::int64_t> parent(bags.size(), -1);
    {
        std::vector<char> seen(bags.size(), 0);
        std::queue<std::uint32_t> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            order.push_back(x);
            for (auto y : badj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    parent[y] = x;
                    q.push(y);
                }
        }
    }

    auto pull_missing = [&](std::uint32_t dst, std::uint32_t src) {
        std::vector<char> have(g.num_colors, 0);
        for (VertexId v : bags[dst])
            for (ColorId c : g.colors[v]) have[c] = 1;
        for (ColorId c = 0; c < g.num_colors; ++c) {
            if (have[c]) continue;
            for (VertexId v : bags[src]) {
                if (std::binary_search(g.colors[v].begin(), g.colors[v].end(), c)) {
                    bags[dst].insert(std::lower_bound(bags[dst].begin(), bags[dst].end(), v), v);
                    for (ColorId cc : g.colors[v]) have[cc] = 1;
                    break;
                }
            }
        }
    };

    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) pull_missing(static_cast<std::uint32_t>(parent[*it]), *it);
    for (auto b : order)
        if (parent[b] >= 0) pull_missing(b, static_cast<std::uint32_t>(parent[b]));

    return TreeDecomposition::make(std::move(bags), td.tree_edges, td.graph_ref);
}

// ---------------------------------------------------------------------------
// Conversions between at-most-once decompositions and properly colored
// triangulations (both directions of the equivalence).
// ---------------------------------------------------------------------------

/// Fill = all intra-bag pairs that are not base edges.
inline FillSet treedecomp_to_triangulation(const MulticoloredGraph& g, const TreeDecomposition& td) {
    std::vector<Edge> fill;
    for (const auto& bag : td.bags)
        for (std::size_t i = 0; i < bag.size(); ++i)
            for (std::size_t j = i + 1; j < bag.size(); ++j)
                if (!g.has_edge(bag[i], bag[j])) fill.push_back(make_edge(bag[i], bag[j]));
    return FillSet::make(g, std::move(fill));
}

/// Clique tree of the chordal supergraph g+fill: bags are the maximal cliques,
/// tree edges picked greedily by maximum bag intersection (ties to the
/// smallest bag id).
inline TreeDecomposition triangulation_to_treedecomp(const MulticoloredGraph& g, const FillSet& fill) {
    if (!verify_triangulation(g, fill))
        throw validation_error("triangulation_to_treedecomp: fill is not a properly colored triangulation");

    auto adj = combined_adjacency(g, fill);
    auto order = mcs_order(adj);
    std::vector<std::uint32_t> pos(g.n);
    for (std::uint32_t i = 0; i < g.n; ++i) pos[order[i]] = i;

    std::vector<std::vector<VertexId>> cliques;
    for (VertexId v = 0; v < g.n; ++v) {
        std::vector<VertexId> c{v};
        for (VertexId u : adj[v])
            if (pos[u] > pos[v]) c.push_back(u);
        std::sort(c.begin(), c.end());
        cliques.push_back(std::move(c));
    }
    // keep maximal cliques only, ordered by the PEO position of their source vertex
    std::sort(cliques.begin(), cliques.end());
    cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
    std::vector<std::vector<VertexId>> maximal;
    for (const auto& c : cliques) {
        bool dominated = false;
        for (const auto& d : cliques) {
            if (&c == &d || d.size() <= c.size()) continue;
            if (std::includes(d.begin(), d.end(), c.begin(), c.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(c);
    }
    if (maximal.empty()) maximal.push_back({}); // n == 0

    // Prim-style clique tree: attach each new bag by the largest intersection.
    const std::size_t b = maximal.size();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tedges;
    std::vector<char> used(b, 0);
    used[0] = 1;
    for (std::size_t step = 1; step < b; ++step) {
        int best_w = -1;
        std::uint32_t best_new = 0, best_old = 0;
        for (std::uint32_t j = 0; j < b; ++j) {
            if (used[j]) continue;
            for (std::uint32_t i = 0; i < b; ++i) {
                if (!used[i]) continue;
                std::vector<VertexId> inter;
                std::set_intersection(maximal[i].begin(), maximal[i].end(), maximal[j].begin(), maximal[j].end(),
                                      std::back_inserter(inter));
                int w = static_cast<int>(inter.size());
                if (w > best_w) {
                    best_w = w;
                    best_new = j;
                    best_old = i;
                }
            }
        }
        used[best_new] = 1;
        tedges.emplace_back(best_old, best_new);
    }
    return TreeDecomposition::make(std::move(maximal), std::move(tedges), GraphRef::of(g));
}

} // namespace cgt
