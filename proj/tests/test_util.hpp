#pragma once

// Shared helpers for the test suites: small deterministic generators and
// independent brute-force oracles that must stay decoupled from the library
// implementations they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cgt/graph.hpp"
#include "cgt/phylogeny.hpp"
#include "cgt/tcmis.hpp"

namespace testutil {

using cgt::ColorId;
using cgt::Edge;
using cgt::MulticoloredGraph;
using cgt::VertexId;

inline MulticoloredGraph colored_graph(std::uint32_t n, std::vector<ColorId> colors, std::vector<Edge> edges) {
    std::vector<std::vector<ColorId>> cs;
    for (ColorId c : colors) cs.push_back({c});
    return MulticoloredGraph::make(MulticoloredGraph::Mode::Colored, n, std::move(cs), std::move(edges));
}

inline MulticoloredGraph cycle_graph(std::uint32_t n, std::vector<ColorId> colors, std::vector<Edge> chords = {}) {
    std::vector<Edge> es;
    for (std::uint32_t i = 0; i < n; ++i) es.push_back(cgt::make_edge(i, (i + 1) % n));
    es.insert(es.end(), chords.begin(), chords.end());
    return colored_graph(n, std::move(colors), std::move(es));
}

/// Alternately 2-colored even cycle.
inline MulticoloredGraph alternating_cycle(std::uint32_t n) {
    std::vector<ColorId> colors;
    for (std::uint32_t i = 0; i < n; ++i) colors.push_back(i % 2);
    return cycle_graph(n, std::move(colors));
}

// Brute-force chordality: every cycle of length >= 4 has a chord. Enumerates
// all simple cycles via DFS from each minimal vertex. Only for tiny graphs.
inline bool brute_force_chordal(const MulticoloredGraph& g) {
    std::vector<VertexId> path;
    std::vector<char> on_path(g.n, 0);
    bool ok = true;

    auto has_chord = [&](const std::vector<VertexId>& cyc) {
        for (std::size_t i = 0; i < cyc.size(); ++i)
            for (std::size_t j = i + 2; j < cyc.size(); ++j) {
                if (i == 0 && j == cyc.size() - 1) continue; // cycle edge
                if (g.has_edge(cyc[i], cyc[j])) return true;
            }
        return false;
    };

    std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId v) {
        if (!ok) return;
        for (VertexId u : g.adj[v]) {
            if (u == start && path.size() >= 4) {
                if (!has_chord(path)) ok = false;
            }
            if (u > start && !on_path[u]) {
                path.push_back(u);
                on_path[u] = 1;
                dfs(start, u);
                on_path[u] = 0;
                path.pop_back();
            }
        }
    };

    for (VertexId s = 0; s < g.n && ok; ++s) {
        path = {s};
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        dfs(s, s);
    }
    return ok;
}

inline MulticoloredGraph random_colored_graph(std::mt19937& rng, std::uint32_t n, std::uint32_t k,
                                              double edge_prob) {
    std::vector<ColorId> colors(n);
    for (std::uint32_t i = 0; i < n; ++i) colors[i] = (i < k) ? i : rng() % k; // every color present
    std::shuffle(colors.begin(), colors.end(), rng);
    std::vector<Edge> es;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (coin(rng) < edge_prob) es.push_back({u, v});
    return colored_graph(n, std::move(colors), std::move(es));
}

/// Random multicolored graph with 1..max_colors_per_vertex colors per vertex.
inline MulticoloredGraph random_multicolored_graph(std::mt19937& rng, std::uint32_t n, std::uint32_t k,
                                                   std::uint32_t max_cpv, double edge_prob) {
    std::vector<std::vector<ColorId>> colors(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t cnt = 1 + rng() % max_cpv;
        std::set<ColorId> cs;
        cs.insert(i < k ? i : rng() % k);
        while (cs.size() < cnt) cs.insert(rng() % k);
        colors[i].assign(cs.begin(), cs.end());
    }
    std::vector<Edge> es;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (coin(rng) < edge_prob) es.push_back({u, v});
    return MulticoloredGraph::make(MulticoloredGraph::Mode::Multi, n, std::move(colors), std::move(es));
}

inline cgt::PhylogenyInstance random_binary_pp(std::mt19937& rng, std::uint32_t max_species,
                                               std::uint32_t max_genes) {
    const std::uint32_t genes = 1 + rng() % max_genes;
    const std::uint32_t want = 1 + rng() % max_species;
    std::set<std::vector<std::uint32_t>> tuples;
    while (tuples.size() < want) {
        std::vector<std::uint32_t> t(genes);
        for (auto& x : t) x = rng() % 2;
        tuples.insert(t);
        if (tuples.size() >= (1u << std::min(genes, 20u))) break;
    }
    std::vector<std::vector<std::uint32_t>> species(tuples.begin(), tuples.end());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < species.size(); ++i) names.push_back("s" + std::to_string(i));
    return cgt::PhylogenyInstance::make(genes, std::move(species), std::move(names));
}

inline cgt::TcmisInstance random_tcmis(std::mt19937& rng, std::uint32_t max_nodes, std::uint32_t max_k,
                                       std::uint32_t max_class_size, std::uint32_t max_edges) {
    const std::uint32_t nodes = 1 + rng() % max_nodes;
    const std::uint32_t k = 1 + rng() % max_k;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tedges;
    for (std::uint32_t i = 1; i < nodes; ++i) tedges.push_back({i == 2 && nodes == 3 && (rng() % 2) ? 0u : i - 1, i});
    std::vector<std::vector<std::uint32_t>> sizes(nodes, std::vector<std::uint32_t>(k));
    for (auto& row : sizes)
        for (auto& s : row) s = 1 + rng() % max_class_size;

    auto adjacent = [&](std::uint32_t a, std::uint32_t b) {
        for (auto& e : tedges)
            if ((e.first == a && e.second == b) || (e.first == b && e.second == a)) return true;
        return false;
    };

    std::vector<cgt::TcmisEdge> edges;
    std::set<std::array<std::uint32_t, 6>> seen;
    const std::uint32_t want = rng() % (max_edges + 1);
    for (std::uint32_t tries = 0; tries < 200 && edges.size() < want; ++tries) {
        cgt::TcmisEdgeEnd a{rng() % nodes, rng() % k, 0}, b{rng() % nodes, rng() % k, 0};
        a.index = rng() % sizes[a.node][a.color];
        b.index = rng() % sizes[b.node][b.color];
        if (a.node == b.node) {
            if (a.color == b.color) continue;
        } else if (!adjacent(a.node, b.node)) {
            continue;
        }
        std::array<std::uint32_t, 6> key{a.node, a.color, a.index, b.node, b.color, b.index};
        std::array<std::uint32_t, 6> rkey{b.node, b.color, b.index, a.node, a.color, a.index};
        if (seen.count(key) || seen.count(rkey)) continue;
        seen.insert(key);
        edges.push_back({a, b});
    }
    return cgt::TcmisInstance::make(nodes, k, std::move(tedges), std::move(sizes), std::move(edges));
}

// ---------------------------------------------------------------------------
// Canonical enumeration of connected unlabeled graphs on exactly n vertices,
// one labeled representative each, by minimizing the adjacency bitstring over
// all vertex permutations.
// ---------------------------------------------------------------------------

inline std::vector<std::vector<Edge>> connected_graph_representatives(std::uint32_t n) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::uint32_t>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const std::uint32_t bits = static_cast<std::uint32_t>(pairs.size());
    std::vector<std::vector<std::uint32_t>> pair_index(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < bits; ++i)
        pair_index[pairs[i].first][pairs[i].second] = pair_index[pairs[i].second][pairs[i].first] = i;

    auto connected = [&](std::uint64_t mask) {
        std::vector<std::uint64_t> adj(n, 0);
        for (std::uint32_t i = 0; i < bits; ++i)
            if (mask >> i & 1) {
                adj[pairs[i].first] |= 1ull << pairs[i].second;
                adj[pairs[i].second] |= 1ull << pairs[i].first;
            }
        std::uint64_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint32_t v = 0; v < n; ++v)
                if (frontier >> v & 1) next |= adj[v];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (n >= 64 ? ~0ull : (1ull << n) - 1);
    };

    std::set<std::uint64_t> canon;
    std::vector<std::vector<Edge>> reps;
    for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        if (n > 1 && !connected(mask)) continue;
        std::uint64_t best = ~0ull;
        for (const auto& p : perms) {
            std::uint64_t m = 0;
            for (std::uint32_t i = 0; i < bits; ++i)
                if (mask >> i & 1) m |= 1ull << pair_index[p[pairs[i].first]][p[pairs[i].second]];
            best = std::min(best, m);
        }
        if (canon.insert(best).second) {
            std::vector<Edge> es;
            for (std::uint32_t i = 0; i < bits; ++i)
                if (best >> i & 1) es.push_back(pairs[i]);
            reps.push_back(std::move(es));
        }
    }
    return reps;
}

/// All colorings of n vertices up to color relabeling (restricted growth
/// strings): the first occurrence of each new color takes the next id.
inline std::vector<std::vector<ColorId>> canonical_colorings(std::uint32_t n) {
    std::vector<std::vector<ColorId>> out;
    std::vector<ColorId> cur(n, 0);
    std::function<void(std::uint32_t, ColorId)> rec = [&](std::uint32_t i, ColorId maxc) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (ColorId c = 0; c <= std::min<ColorId>(maxc + 1, n - 1); ++c) {
            cur[i] = c;
            rec(i + 1, std::max(maxc, c));
        }
    };
    if (n > 0) {
        cur[0] = 0;
        rec(1, 0);
    } else {
        out.push_back({});
    }
    return out;
}

} // namespace testutil
