#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

using VertexId = std::uint32_t;
using ColorId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId u, VertexId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Sorted color-id sets. Kept as plain vectors; instances are tiny.
inline bool colors_intersect(const std::vector<ColorId>& a, const std::vector<ColorId>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

inline std::vector<ColorId> colors_union(const std::vector<ColorId>& a, const std::vector<ColorId>& b) {
    std::vector<ColorId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// An undirected graph whose vertices carry color sets. In Colored (TCG) mode every
// vertex has exactly one color; in Multi (TMG) mode any set size is allowed,
// including empty. Vertex ids are dense 0..n-1 and color ids are contiguous
// 0..k-1 over the colors that actually appear. Immutable after construction.
struct MulticoloredGraph {
    enum class Mode { Colored, Multi };

    Mode mode = Mode::Multi;
    std::uint32_t n = 0;
    std::uint32_t num_colors = 0;
    std::vector<std::vector<ColorId>> colors; // per vertex, sorted
    std::vector<Edge> edges;                  // normalized (u < v), sorted
    std::vector<std::vector<VertexId>> adj;   // sorted neighbor lists

    static MulticoloredGraph make(Mode mode,
                                  std::uint32_t n,
                                  std::vector<std::vector<ColorId>> vertex_colors,
                                  std::vector<Edge> edge_list) {
        MulticoloredGraph g;
        g.mode = mode;
        g.n = n;
        if (vertex_colors.size() != n)
            throw validation_error("graph: expected " + std::to_string(n) + " vertex color sets, got " +
                                   std::to_string(vertex_colors.size()));
        for (auto& cs : vertex_colors) {
            std::sort(cs.begin(), cs.end());
            cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
            if (mode == Mode::Colored && cs.size() != 1)
                throw validation_error("graph: tcg vertex must have exactly one color");
        }
        g.colors = std::move(vertex_colors);

        // k is recomputed from the graph; appearing colors must be exactly 0..k-1.
        std::vector<ColorId> seen;
        for (const auto& cs : g.colors) seen.insert(seen.end(), cs.begin(), cs.end());
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i] != i)
                throw validation_error("graph: color ids are not contiguous from 0 (missing color " +
                                       std::to_string(i) + ")");
        g.num_colors = static_cast<std::uint32_t>(seen.size());

        for (auto& e : edge_list) {
            if (e.first == e.second) throw validation_error("graph: self-loop at vertex " + std::to_string(e.first));
            if (e.first >= n || e.second >= n)
                throw validation_error("graph: edge endpoint out of range");
            e = make_edge(e.first, e.second);
        }
        std::sort(edge_list.begin(), edge_list.end());
        if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
            throw validation_error("graph: duplicate edge");
        g.edges = std::move(edge_list);

        g.adj.assign(n, {});
        for (const auto& e : g.edges) {
            g.adj[e.first].push_back(e.second);
            g.adj[e.second].push_back(e.first);
        }
        for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
        return g;
    }

    bool has_edge(VertexId u, VertexId v) const {
        if (u >= n || v >= n || u == v) return false;
        const auto& nb = adj[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    ColorId color_of(VertexId v) const {
        if (mode != Mode::Colored) throw internal_error("color_of requires a colored (tcg) graph");
        return colors[v][0];
    }

    std::uint64_t structural_hash() const {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        auto mix = [&h](std::uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        mix(n);
        mix(num_colors);
        for (const auto& cs : colors) {
            mix(0xC01095ull);
            for (ColorId c : cs) mix(c + 1);
        }
        for (const auto& e : edges) {
            mix(e.first + 1);
            mix((static_cast<std::uint64_t>(e.second) << 20) + 7);
        }
        return h;
    }
};

/// True iff no edge joins two vertices whose color sets intersect.
inline bool is_properly_multicolored(const MulticoloredGraph& g) {
    for (const auto& e : g.edges)
        if (colors_intersect(g.colors[e.first], g.colors[e.second])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Chordality via maximum cardinality search. MCS numbers vertices n-1..0,
// always picking the vertex with the most numbered neighbors (smallest id on
// ties). On a chordal graph the resulting order (read ascending) is a perfect
// elimination ordering; checking the PEO property decides chordality.
// ---------------------------------------------------------------------------

inline std::vector<VertexId> mcs_order(const std::vector<std::vector<VertexId>>& adj) {
    const std::size_t n = adj.size();
    std::vector<int> weight(n, 0);
    std::vector<char> numbered(n, 0);
    std::vector<VertexId> order(n);
    for (std::size_t step = n; step-- > 0;) {
        int best = -1;
        VertexId pick = 0;
        for (VertexId v = 0; v < n; ++v) {
            if (!numbered[v] && weight[v] > best) {
                best = weight[v];
                pick = v;
            }
        }
        numbered[pick] = 1;
        order[step] = pick;
        for (VertexId u : adj[pick])
            if (!numbered[u]) ++weight[u];
    }
    return order;
}

inline bool is_perfect_elimination_order(const std::vector<std::vector<VertexId>>& adj,
                                         const std::vector<VertexId>& order) {
    const std::size_t n = adj.size();
    std::vector<std::uint32_t> pos(n);
    for (std::uint32_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::vector<VertexId>> later(n);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : adj[v])
            if (pos[u] > pos[v]) later[v].push_back(u);
    for (VertexId v = 0; v < n; ++v) {
        if (later[v].empty()) continue;
        VertexId parent = *std::min_element(later[v].begin(), later[v].end(),
                                            [&pos](VertexId a, VertexId b) { return pos[a] < pos[b]; });
        for (VertexId u : later[v]) {
            if (u == parent) continue;
            const auto& nb = adj[parent];
            if (!std::binary_search(nb.begin(), nb.end(), u)) return false;
        }
    }
    return true;
}

inline bool is_chordal_adj(const std::vector<std::vector<VertexId>>& adj) {
    return is_perfect_elimination_order(adj, mcs_order(adj));
}

inline bool is_chordal(const MulticoloredGraph& g) {
    return is_chordal_adj(g.adj);
}

// ---------------------------------------------------------------------------
// Connected components
// ---------------------------------------------------------------------------

/// Components of the subgraph induced by `keep` (a 0/1 mask over vertex ids),
/// each sorted ascending, ordered by minimum vertex id.
inline std::vector<std::vector<VertexId>> components_of_mask(const std::vector<std::vector<VertexId>>& adj,
                                                             const std::vector<char>& keep) {
    const std::size_t n = adj.size();
    std::vector<char> visited(n, 0);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId s = 0; s < n; ++s) {
        if (!keep[s] || visited[s]) continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> q;
        q.push(s);
        visited[s] = 1;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            comp.push_back(v);
            for (VertexId u : adj[v])
                if (keep[u] && !visited[u]) {
                    visited[u] = 1;
                    q.push(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline std::vector<std::vector<VertexId>> components_after_removal(const MulticoloredGraph& g,
                                                                   const std::vector<VertexId>& removed) {
    std::vector<char> keep(g.n, 1);
    for (VertexId v : removed) {
        if (v >= g.n) throw validation_error("components_after_removal: vertex out of range");
        keep[v] = 0;
    }
    return components_of_mask(g.adj, keep);
}

// ---------------------------------------------------------------------------
// Fill sets and triangulation verification
// ---------------------------------------------------------------------------

/// Extra edges on top of a base graph; disjoint from the base edge set.
struct FillSet {
    std::vector<Edge> edges; // normalized, sorted, unique

    static FillSet make(const MulticoloredGraph& g, std::vector<Edge> raw) {
        for (auto& e : raw) {
            if (e.first == e.second) throw validation_error("fill: self-loop");
            if (e.first >= g.n || e.second >= g.n) throw validation_error("fill: vertex out of range");
            e = make_edge(e.first, e.second);
            if (g.has_edge(e.first, e.second))
                throw validation_error("fill: edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                       " already in the base graph");
        }
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        return FillSet{std::move(raw)};
    }

    bool contains(VertexId u, VertexId v) const {
        return std::binary_search(edges.begin(), edges.end(), make_edge(u, v));
    }
};

inline std::vector<std::vector<VertexId>> combined_adjacency(const MulticoloredGraph& g, const FillSet& fill) {
    std::vector<std::vector<VertexId>> adj = g.adj;
    for (const auto& e : fill.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

/// True iff g plus the fill edges is chordal and properly multicolored.
inline bool verify_triangulation(const MulticoloredGraph& g, const FillSet& fill) {
    for (const auto& e : fill.edges) {
        if (e.first >= g.n || e.second >= g.n || e.first == e.second)
            throw validation_error("verify_triangulation: malformed fill edge");
        if (g.has_edge(e.first, e.second))
            throw validation_error("verify_triangulation: fill overlaps base edges");
        if (colors_intersect(g.colors[e.first], g.colors[e.second])) return false;
    }
    if (!is_properly_multicolored(g)) return false;
    return is_chordal_adj(combined_adjacency(g, fill));
}

} // namespace cgt
