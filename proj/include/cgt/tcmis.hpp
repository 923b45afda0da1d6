#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

struct TcmisEdgeEnd {
    std::uint32_t node = 0;
    std::uint32_t color = 0;
    std::uint32_t index = 0; // zero-based position inside the color class

    bool operator==(const TcmisEdgeEnd&) const = default;
};

struct TcmisEdge {
    TcmisEdgeEnd a, b;
};

// Tree-chained multicolor independent set instance: a binary tree of MIS
// instances, each with k ordered color classes, plus edges that are either
// intra-node (between distinct colors) or between adjacent tree nodes.
struct TcmisInstance {
    std::uint32_t num_nodes = 0;
    std::uint32_t k = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;
    std::vector<std::vector<std::uint32_t>> class_sizes; // [node][color]
    std::vector<TcmisEdge> edges;                        // ordered; edge i has 1-based index i+... position+1

    static TcmisInstance make(std::uint32_t num_nodes, std::uint32_t k,
                              std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges,
                              std::vector<std::vector<std::uint32_t>> class_sizes,
                              std::vector<TcmisEdge> edges) {
        if (num_nodes == 0) throw validation_error("tcmis: need at least one tree node");
        if (k == 0) throw validation_error("tcmis: need at least one color");
        if (tree_edges.size() + 1 != num_nodes)
            throw validation_error("tcmis: tree edge count must be nodes-1");
        std::vector<std::vector<std::uint32_t>> adj(num_nodes);
        for (auto& e : tree_edges) {
            if (e.first >= num_nodes || e.second >= num_nodes || e.first == e.second)
                throw validation_error("tcmis: bad tree edge");
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
        for (std::uint32_t v = 0; v < num_nodes; ++v)
            if (adj[v].size() > 3)
                throw validation_error("tcmis: tree is not binary (node " + std::to_string(v) +
                                       " has degree " + std::to_string(adj[v].size()) + ")");
        {
            std::vector<char> seen(num_nodes, 0);
            std::queue<std::uint32_t> q;
            q.push(0);
            seen[0] = 1;
            std::size_t cnt = 0;
            while (!q.empty()) {
                auto x = q.front();
                q.pop();
                ++cnt;
                for (auto y : adj[x])
                    if (!seen[y]) {
                        seen[y] = 1;
                        q.push(y);
                    }
            }
            if (cnt != num_nodes) throw validation_error("tcmis: tree is disconnected");
        }
        if (class_sizes.size() != num_nodes) throw validation_error("tcmis: class size table has wrong height");
        for (const auto& row : class_sizes) {
            if (row.size() != k) throw validation_error("tcmis: class size table has wrong width");
            for (auto s : row)
                if (s == 0) throw validation_error("tcmis: empty color class");
        }
        auto adjacent = [&](std::uint32_t x, std::uint32_t y) {
            return std::find(adj[x].begin(), adj[x].end(), y) != adj[x].end();
        };
        for (const auto& e : edges) {
            for (const auto* end : {&e.a, &e.b}) {
                if (end->node >= num_nodes || end->color >= k)
                    throw validation_error("tcmis: edge endpoint out of range");
                if (end->index >= class_sizes[end->node][end->color])
                    throw validation_error("tcmis: edge endpoint index outside its class");
            }
            if (e.a.node == e.b.node) {
                if (e.a.color == e.b.color)
                    throw validation_error("tcmis: intra-node edge within a single color class");
            } else if (!adjacent(e.a.node, e.b.node)) {
                throw validation_error("tcmis: cross edge between non-adjacent tree nodes");
            }
        }
        return TcmisInstance{num_nodes, k, std::move(tree_edges), std::move(class_sizes), std::move(edges)};
    }

    std::vector<std::vector<std::uint32_t>> tree_adjacency() const {
        std::vector<std::vector<std::uint32_t>> adj(num_nodes);
        for (auto& e : tree_edges) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());
        return adj;
    }
};

/// One chosen index per (node, color).
struct TcmisSolution {
    std::vector<std::vector<std::uint32_t>> choice; // [node][color] -> index

    bool operator==(const TcmisSolution&) const = default;
};

} // namespace cgt
