#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

// A species-by-gene variant matrix. Variant ids per gene are arbitrary
// nonnegative integers; the per-gene variant sets are inferred from the
// species that actually occur.
struct PhylogenyInstance {
    std::uint32_t num_genes = 0;
    std::vector<std::vector<std::uint32_t>> variants; // per gene, sorted
    std::vector<std::vector<std::uint32_t>> species;  // tuples, one variant per gene
    std::vector<std::string> names;                   // parallel to species

    static PhylogenyInstance make(std::uint32_t num_genes, std::vector<std::vector<std::uint32_t>> species,
                                  std::vector<std::string> names = {}) {
        if (num_genes == 0) throw validation_error("phylogeny instance: need at least one gene");
        if (species.empty()) throw validation_error("phylogeny instance: need at least one species");
        PhylogenyInstance inst;
        inst.num_genes = num_genes;
        for (const auto& t : species)
            if (t.size() != num_genes)
                throw validation_error("phylogeny instance: species tuple has wrong arity");
        {
            auto sorted = species;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw validation_error("phylogeny instance: duplicate species");
        }
        if (names.empty())
            for (std::size_t i = 0; i < species.size(); ++i) names.push_back("s" + std::to_string(i));
        if (names.size() != species.size())
            throw validation_error("phylogeny instance: name count mismatch");
        inst.variants.assign(num_genes, {});
        for (const auto& t : species)
            for (std::uint32_t g = 0; g < num_genes; ++g) inst.variants[g].push_back(t[g]);
        for (auto& vs : inst.variants) {
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        }
        inst.species = std::move(species);
        inst.names = std::move(names);
        return inst;
    }
};

// A candidate perfect phylogeny: a tree of species tuples (not necessarily
// input species) with every input species attached to a node holding it.
struct PhylogenyTree {
    std::vector<std::vector<std::uint32_t>> nodes; // species tuples
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::uint32_t> species_node; // input species index -> node id
};

inline std::optional<std::string> perfect_phylogeny_violation(const PhylogenyInstance& inst,
                                                              const PhylogenyTree& tree) {
    const std::size_t n = tree.nodes.size();
    if (n == 0) return "tree has no nodes";
    for (const auto& t : tree.nodes)
        if (t.size() != inst.num_genes) return "tree node tuple has wrong arity";
    if (tree.edges.size() + 1 != n) return "tree edge count is not nodes-1";
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& e : tree.edges) {
        if (e.first >= n || e.second >= n || e.first == e.second) return "bad tree edge";
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    {
        std::vector<char> seen(n, 0);
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
        if (cnt != n) return "tree is disconnected";
    }
    if (tree.species_node.size() != inst.species.size()) return "species attachment map is not total";
    for (std::size_t i = 0; i < inst.species.size(); ++i) {
        auto node = tree.species_node[i];
        if (node >= n) return "species " + inst.names[i] + " attached to a missing node";
        if (tree.nodes[node] != inst.species[i])
            return "species " + inst.names[i] + " attached to a node with a different tuple";
    }
    // every (gene, variant) support must induce a connected subtree
    for (std::uint32_t g = 0; g < inst.num_genes; ++g) {
        for (std::uint32_t x : inst.variants[g]) {
            std::vector<std::uint32_t> holding;
            for (std::uint32_t v = 0; v < n; ++v)
                if (tree.nodes[v][g] == x) holding.push_back(v);
            if (holding.empty()) continue;
            std::vector<char> in(n, 0), seen(n, 0);
            for (auto v : holding) in[v] = 1;
            std::queue<std::uint32_t> q;
            q.push(holding[0]);
            seen[holding[0]] = 1;
            std::size_t cnt = 0;
            while (!q.empty()) {
                auto y = q.front();
                q.pop();
                ++cnt;
                for (auto z : adj[y])
                    if (in[z] && !seen[z]) {
                        seen[z] = 1;
                        q.push(z);
                    }
            }
            if (cnt != holding.size())
                return "gene " + std::to_string(g) + " variant " + std::to_string(x) +
                       " has a disconnected subtree";
        }
    }
    return std::nullopt;
}

inline bool verify_perfect_phylogeny(const PhylogenyInstance& inst, const PhylogenyTree& tree) {
    return !perfect_phylogeny_violation(inst, tree).has_value();
}

/// Classical pairwise-compatibility criterion for two-state characters: a
/// binary instance has a perfect phylogeny iff no gene pair exhibits all four
/// variant combinations.
inline bool four_gamete_pp(const PhylogenyInstance& inst) {
    for (std::uint32_t g = 0; g < inst.num_genes; ++g)
        if (inst.variants[g].size() > 2)
            throw refusal_error("four_gamete_pp: gene " + std::to_string(g) + " is not binary");
    for (std::uint32_t g1 = 0; g1 < inst.num_genes; ++g1)
        for (std::uint32_t g2 = g1 + 1; g2 < inst.num_genes; ++g2) {
            std::set<std::pair<std::uint32_t, std::uint32_t>> combos;
            for (const auto& t : inst.species) combos.insert({t[g1], t[g2]});
            if (combos.size() == 4) return false;
        }
    return true;
}

} // namespace cgt
