#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/graph.hpp"

namespace cgt {

// The 7-color palette of a zipper chain: one shared color a, path colors b_P
// and b_Q, and the period-four colors c1..c4.
struct ZipperColors {
    ColorId a = 0, b_p = 1, b_q = 2;
    std::array<ColorId, 4> c{3, 4, 5, 6};

    static ZipperColors standard() { return ZipperColors{}; }
    static ZipperColors from_base(ColorId base) {
        return ZipperColors{base, base + 1, base + 2, {base + 3, base + 4, base + 5, base + 6}};
    }
    std::vector<ColorId> all() const { return {a, b_p, b_q, c[0], c[1], c[2], c[3]}; }
};

/// Colors of p_i (1-based): a on odd indices, b_P on even; c_i cycles with the
/// index mod 4.
inline std::vector<ColorId> zipper_p_colors(const ZipperColors& zc, std::uint32_t i) {
    std::vector<ColorId> cs{(i % 2 == 1) ? zc.a : zc.b_p, zc.c[(i - 1) % 4]};
    std::sort(cs.begin(), cs.end());
    return cs;
}

/// Colors of q_j (1-based): b_Q on odd indices, a on even; c index shifted by 2.
inline std::vector<ColorId> zipper_q_colors(const ZipperColors& zc, std::uint32_t j) {
    std::vector<ColorId> cs{(j % 2 == 1) ? zc.b_q : zc.a, zc.c[(j + 1) % 4]};
    std::sort(cs.begin(), cs.end());
    return cs;
}

struct ZipperChain {
    std::vector<VertexId> p;
    std::vector<VertexId> q;
    ZipperColors colors;
};

// A zipper gadget: chain with |P| = 4n-1, |Q| = 4(n+s), closed into a single
// cycle by a b_P-colored head and tail. `middle_tooth` is only meaningful for
// gadgets embedded by the TCMIS reduction (0 when standalone).
struct ZipperGadget {
    std::vector<VertexId> p;
    std::vector<VertexId> q;
    VertexId head = 0;
    VertexId tail = 0;
    std::uint32_t size_n = 0;
    std::uint32_t skew_s = 0;
    std::uint32_t middle_tooth = 0;
    ZipperColors colors;

    std::uint32_t p_teeth() const { return (static_cast<std::uint32_t>(p.size()) + 3) / 4; }
    std::uint32_t q_teeth() const { return static_cast<std::uint32_t>(q.size()) / 4; }

    /// Base edges of the gadget cycle within its host graph.
    std::vector<Edge> base_edges() const {
        std::vector<Edge> es;
        es.push_back(make_edge(head, p.front()));
        for (std::size_t i = 0; i + 1 < p.size(); ++i) es.push_back(make_edge(p[i], p[i + 1]));
        es.push_back(make_edge(p.back(), tail));
        es.push_back(make_edge(head, q.front()));
        for (std::size_t i = 0; i + 1 < q.size(); ++i) es.push_back(make_edge(q[i], q[i + 1]));
        es.push_back(make_edge(q.back(), tail));
        std::sort(es.begin(), es.end());
        return es;
    }
};

inline std::pair<MulticoloredGraph, ZipperChain> build_zipper_chain(std::uint32_t teeth_p, std::uint32_t teeth_q) {
    if (teeth_p == 0 || teeth_q == 0) throw validation_error("zipper chain: tooth counts must be positive");
    ZipperChain chain;
    chain.colors = ZipperColors::standard();
    const std::uint32_t np = 4 * teeth_p, nq = 4 * teeth_q;
    std::vector<std::vector<ColorId>> vc(np + nq);
    std::vector<Edge> es;
    for (std::uint32_t i = 1; i <= np; ++i) {
        chain.p.push_back(i - 1);
        vc[i - 1] = zipper_p_colors(chain.colors, i);
        if (i > 1) es.push_back(make_edge(i - 2, i - 1));
    }
    for (std::uint32_t j = 1; j <= nq; ++j) {
        chain.q.push_back(np + j - 1);
        vc[np + j - 1] = zipper_q_colors(chain.colors, j);
        if (j > 1) es.push_back(make_edge(np + j - 2, np + j - 1));
    }
    auto g = MulticoloredGraph::make(MulticoloredGraph::Mode::Multi, np + nq, std::move(vc), std::move(es));
    return {std::move(g), std::move(chain)};
}

inline std::pair<MulticoloredGraph, ZipperGadget> build_zipper_gadget(std::uint32_t n, std::uint32_t s) {
    if (n == 0) throw validation_error("zipper gadget: size must be positive");
    ZipperGadget zg;
    zg.colors = ZipperColors::standard();
    zg.size_n = n;
    zg.skew_s = s;
    const std::uint32_t np = 4 * n - 1, nq = 4 * (n + s);
    zg.head = 0;
    for (std::uint32_t i = 1; i <= np; ++i) zg.p.push_back(i);
    zg.tail = 4 * n;
    for (std::uint32_t j = 1; j <= nq; ++j) zg.q.push_back(4 * n + j);

    std::vector<std::vector<ColorId>> vc(1 + np + 1 + nq);
    vc[zg.head] = {zg.colors.b_p};
    vc[zg.tail] = {zg.colors.b_p};
    for (std::uint32_t i = 1; i <= np; ++i) vc[zg.p[i - 1]] = zipper_p_colors(zg.colors, i);
    for (std::uint32_t j = 1; j <= nq; ++j) vc[zg.q[j - 1]] = zipper_q_colors(zg.colors, j);

    std::vector<Edge> es = zg.base_edges();
    auto g = MulticoloredGraph::make(MulticoloredGraph::Mode::Multi, 1 + np + 1 + nq, std::move(vc), std::move(es));
    return {std::move(g), std::move(zg)};
}

// ---------------------------------------------------------------------------
// The canonical offset-D triangulation, produced as an ordered fan walk along
// the gadget cycle. The walk yields the clique path of the triangulation: a
// sequence of triangles, consecutive ones sharing an edge. Treating head and
// tail as positions 0 and 4n of P, the position-x vertex absorbs Q vertices up
// to q_{x+1+4D} when x is even (head absorbs the first D teeth, tail the last
// s-D), and odd positions hold a single locking edge.
// ---------------------------------------------------------------------------

inline std::vector<std::array<VertexId, 3>> gadget_walk(const ZipperGadget& zg, std::uint32_t delta) {
    if (delta > zg.skew_s) throw validation_error("gadget offset out of range [0, s]");
    const std::uint32_t xmax = 4 * zg.size_n;
    const std::uint32_t qlen = static_cast<std::uint32_t>(zg.q.size());
    auto P = [&](std::uint32_t x) { return x == 0 ? zg.head : (x == xmax ? zg.tail : zg.p[x - 1]); };
    auto Q = [&](std::uint32_t y) { return zg.q[y - 1]; };

    std::vector<std::array<VertexId, 3>> tris;
    std::uint32_t x = 0, y = 1;
    while (true) {
        if (x % 2 == 0) {
            const std::uint32_t ylimit = (x == xmax) ? qlen : std::min(x + 1 + 4 * delta, qlen);
            while (y < ylimit) {
                tris.push_back({P(x), Q(y), Q(y + 1)});
                ++y;
            }
        }
        if (x == xmax) break;
        tris.push_back({P(x), P(x + 1), Q(y)});
        ++x;
    }
    return tris;
}

/// Fill edges of the canonical offset-delta triangulation (triangle edges
/// minus the gadget's own base edges).
inline std::vector<Edge> canonical_gadget_fill_edges(const ZipperGadget& zg, std::uint32_t delta) {
    auto base = zg.base_edges();
    std::set<Edge> fill;
    for (const auto& t : gadget_walk(zg, delta)) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                Edge e = make_edge(t[i], t[j]);
                if (!std::binary_search(base.begin(), base.end(), e)) fill.insert(e);
            }
    }
    return std::vector<Edge>(fill.begin(), fill.end());
}

inline FillSet canonical_gadget_triangulation(const MulticoloredGraph& g, const ZipperGadget& zg,
                                              std::uint32_t delta) {
    return FillSet::make(g, canonical_gadget_fill_edges(zg, delta));
}

/// All s+1 canonical triangulations, by offset.
inline std::vector<FillSet> enumerate_gadget_triangulations(const MulticoloredGraph& g, const ZipperGadget& zg) {
    std::vector<FillSet> out;
    for (std::uint32_t d = 0; d <= zg.skew_s; ++d) out.push_back(canonical_gadget_triangulation(g, zg, d));
    return out;
}

namespace detail {

// 1-based position of a vertex on the gadget's P (or Q) path, 0 if absent.
struct PathIndex {
    std::map<VertexId, std::uint32_t> pidx, qidx;
    explicit PathIndex(const ZipperGadget& zg) {
        for (std::uint32_t i = 0; i < zg.p.size(); ++i) pidx[zg.p[i]] = i + 1;
        for (std::uint32_t j = 0; j < zg.q.size(); ++j) qidx[zg.q[j]] = j + 1;
    }
    std::uint32_t p(VertexId v) const {
        auto it = pidx.find(v);
        return it == pidx.end() ? 0 : it->second;
    }
    std::uint32_t q(VertexId v) const {
        auto it = qidx.find(v);
        return it == qidx.end() ? 0 : it->second;
    }
};

} // namespace detail

/// Reads the offset back from a triangulation: the index shift of the Q tooth
/// locked together with the first tooth of P.
inline std::uint32_t read_gadget_offset(const ZipperGadget& zg, const std::vector<Edge>& fill_edges) {
    detail::PathIndex ix(zg);
    std::set<std::uint32_t> locked_teeth;
    for (const auto& e : fill_edges) {
        std::uint32_t i = ix.p(e.first), j = ix.q(e.second);
        if (i == 0 && j == 0) continue;
        if (i == 0 || j == 0) {
            i = ix.p(e.second);
            j = ix.q(e.first);
        }
        if (i == 0 || j == 0) continue;
        if (i > 4) continue; // beyond the first tooth of P
        const bool has_a = (i % 2 == 1) || (j % 2 == 0);
        if (has_a) locked_teeth.insert((j - 1) / 4 + 1);
    }
    if (locked_teeth.empty())
        throw validation_error("read_gadget_offset: no locking edge on the first tooth of P");
    if (locked_teeth.size() > 1)
        throw validation_error("read_gadget_offset: first tooth of P locked with several Q teeth");
    return *locked_teeth.begin() - 1;
}

inline std::uint32_t read_gadget_offset(const ZipperGadget& zg, const FillSet& fill) {
    return read_gadget_offset(zg, fill.edges);
}

// ---------------------------------------------------------------------------
// Structural property checks for triangulations of a chain lying on a cycle
// ---------------------------------------------------------------------------

struct ZipperPropertyReport {
    std::array<bool, 6> holds{true, true, true, true, true, true};
    std::vector<std::string> violations;

    bool all() const {
        return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
    }
};

/// Checks the six locking-structure properties of a triangulated zipper chain
/// in its cycle context (the standalone gadget). Each property is also checked
/// with the roles of P and Q swapped.
inline ZipperPropertyReport check_zipper_properties(const MulticoloredGraph& g, const ZipperGadget& zg,
                                                    const FillSet& fill) {
    for (const auto& e : zg.base_edges())
        if (!g.has_edge(e.first, e.second))
            throw validation_error("check_zipper_properties: gadget cycle is not present in the graph");

    ZipperPropertyReport rep;
    auto fail = [&rep](int prop, const std::string& msg) {
        rep.holds[prop - 1] = false;
        rep.violations.push_back("(" + std::string(prop == 1   ? "i"
                                                   : prop == 2 ? "ii"
                                                   : prop == 3 ? "iii"
                                                   : prop == 4 ? "iv"
                                                   : prop == 5 ? "v"
                                                               : "vi") +
                                 ") " + msg);
    };
    auto has_edge = [&](VertexId u, VertexId v) { return g.has_edge(u, v) || fill.contains(u, v); };

    const auto& P = zg.p;
    const auto& Q = zg.q;

    // (i) no chord inside either path
    auto check_path_chords = [&](const std::vector<VertexId>& path, const char* name) {
        for (std::size_t i = 0; i < path.size(); ++i)
            for (std::size_t j = i + 2; j < path.size(); ++j)
                if (has_edge(path[i], path[j]))
                    fail(1, std::string("edge inside ") + name + " between positions " + std::to_string(i + 1) +
                                " and " + std::to_string(j + 1));
    };
    check_path_chords(P, "P");
    check_path_chords(Q, "Q");

    // cross edges indexed both ways (1-based positions)
    std::vector<std::vector<std::uint32_t>> q_of_p(P.size() + 1), p_of_q(Q.size() + 1);
    for (std::uint32_t i = 1; i <= P.size(); ++i)
        for (std::uint32_t j = 1; j <= Q.size(); ++j)
            if (has_edge(P[i - 1], Q[j - 1])) {
                q_of_p[i].push_back(j);
                p_of_q[j].push_back(i);
            }

    // (ii) convexity of shared endpoints
    auto check_convex = [&](const std::vector<std::vector<std::uint32_t>>& nb, const std::vector<VertexId>& from,
                            const std::vector<VertexId>& to, const char* name) {
        for (std::uint32_t i = 1; i < nb.size(); ++i) {
            if (nb[i].size() < 2) continue;
            auto [lo, hi] = std::minmax_element(nb[i].begin(), nb[i].end());
            for (std::uint32_t j = *lo; j <= *hi; ++j)
                if (!has_edge(from[i - 1], to[j - 1]))
                    fail(2, std::string(name) + " position " + std::to_string(i) + " misses opposite position " +
                                std::to_string(j));
        }
    };
    check_convex(q_of_p, P, Q, "P");
    check_convex(p_of_q, Q, P, "Q");

    // (iii) every cross edge can climb
    for (std::uint32_t i = 1; i <= P.size(); ++i)
        for (std::uint32_t j : q_of_p[i]) {
            const bool p_next = i + 1 <= P.size(), q_next = j + 1 <= Q.size();
            if (!p_next && !q_next) continue;
            bool ok = (p_next && has_edge(P[i], Q[j - 1])) || (q_next && has_edge(P[i - 1], Q[j]));
            if (!ok)
                fail(3, "edge p" + std::to_string(i) + "-q" + std::to_string(j) + " cannot climb");
        }

    // (iv) sliding along a-colored endpoints
    for (std::uint32_t i = 1; i <= P.size(); ++i)
        for (std::uint32_t j : q_of_p[i]) {
            const bool a_endpoint = (i % 2 == 1) || (j % 2 == 0);
            if (!a_endpoint) continue;
            if (i + 1 <= P.size() && j + 1 <= Q.size() && !has_edge(P[i], Q[j]))
                fail(4, "a-edge p" + std::to_string(i) + "-q" + std::to_string(j) + " does not slide");
        }

    // locked teeth: a cross edge with an a-colored endpoint
    std::set<std::pair<std::uint32_t, std::uint32_t>> locked;
    for (std::uint32_t i = 1; i <= P.size(); ++i)
        for (std::uint32_t j : q_of_p[i])
            if ((i % 2 == 1) || (j % 2 == 0)) locked.insert({(i - 1) / 4 + 1, (j - 1) / 4 + 1});

    // (v) locked pairs propagate to the next tooth pair
    for (const auto& [ti, tj] : locked)
        if (ti + 1 <= zg.p_teeth() && tj + 1 <= zg.q_teeth() && !locked.count({ti + 1, tj + 1}))
            fail(5, "teeth (" + std::to_string(ti) + "," + std::to_string(tj) + ") locked but (" +
                        std::to_string(ti + 1) + "," + std::to_string(tj + 1) + ") are not");

    // (vi) each tooth locked with at most one opposite tooth
    std::map<std::uint32_t, std::set<std::uint32_t>> per_p, per_q;
    for (const auto& [ti, tj] : locked) {
        per_p[ti].insert(tj);
        per_q[tj].insert(ti);
    }
    for (const auto& [ti, js] : per_p)
        if (js.size() > 1) fail(6, "P tooth " + std::to_string(ti) + " locked with several Q teeth");
    for (const auto& [tj, is] : per_q)
        if (is.size() > 1) fail(6, "Q tooth " + std::to_string(tj) + " locked with several P teeth");

    return rep;
}

} // namespace cgt
