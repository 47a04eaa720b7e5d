#pragma once

// The gamma-symmetric machinery: l_p snake graphs, gamma-symmetric perfect
// matchings and compatible pairs, their barred monomials, the restriction
// bijections onto good matchings, and the resulting expansion formulas.

#include <optional>
#include <set>
#include <vector>

#include "cluloop/expansion.hpp"
#include "cluloop/loopgraph.hpp"

namespace cluloop {

// Edge correspondence between a tile range of graph A and a tile range of
// graph B covering the same surface passages (forward or reversed). Edges are
// matched by their triangle slot within the corresponding tile.
struct ChainMap {
    const SnakeGraph* A = nullptr;
    const SnakeGraph* B = nullptr;
    int a_lo = 1, a_hi = 0, b_lo = 1, b_hi = 0;
    bool reversed = false;

    int b_tile(int a_tile) const {
        return reversed ? b_hi - (a_tile - a_lo) : b_lo + (a_tile - a_lo);
    }

    // Map an A-edge incident to the range; -1 when no A-tile in range carries it.
    int map_edge(int a_eid) const {
        for (int j = a_lo; j <= a_hi; ++j)
            for (int si = 0; si < 4; ++si) {
                if (A->edge_of(j, (Side)si) != a_eid) continue;
                const int jp = b_tile(j);
                const Slot want = A->edge(a_eid).slot;
                int found = -1;
                for (int ti = 0; ti < 4; ++ti)
                    if (B->edge(B->edge_of(jp, (Side)ti)).slot == want) {
                        const int cand = B->edge_of(jp, (Side)ti);
                        if (found >= 0 && found != cand) {
                            // same slot on two sides (radius tile): resolve by
                            // the geometric side rule
                            found = resolve_side(j, (Side)si, jp);
                        } else {
                            found = cand;
                        }
                    }
                if (found < 0)
                    throw std::runtime_error("chain map: slot not present in image tile");
                return found;
            }
        return -1;
    }

private:
    int resolve_side(int j, Side s, int jp) const {
        Side t = reversed ? side_mirror(s) : s;
        const int relA = A->tile(j).rel * (reversed ? -1 : 1);
        if (relA != B->tile(jp).rel) {
            // mirrored tile: the placement rule swaps S<->W and N<->E
            switch (t) {
                case Side::S: t = Side::W; break;
                case Side::W: t = Side::S; break;
                case Side::N: t = Side::E; break;
                case Side::E: t = Side::N; break;
            }
        }
        return B->edge_of(jp, t);
    }
};

struct EllGraphDecomposition {
    Triangulation const* T = nullptr;
    SnakeGraph lp;       // G_{l_p}: 2k + l tiles
    int k = 0;           // crossings of gamma0
    int l = 0;           // degree of the puncture
    std::string puncture;
    TaggedArc gamma;     // the singly notched arc (notch last)

    int d() const { return 2 * k + l; }

    // arm subgraph edge sets (H removes the corner vertex and its two edges)
    std::vector<int> arm_edges(int lo, int hi, bool drop_ne_last,
                               bool drop_sw_first) const {
        std::set<int> out;
        for (int j = lo; j <= hi; ++j)
            for (int si = 0; si < 4; ++si) out.insert(lp.edge_of(j, (Side)si));
        if (drop_ne_last) {
            out.erase(lp.edge_of(hi, Side::N));
            out.erase(lp.edge_of(hi, Side::E));
        }
        if (drop_sw_first) {
            out.erase(lp.edge_of(lo, Side::S));
            out.erase(lp.edge_of(lo, Side::W));
        }
        return {out.begin(), out.end()};
    }

    ChainMap arm_iso() const {  // G_{gamma,1} -> G_{gamma,2}, reversed
        return ChainMap{&lp, &lp, 1, k, k + l + 1, 2 * k + l, true};
    }
};

// Direct the arc so the notched end is last; returns the normalized copy.
inline TaggedArc notch_last(const TaggedArc& g) {
    if (g.notched_at(1) || !g.notched_at(0)) return g;
    TaggedArc r = g;
    std::swap(r.endpoints[0], r.endpoints[1]);
    std::reverse(r.crossings.begin(), r.crossings.end());
    std::swap(r.first_triangle, r.last_triangle);
    return r;
}

// l_p of a singly notched arc whose underlying plain arc is not in T:
// gamma0's crossings, the full clockwise star of p, gamma0 reversed.
inline EllGraphDecomposition build_ellp(const Triangulation& T, const TaggedArc& g_in) {
    TaggedArc g = notch_last(g_in);
    if (!g.notched_at(1) || g.notched_at(0))
        throw std::runtime_error("build_ellp expects a singly notched arc");
    if (g.crossings.empty())
        throw std::runtime_error("gamma0 lies in T; use expand_when_plain_in_T");
    const auto& pt = T.point(g.endpoints[1].point);
    if (!pt.puncture) throw std::runtime_error("notched endpoint is not a puncture");
    for (const auto& sf : T.self_folded())
        if (sf.puncture == pt.name)
            throw std::runtime_error("p is enclosed by a self-folded triangle");
    auto anchor = T.corner_at(g.last_triangle, pt.name);
    if (!anchor) throw std::runtime_error("last_triangle has no corner at p");
    // the arm decomposition of Section 6 needs generic position: the ends of
    // gamma0 may not cross the star of p right before landing
    for (int a : pt.walk_arcs)
        if (a == g.crossings.back())
            throw std::runtime_error(
                "gamma0 reaches p through its own star; the gamma-symmetric "
                "decomposition does not apply");
    const auto wind = hook_wind(pt, *anchor, /*clockwise=*/true);
    std::vector<int> crossings = g.crossings;
    crossings.insert(crossings.end(), wind.begin(), wind.end());
    for (auto it = g.crossings.rbegin(); it != g.crossings.rend(); ++it)
        crossings.push_back(*it);
    EllGraphDecomposition d{
        &T,
        SnakeGraph(T, resolve_walk(T, crossings, g.first_triangle, g.first_triangle)),
        (int)g.crossings.size(),
        (int)wind.size(),
        pt.name,
        g};
    return d;
}

// All perfect matchings of G_{l_p} whose two arm restrictions agree under the
// arm isomorphism.
inline std::vector<Matching> gamma_symmetric_matchings(const EllGraphDecomposition& d) {
    const auto h1 = d.arm_edges(1, d.k, /*drop_ne_last=*/true, false);
    const std::set<int> h1set(h1.begin(), h1.end());
    const auto h2 = d.arm_edges(d.k + d.l + 1, d.d(), false, /*drop_sw_first=*/true);
    const std::set<int> h2set(h2.begin(), h2.end());
    const auto iso = d.arm_iso();
    std::vector<Matching> out;
    for (const auto& pm : d.lp.perfect_matchings()) {
        const std::set<int> P(pm.begin(), pm.end());
        bool symmetric = true;
        for (int e : pm) {
            if (h1set.count(e)) {
                const int m = iso.map_edge(e);
                if (m < 0 || !h2set.count(m) || !P.count(m)) {
                    symmetric = false;
                    break;
                }
            }
        }
        if (!symmetric) continue;
        // and conversely: the H2 part must pull back into P
        std::set<int> image;
        for (int e : pm)
            if (h1set.count(e)) {
                int m = iso.map_edge(e);
                if (m >= 0) image.insert(m);
            }
        for (int e : pm)
            if (h2set.count(e) && !image.count(e)) {
                symmetric = false;
                break;
            }
        if (symmetric) out.push_back(pm);
    }
    return out;
}

// Positivity of a perfect sub-matching on the tile range [lo, hi], computed in
// the subchain's own coordinates (its first tile gets relative orientation 1).
inline std::set<int> subchain_positivity(const SnakeGraph& g, const Matching& pm,
                                         int lo, int hi) {
    std::map<Vertex, int> vmatch;
    std::set<int> sub;
    for (int j = lo; j <= hi; ++j)
        for (int si = 0; si < 4; ++si) sub.insert(g.edge_of(j, (Side)si));
    for (int eid : pm) {
        if (!sub.count(eid)) continue;
        // keep only edges inside the subchain's vertex span
        vmatch[g.edge(eid).a] = eid;
        vmatch[g.edge(eid).b] = eid;
    }
    const int n = hi - lo + 1;
    Vertex cur = g.tile(lo).sw;
    const Vertex end = g.tile(hi).ne();
    std::vector<bool> used(n, false);
    std::vector<bool> down(n, false);
    for (int step = 0; step <= n; ++step) {
        auto it = vmatch.find(cur);
        if (it == vmatch.end())
            throw std::runtime_error("subchain walk stuck: restriction is not perfect");
        const Edge& e = g.edge(it->second);
        cur = (e.a == cur) ? e.b : e.a;
        if (step == n) break;
        int hit = -1;
        bool dd = false;
        for (int j = lo; j <= hi; ++j) {
            if (used[j - lo]) continue;
            if (cur == g.tile(j).nw()) {
                hit = j;
                dd = true;
                break;
            }
            if (cur == g.tile(j).se()) {
                hit = j;
                dd = false;
                break;
            }
        }
        if (hit < 0) throw std::runtime_error("subchain walk found no diagonal");
        used[hit - lo] = true;
        down[hit - lo] = dd;
        cur = dd ? g.tile(hit).se() : g.tile(hit).nw();
    }
    if (cur != end) throw std::runtime_error("subchain walk missed its end");
    std::set<int> pos;
    for (int j = lo; j <= hi; ++j) {
        // the ambient relative orientation of the tile (Lemma 12.4 consistency)
        if (down[j - lo] == (g.tile(j).rel == 1)) pos.insert(j);
    }
    return pos;
}

// Is the restriction of pm to tiles [lo, hi] a perfect matching of that
// subchain?
inline bool restriction_perfect(const SnakeGraph& g, const Matching& pm, int lo, int hi) {
    std::set<int> sub;
    for (int j = lo; j <= hi; ++j)
        for (int si = 0; si < 4; ++si) sub.insert(g.edge_of(j, (Side)si));
    std::set<Vertex> verts, covered;
    for (int j = lo; j <= hi; ++j) {
        const Tile& t = g.tile(j);
        verts.insert(t.sw);
        verts.insert(t.se());
        verts.insert(t.nw());
        verts.insert(t.ne());
    }
    for (int eid : pm) {
        if (!sub.count(eid)) continue;
        const Edge& e = g.edge(eid);
        if (!verts.count(e.a) || !verts.count(e.b)) continue;
        if (covered.count(e.a) || covered.count(e.b)) return false;
        covered.insert(e.a);
        covered.insert(e.b);
    }
    return covered == verts;
}

struct BarredMonomials {
    Monomial xbar, ybar;
    int arm = 1;  // which restriction was perfect (1 preferred when both)
};

inline Monomial matching_weight(const Triangulation& T, const SnakeGraph& g,
                                const Matching& pm, const VariableAssignment& va) {
    Monomial m;
    for (int eid : pm) m *= va.x_of(g.edge(eid).label);
    return m;
}

inline Monomial positivity_coefficient(const Triangulation& T, const SnakeGraph& g,
                                       const std::set<int>& positive,
                                       const VariableAssignment& va) {
    Monomial m;
    for (int j : positive) m *= va.y_of_positive(g.tile(j).diag);
    return m;
}

inline BarredMonomials barred_monomials(const EllGraphDecomposition& d, const Matching& pm,
                                        const VariableAssignment& va) {
    const bool p1 = restriction_perfect(d.lp, pm, 1, d.k);
    const bool p2 = restriction_perfect(d.lp, pm, d.k + d.l + 1, d.d());
    if (!p1 && !p2)
        throw std::runtime_error("neither restriction of a gamma-symmetric matching "
                                 "is perfect (invariant violation)");
    const int lo = p1 ? 1 : d.k + d.l + 1;
    const int hi = p1 ? d.k : d.d();
    std::set<int> subedges;
    for (int j = lo; j <= hi; ++j)
        for (int si = 0; si < 4; ++si) subedges.insert(d.lp.edge_of(j, (Side)si));
    Matching restr;
    std::set<Vertex> verts;
    for (int j = lo; j <= hi; ++j) {
        const Tile& t = d.lp.tile(j);
        verts.insert(t.sw);
        verts.insert(t.se());
        verts.insert(t.nw());
        verts.insert(t.ne());
    }
    for (int eid : pm) {
        if (!subedges.count(eid)) continue;
        const Edge& e = d.lp.edge(eid);
        if (verts.count(e.a) && verts.count(e.b)) restr.push_back(eid);
    }
    BarredMonomials out;
    out.arm = p1 ? 1 : 2;
    const Monomial xP = matching_weight(*d.T, d.lp, pm, va);
    const Monomial xR = matching_weight(*d.T, d.lp, restr, va);
    out.xbar = xP / xR;
    const Monomial yP =
        positivity_coefficient(*d.T, d.lp, d.lp.positivity(pm), va);
    const Monomial yR =
        positivity_coefficient(*d.T, d.lp, subchain_positivity(d.lp, pm, lo, hi), va);
    out.ybar = yP / yR;
    return out;
}

// The restriction bijection Phi of a singly notched arc:
// E(G_k)-matchings restrict to tiles 1..k+l dropping E(G_k);
// S(G_k)-matchings restrict to tiles k+1..2k+l, drop the parity edge, and are
// carried over by the reversal isomorphism onto the loop graph's base.
// Orientation of the restriction bijection: the paper's zig-zag end of
// G_{l_p} can sit at tile k (restrict to the first k+l tiles, loop graph of
// the notch-last direction) or at tile k+l+1 (restrict to the last k+l tiles,
// loop graph of the notch-first direction).
struct PhiContext {
    const EllGraphDecomposition* d = nullptr;
    const LoopGraph* lg = nullptr;
    int range_lo = 1, range_hi = 0;
    int cut_tile = 0;    // l_p tile carrying the cut-role boundary edges
    int next_tile = 0;   // l_p tile supplying the parity edge b
    int ecut = -1, eother = -1;  // cut-role edges at cut_tile
};

inline std::optional<PhiContext> make_phi_context(const EllGraphDecomposition& d,
                                                  const LoopGraph& lg, bool at_k) {
    PhiContext c;
    c.d = &d;
    c.lg = &lg;
    const int k = d.k, l = d.l;
    if (at_k) {
        c.range_lo = 1;
        c.range_hi = k + l;
        c.cut_tile = k;
        c.next_tile = k + l + 1;
    } else {
        c.range_lo = k + 1;
        c.range_hi = 2 * k + l;
        c.cut_tile = k + l + 1;
        c.next_tile = k;
    }
    if (lg.cuts().size() != 1) return std::nullopt;
    const Slot cut_slot = lg.base().edge(lg.cuts()[0].far_edge).slot;
    for (int si = 0; si < 4; ++si) {
        const int e = d.lp.edge_of(c.cut_tile, (Side)si);
        if (d.lp.edge(e).occurrences > 1) continue;
        if (d.lp.edge(e).slot == cut_slot)
            c.ecut = e;
        else
            c.eother = e;
    }
    if (c.ecut < 0 || c.eother < 0) return std::nullopt;
    return c;
}

inline Matching phi_single(const PhiContext& c, const Matching& pm) {
    const auto& d = *c.d;
    const auto& lg = *c.lg;
    const std::set<int> P(pm.begin(), pm.end());
    if (!P.count(c.ecut) && !P.count(c.eother))
        throw std::runtime_error("gamma-symmetric matching misses both cut-role edges");
    std::set<Vertex> rangeverts;
    for (int j = c.range_lo; j <= c.range_hi; ++j) {
        const Tile& t = d.lp.tile(j);
        rangeverts.insert(t.sw);
        rangeverts.insert(t.se());
        rangeverts.insert(t.nw());
        rangeverts.insert(t.ne());
    }
    std::set<int> nextsides;
    for (int si = 0; si < 4; ++si) nextsides.insert(d.lp.edge_of(c.next_tile, (Side)si));
    std::vector<int> cand;
    for (int e : pm) {
        const Edge& ed = d.lp.edge(e);
        if (rangeverts.count(ed.a) && rangeverts.count(ed.b)) cand.push_back(e);
    }
    const std::size_t expected = d.k + d.l;  // glued matching size with one cut
    if (P.count(c.ecut)) cand.erase(std::find(cand.begin(), cand.end(), c.ecut));
    if (cand.size() == expected + 1) {
        auto it = std::find_if(cand.begin(), cand.end(),
                               [&](int e) { return nextsides.count(e); });
        if (it == cand.end())
            throw std::runtime_error("phi_single: no parity edge to drop");
        cand.erase(it);
    }
    if (cand.size() != expected)
        throw std::runtime_error("phi_single: image has the wrong size");
    ChainMap fwd{&d.lp, &lg.base(), c.range_lo, c.range_hi, 1, d.k + d.l, false};
    std::vector<int> glued;
    for (int e : cand) {
        const int m = fwd.map_edge(e);
        if (m < 0) throw std::runtime_error("phi_single: edge outside the chain map");
        glued.push_back(lg.glued_of_base(m));
    }
    std::sort(glued.begin(), glued.end());
    glued.erase(std::unique(glued.begin(), glued.end()), glued.end());
    std::set<Vertex> covered, all;
    for (const auto& ge : lg.glued_edges()) {
        all.insert(ge.a);
        all.insert(ge.b);
    }
    for (int gid : glued)
        for (const Vertex v : {lg.glued_edge(gid).a, lg.glued_edge(gid).b}) {
            if (covered.count(v))
                throw std::runtime_error("phi_single image is not a matching");
            covered.insert(v);
        }
    if (covered != all) throw std::runtime_error("phi_single image is not perfect");
    return glued;
}

struct MswSingleReport {
    int gamma_symmetric_count = 0;
    int good_count = 0;
    bool bijective = false;
    bool monomials_match = false;
    Laurent msw_value;  // Theorem 6.4 expansion
};

inline MswSingleReport msw_check_single(const Triangulation& T, const TaggedArc& g) {
    const auto d = build_ellp(T, g);
    const VariableAssignment va(T);
    auto sym = gamma_symmetric_matchings(d);

    // pick the orientation whose cut-role edges meet every symmetric matching
    TaggedArc fwd_arc = notch_last(g);
    TaggedArc rev_arc = fwd_arc;
    std::swap(rev_arc.endpoints[0], rev_arc.endpoints[1]);
    std::reverse(rev_arc.crossings.begin(), rev_arc.crossings.end());
    std::swap(rev_arc.first_triangle, rev_arc.last_triangle);
    std::optional<LoopGraph> lg;
    std::optional<PhiContext> ctx;
    for (bool at_k : {true, false}) {
        lg.emplace(T, at_k ? fwd_arc : rev_arc);
        ctx = make_phi_context(d, *lg, at_k);
        if (!ctx) continue;
        bool all_hit = true;
        for (const auto& pm : sym) {
            const std::set<int> P(pm.begin(), pm.end());
            if (!P.count(ctx->ecut) && !P.count(ctx->eother)) {
                all_hit = false;
                break;
            }
        }
        if (all_hit) break;
        ctx.reset();
    }
    if (!ctx) throw std::runtime_error("no orientation supports the restriction bijection");

    auto good = lg->good_matchings();
    MswSingleReport rep;
    rep.gamma_symmetric_count = (int)sym.size();
    rep.good_count = (int)good.size();
    std::map<Matching, std::pair<Monomial, Monomial>> good_monos;
    for (const auto& gm : good) {
        Matching key = gm.glued;
        std::sort(key.begin(), key.end());
        good_monos[key] = {weight_monomial(*lg, gm, va), coefficient_monomial(*lg, gm, va)};
    }
    std::set<Matching> images;
    bool monos_ok = true;
    Laurent sum;
    for (const auto& pm : sym) {
        auto bars = barred_monomials(d, pm, va);
        Matching img = phi_single(*ctx, pm);
        images.insert(img);
        auto it = good_monos.find(img);
        if (it == good_monos.end()) {
            monos_ok = false;
        } else if (!(it->second.first == bars.xbar) ||
                   !(it->second.second == bars.ybar)) {
            monos_ok = false;
        }
        sum += Laurent::monomial(bars.xbar * bars.ybar);
    }
    rep.bijective = images.size() == sym.size() && sym.size() == good.size();
    rep.monomials_match = monos_ok;
    const Monomial cg = crossing_monomial(va, fwd_arc.crossings);
    const Monomial cl = crossing_monomial(va, d.lp.walk().crossings);
    rep.msw_value = sum.divided_by(cl / cg);
    return rep;
}

// ---------------------------------------------------------------------------
// Doubly notched arcs: gamma-compatible pairs and Theorem 6.9.

struct CompatiblePair {
    Matching pp, pq;       // gamma-symmetric matchings of l_p and l_q
    int arm_p = 0, arm_q = 0;
    Monomial xbarbar, ybarbar;
};

struct EllPair {
    EllGraphDecomposition dp, dq;  // l_p (gamma directed q->p), l_q (p->q)
};

inline EllPair build_ellpair(const Triangulation& T, const TaggedArc& g) {
    if (!(g.notched_at(0) && g.notched_at(1)))
        throw std::runtime_error("build_ellpair expects a doubly notched arc");
    TaggedArc to_q = g;           // notch at q last
    to_q.endpoints[0].tag = Tag::plain;
    TaggedArc to_p = notch_last(g);  // reversed: ends at the p endpoint
    to_p = [&] {
        TaggedArc r = g;
        std::swap(r.endpoints[0], r.endpoints[1]);
        std::reverse(r.crossings.begin(), r.crossings.end());
        std::swap(r.first_triangle, r.last_triangle);
        r.endpoints[0].tag = Tag::plain;
        return r;
    }();
    return EllPair{build_ellp(T, to_p), build_ellp(T, to_q)};
}

// Convert a perfect restriction of pm on tiles [lo,hi] of g into the edge set
// of the reference middle (lg tiles refLo..refHi), forward or reversed.
inline std::set<int> restriction_in_reference(const SnakeGraph& g, const Matching& pm,
                                              int lo, int hi, const SnakeGraph& ref,
                                              int refLo, int refHi, bool reversed) {
    ChainMap map{&g, &ref, lo, hi, refLo, refHi, reversed};
    std::set<Vertex> verts;
    for (int j = lo; j <= hi; ++j) {
        const Tile& t = g.tile(j);
        verts.insert(t.sw);
        verts.insert(t.se());
        verts.insert(t.nw());
        verts.insert(t.ne());
    }
    std::set<int> out;
    for (int e : pm) {
        const Edge& ed = g.edge(e);
        if (!verts.count(ed.a) || !verts.count(ed.b)) continue;
        const int m = map.map_edge(e);
        if (m >= 0) out.insert(m);
    }
    return out;
}

struct MswDoubleReport {
    int pair_count = 0;
    int good_count = 0;
    bool monomial_bijection = false;  // multisets of (x,y) pairs coincide
    bool class_counts_match = false;
    Laurent msw_value;  // Theorem 6.9 expansion
};

inline MswDoubleReport msw_check_double(const Triangulation& T, const TaggedArc& g) {
    const auto ell = build_ellpair(T, g);
    const auto& dp = ell.dp;
    const auto& dq = ell.dq;
    TaggedArc dir = g;  // directed p -> q (endpoint 0 = p)
    LoopGraph lg(T, dir);
    const VariableAssignment va(T);
    const int k = dq.k;
    const int lp0 = dp.l;  // degree of p
    // reference middle: lg tiles lp0+1 .. lp0+k (gamma0 directed p->q)
    const int refLo = lp0 + 1, refHi = lp0 + k;

    auto sym_p = gamma_symmetric_matchings(dp);
    auto sym_q = gamma_symmetric_matchings(dq);

    auto arm_restrictions = [&](const EllGraphDecomposition& d, const Matching& pm,
                                bool is_p) {
        // returns list of (arm, reference edge set); arm 1 and/or 2
        std::vector<std::pair<int, std::set<int>>> out;
        const int K = d.k, L = d.l, D = d.d();
        if (restriction_perfect(d.lp, pm, 1, K)) {
            // l_q arm1 = gamma0 p->q forward; l_p arm1 = gamma0 q->p reversed
            out.push_back({1, restriction_in_reference(d.lp, pm, 1, K, lg.base(), refLo,
                                                       refHi, /*reversed=*/is_p)});
        }
        if (restriction_perfect(d.lp, pm, K + L + 1, D)) {
            out.push_back({2, restriction_in_reference(d.lp, pm, K + L + 1, D, lg.base(),
                                                       refLo, refHi,
                                                       /*reversed=*/!is_p)});
        }
        return out;
    };

    std::vector<CompatiblePair> pairs;
    for (const auto& pp : sym_p) {
        const auto rp = arm_restrictions(dp, pp, true);
        for (const auto& pq : sym_q) {
            const auto rq = arm_restrictions(dq, pq, false);
            std::optional<std::pair<int, int>> witness;
            for (const auto& [ai, si] : rp) {
                for (const auto& [aj, sj] : rq)
                    if (si == sj) {
                        witness = {ai, aj};
                        break;
                    }
                if (witness) break;
            }
            if (!witness) continue;
            CompatiblePair cp;
            cp.pp = pp;
            cp.pq = pq;
            cp.arm_p = witness->first;
            cp.arm_q = witness->second;
            // x/y of the chosen restriction, computed inside l_p
            const int lo = cp.arm_p == 1 ? 1 : dp.k + dp.l + 1;
            const int hi = cp.arm_p == 1 ? dp.k : dp.d();
            std::set<Vertex> verts;
            for (int j = lo; j <= hi; ++j) {
                const Tile& t = dp.lp.tile(j);
                verts.insert(t.sw);
                verts.insert(t.se());
                verts.insert(t.nw());
                verts.insert(t.ne());
            }
            Matching restr;
            for (int e : pp) {
                const Edge& ed = dp.lp.edge(e);
                if (verts.count(ed.a) && verts.count(ed.b)) restr.push_back(e);
            }
            const Monomial xr = matching_weight(T, dp.lp, restr, va);
            const Monomial yr = positivity_coefficient(
                T, dp.lp, subchain_positivity(dp.lp, pp, lo, hi), va);
            const Monomial xp = matching_weight(T, dp.lp, pp, va);
            const Monomial xq = matching_weight(T, dq.lp, pq, va);
            const Monomial yp =
                positivity_coefficient(T, dp.lp, dp.lp.positivity(pp), va);
            const Monomial yq =
                positivity_coefficient(T, dq.lp, dq.lp.positivity(pq), va);
            const Monomial x3 = xr * xr * xr, y3 = yr * yr * yr;
            cp.xbarbar = (xp * xq) / x3;
            cp.ybarbar = (yp * yq) / y3;
            pairs.push_back(std::move(cp));
        }
    }

    MswDoubleReport rep;
    rep.pair_count = (int)pairs.size();
    auto good = lg.good_matchings();
    rep.good_count = (int)good.size();
    // multiset comparison of monomial pairs = the executable content of the
    // bijection Phi of Prop 6.10 (pairs are distinct, so multiset equality
    // determines the bijection)
    std::multiset<std::pair<std::string, std::string>> left, right;
    for (const auto& cp : pairs)
        left.insert({cp.xbarbar.str(), cp.ybarbar.str()});
    Laurent sum;
    for (const auto& cp : pairs) sum += Laurent::monomial(cp.xbarbar * cp.ybarbar);
    for (const auto& gm : good)
        right.insert({weight_monomial(lg, gm, va).str(),
                      coefficient_monomial(lg, gm, va).str()});
    rep.monomial_bijection = (left == right);
    // the four classes of Prop 6.10: membership of the cut-role edge in P_p
    // (resp. P_q) corresponds to a right-or-centre cut at that end
    auto role_edge = [&](const SnakeGraph& ell, int tile, const Slot& slot) {
        for (int si = 0; si < 4; ++si) {
            const int e = ell.edge_of(tile, (Side)si);
            if (ell.edge(e).occurrences == 1 && ell.edge(e).slot == slot) return e;
        }
        throw std::runtime_error("cut-role edge not found in the ell graph");
    };
    int ep = -1, eq = -1;
    for (const auto& c : lg.cuts()) {
        const Slot slot = lg.base().edge(c.far_edge).slot;
        if (c.at_start)
            ep = role_edge(dp.lp, dp.k + c.k, slot);
        else
            eq = role_edge(dq.lp, c.k - lp0, slot);
    }
    std::multiset<std::string> classes_pairs, classes_good;
    for (const auto& cp : pairs) {
        const std::set<int> Pp(cp.pp.begin(), cp.pp.end());
        const std::set<int> Pq(cp.pq.begin(), cp.pq.end());
        classes_pairs.insert(std::string(Pp.count(ep) ? "RC" : "L") +
                             (Pq.count(eq) ? "RC" : "L"));
    }
    for (const auto& gm : good) {
        std::string c;
        for (auto cl : gm.classes) c += (cl == CutClass::left ? "L" : "RC");
        classes_good.insert(c);
    }
    rep.class_counts_match = (classes_pairs == classes_good);
    const Monomial cg = crossing_monomial(va, dq.gamma.crossings);
    const Monomial clp = crossing_monomial(va, dp.lp.walk().crossings);
    const Monomial clq = crossing_monomial(va, dq.lp.walk().crossings);
    rep.msw_value = sum.divided_by((clp * clq) / (cg * cg * cg));
    return rep;
}

}  // namespace cluloop
