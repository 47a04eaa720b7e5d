#pragma once

// The expansion formula: crossing monomial, weight and coefficient monomials
// of good matchings, and the Laurent expansion of x_gamma, together with the
// tag-reversal normalization and the gamma0-in-T reduction.

#include <optional>
#include <string>
#include <vector>

#include "cluloop/laurent.hpp"
#include "cluloop/loopgraph.hpp"

namespace cluloop {

// Per-label variables: x_tau is x_i, or x_i * x_j when tau is the loop of a
// self-folded triangle with radius tau_j; y_tau is y_i. Boundary labels get
// their own formal x variables.
struct VariableAssignment {
    const Triangulation* T = nullptr;

    explicit VariableAssignment(const Triangulation& t) : T(&t) {}

    Monomial x_of(int label) const {
        Monomial m = Monomial::variable(xvar(label));
        if (T->is_interior(label) && T->is_monogon_loop(label))
            m.mul_var(xvar(T->radius_of_loop(label)), 1);
        return m;
    }
    // y contribution of a positive diagonal labelled tau: y_tau, times
    // y_{tau^(p)}^{-1} when tau is a radius; tau^(p) carries the loop's index.
    Monomial y_of_positive(int label) const {
        Monomial m = Monomial::variable(yvar(label));
        if (T->is_radius(label)) m.mul_var(yvar(T->loop_of_radius(label)), -1);
        return m;
    }
};

inline Monomial crossing_monomial(const VariableAssignment& va,
                                  const std::vector<int>& crossings) {
    Monomial m;
    for (int c : crossings) m *= va.x_of(c);
    return m;
}

inline Monomial weight_monomial(const LoopGraph& lg, const GoodMatching& p,
                                const VariableAssignment& va) {
    Monomial m;
    for (int gid : p.glued) m *= va.x_of(lg.glued_edge(gid).label);
    return m;
}

inline Monomial coefficient_monomial(const LoopGraph& lg, const GoodMatching& p,
                                     const VariableAssignment& va) {
    Monomial m;
    for (int j : p.height) m *= va.y_of_positive(lg.base().tile(j).diag);
    return m;
}

struct ExpansionTerm {
    Monomial weight;       // x(P)
    Monomial coefficient;  // y(P)
    GoodMatching matching;
};

struct Expansion {
    Monomial cross;
    std::vector<ExpansionTerm> terms;
    Laurent value;  // (1/cross) * sum x(P) y(P)
};

inline Expansion expand_loop_graph(const LoopGraph& lg, const VariableAssignment& va) {
    Expansion e;
    e.cross = crossing_monomial(va, lg.base().walk().crossings);
    Laurent num;
    for (const auto& gm : lg.good_matchings()) {
        ExpansionTerm t;
        t.weight = weight_monomial(lg, gm, va);
        t.coefficient = coefficient_monomial(lg, gm, va);
        t.matching = gm;
        num += Laurent::monomial(t.weight * t.coefficient);
        e.terms.push_back(std::move(t));
    }
    e.value = num.divided_by(e.cross);
    return e;
}

// Main Theorem hypotheses, checked up front with precise errors.
inline void check_expand_hypotheses(const Triangulation& T, const TaggedArc& g) {
    if (g.crossings.empty())
        throw std::runtime_error(
            "underlying plain arc lies in the triangulation; use the "
            "x_{l_p} = x_gamma * x_{gamma0} reduction (expand_when_plain_in_T)");
    if (g.notched_at(0) && g.notched_at(1) && !T.has_boundary() &&
        T.punctures().size() == 2)
        throw std::runtime_error(
            "formula not established: doubly notched arc on a twice-punctured "
            "closed surface");
}

inline Expansion expand(const Triangulation& T, const TaggedArc& g,
                        bool clockwise_hooks = true) {
    check_expand_hypotheses(T, g);
    LoopGraph lg(T, g, clockwise_hooks);
    VariableAssignment va(T);
    return expand_loop_graph(lg, va);
}

// Specialize all boundary variables to 1.
inline Laurent specialize_boundary(const Triangulation& T, const Laurent& p) {
    std::map<VarCode, Laurent> assign;
    for (int b = T.arc_count() + 1; b <= T.label_count(); ++b)
        assign[xvar(b)] = Laurent(1);
    return p.specialized(assign);
}

// --- tag-reversal normalization ---------------------------------------------

struct TagSymmetry {
    TaggedArc arc;                   // gamma-prime over the same triangulation
    std::map<int, int> arc_relabel;  // variable index i of T <-> relabel[i] of T'
};

// Reversing the tagging at every puncture fixes the ideal triangulation as a
// set of plain curves: at a puncture of degree >= 2 the reversed notches all
// revert to plain taggings, and at a self-folded puncture the plain radius and
// the notched radius trade places, which exchanges the radius and loop
// indices. The associated cluster variables are read back through the
// relabeling; gamma itself gets its puncture-incident taggings flipped.
inline TagSymmetry normalize_by_tag_symmetry(const Triangulation& T, const TaggedArc& g) {
    TagSymmetry out;
    for (int a = 1; a <= T.arc_count(); ++a) out.arc_relabel[a] = a;
    for (const auto& sf : T.self_folded()) {
        const int r = T.id_of(sf.radius), l = T.id_of(sf.loop);
        out.arc_relabel[r] = l;
        out.arc_relabel[l] = r;
    }
    out.arc = g;
    for (int e = 0; e < 2; ++e) {
        const auto& pt = T.point(g.endpoints[e].point);
        if (pt.puncture)
            out.arc.endpoints[e].tag =
                g.endpoints[e].tag == Tag::plain ? Tag::notched : Tag::plain;
    }
    return out;
}

// --- gamma0 in T: x_gamma = x_{l_p} / x_{gamma0} ------------------------------

// Crossing data of l_p (the plain arc enclosing gamma0 and p in a monogon)
// when gamma0 is an arc of T ending at puncture p: the clockwise walk over
// star(p) minus gamma0's end, anchored at the triangles flanking gamma0.
inline TaggedArc ellp_of_triangulation_arc(const Triangulation& T, int gamma0,
                                           const std::string& p,
                                           const std::string& other_end) {
    const auto& pt = T.point(p);
    const int l = (int)pt.walk_arcs.size();
    int t = -1;
    for (int i = 0; i < l; ++i)
        if (pt.walk_arcs[i] == gamma0) t = i;
    if (t < 0)
        throw std::runtime_error("gamma0 is not incident to the puncture");
    TaggedArc lp;
    lp.name = "l_p";
    lp.endpoints[0] = {other_end, Tag::plain};
    lp.endpoints[1] = {other_end, Tag::plain};
    for (int s = 1; s < l; ++s)
        lp.crossings.push_back(pt.walk_arcs[((t - s) % l + l) % l]);
    lp.first_triangle = pt.corners[t].tri;
    lp.last_triangle = pt.corners[(t + 1) % l].tri;
    return lp;
}

struct PlainInTResult {
    Laurent value;        // x_gamma
    Expansion ellp;       // the l_p expansion it was derived from
    int gamma0_id = 0;
};

inline PlainInTResult expand_when_plain_in_T(const Triangulation& T, const TaggedArc& g) {
    if (!(g.notched_at(0) ^ g.notched_at(1)))
        throw std::runtime_error("expand_when_plain_in_T expects a singly notched arc");
    if (!g.crossings.empty())
        throw std::runtime_error("expand_when_plain_in_T expects gamma0 in T (no crossings)");
    const int pe = g.notched_at(0) ? 0 : 1;
    const std::string& p = g.endpoints[pe].point;
    const std::string& s = g.endpoints[1 - pe].point;
    // identify gamma0: the arc of T with one end at p that is a side of both
    // named triangles
    int gid = 0;
    for (int a = 1; a <= T.arc_count(); ++a) {
        bool in_first = false, in_last = false;
        for (const auto& sl : T.slots_of(a)) {
            in_first |= (sl.tri == g.first_triangle);
            in_last |= (sl.tri == g.last_triangle);
        }
        if (!in_first || !in_last) continue;
        const auto& star = T.point(p).walk_arcs;
        if (std::find(star.begin(), star.end(), a) != star.end()) {
            if (gid && gid != a)
                throw std::runtime_error("gamma0 identification is ambiguous");
            gid = a;
        }
    }
    if (!gid) throw std::runtime_error("cannot identify gamma0 among the arcs of T");
    for (const auto& sf : T.self_folded())
        if (sf.puncture == p)
            throw std::runtime_error("p is enclosed by a self-folded triangle; "
                                     "normalize by tag reversal first");
    TaggedArc lp = ellp_of_triangulation_arc(T, gid, p, s);
    PlainInTResult out;
    out.gamma0_id = gid;
    out.ellp = expand(T, lp);
    VariableAssignment va(T);
    out.value = out.ellp.value.divided_by(va.x_of(gid));
    return out;
}

}  // namespace cluloop
