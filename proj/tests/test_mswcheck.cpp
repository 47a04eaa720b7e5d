#include <catch2/catch_amalgamated.hpp>

#include "cluloop/mswcheck.hpp"
#include "notched_corpus.hpp"
#include "util.hpp"

using namespace cluloop;

TEST_CASE("figure 10: l_p decomposition and Prop 6.5") {
    auto T = load_surface("figure10_surface.json");
    auto g = load_arc("figure10_arc.json", T);
    auto d = build_ellp(T, g);
    CHECK(d.k == 3);
    CHECK(d.l == 3);
    CHECK(d.d() == 9);
    CHECK(d.lp.perfect_matchings().size() == 75);
    // the two gamma-subgraphs are isomorphic: the arm map carries every edge
    auto iso = d.arm_iso();
    for (int j = 1; j <= d.k; ++j)
        for (int si = 0; si < 4; ++si)
            CHECK(iso.map_edge(d.lp.edge_of(j, (Side)si)) >= 0);
    auto rep = msw_check_single(T, g);
    CHECK(rep.gamma_symmetric_count == 15);
    CHECK(rep.good_count == 15);
    CHECK(rep.bijective);
    CHECK(rep.monomials_match);
    CHECK(rep.msw_value == expand(T, g).value);
}

TEST_CASE("figure 12: compatible pairs and Prop 6.10") {
    auto T = load_surface("figure12_surface.json");
    auto g = load_arc("figure12_arc.json", T);
    auto rep = msw_check_double(T, g);
    CHECK(rep.pair_count == 12);
    CHECK(rep.good_count == 12);
    CHECK(rep.monomial_bijection);
    CHECK(rep.class_counts_match);
    CHECK(rep.msw_value == expand(T, g).value);
}

TEST_CASE("generated corpus: bijections and msw == expand everywhere") {
    int singles = 0, doubles = 0;
    for (const auto& c : notched_corpus()) {
        INFO(c.name);
        auto e = expand(c.surface, c.arc);
        if (!c.doubly) {
            auto rep = msw_check_single(c.surface, c.arc);
            CHECK(rep.gamma_symmetric_count == rep.good_count);
            CHECK(rep.bijective);
            CHECK(rep.monomials_match);
            CHECK(rep.msw_value == e.value);
            ++singles;
        } else {
            auto rep = msw_check_double(c.surface, c.arc);
            CHECK(rep.pair_count == rep.good_count);
            CHECK(rep.monomial_bijection);
            CHECK(rep.class_counts_match);
            CHECK(rep.msw_value == e.value);
            ++doubles;
        }
    }
    CHECK(singles + doubles >= 20);
    CHECK(doubles >= 3);
}

TEST_CASE("gamma-symmetric matchings contain a cut-role edge") {
    auto T = load_surface("figure10_surface.json");
    auto g = load_arc("figure10_arc.json", T);
    auto d = build_ellp(T, g);
    LoopGraph lg(T, notch_last(g));
    auto ctx = make_phi_context(d, lg, true);
    REQUIRE(ctx.has_value());
    auto sym = gamma_symmetric_matchings(d);
    int total = (int)d.lp.perfect_matchings().size();
    CHECK((int)sym.size() < total);  // some matching is not symmetric
    for (const auto& pm : sym) {
        std::set<int> P(pm.begin(), pm.end());
        CHECK((P.count(ctx->ecut) || P.count(ctx->eother)));
    }
}

TEST_CASE("barred monomials multiply back to the full weight") {
    auto T = load_surface("figure10_surface.json");
    auto g = load_arc("figure10_arc.json", T);
    auto d = build_ellp(T, g);
    VariableAssignment va(T);
    for (const auto& pm : gamma_symmetric_matchings(d)) {
        auto bars = barred_monomials(d, pm, va);
        const int lo = bars.arm == 1 ? 1 : d.k + d.l + 1;
        const int hi = bars.arm == 1 ? d.k : d.d();
        std::set<Vertex> verts;
        for (int j = lo; j <= hi; ++j) {
            const Tile& t = d.lp.tile(j);
            verts.insert(t.sw);
            verts.insert(t.se());
            verts.insert(t.nw());
            verts.insert(t.ne());
        }
        Matching restr;
        for (int e : pm) {
            const Edge& ed = d.lp.edge(e);
            if (verts.count(ed.a) && verts.count(ed.b)) restr.push_back(e);
        }
        CHECK(bars.xbar * matching_weight(T, d.lp, restr, va) ==
              matching_weight(T, d.lp, pm, va));
    }
}

TEST_CASE("plain degenerate call is rejected") {
    auto T = load_surface("figure10_surface.json");
    auto g = load_arc("figure10_arc_plain.json", T);
    CHECK_THROWS(build_ellp(T, g));
}
