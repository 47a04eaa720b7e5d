#include <catch2/catch_amalgamated.hpp>

#include "cluloop/expansion.hpp"
#include "paper_terms.hpp"
#include "util.hpp"

using namespace cluloop;

TEST_CASE("figure 12: the doubly notched example, all 12 terms verbatim") {
    auto T = load_surface("figure12_surface.json");
    REQUIRE(T.valid());
    auto g = load_arc("figure12_arc.json", T);
    auto e = expand(T, g);
    Monomial cross;
    for (int i : {3, 4, 5, 6, 7, 8}) cross.mul_var(xvar(i), 1);
    CHECK(e.cross == cross);
    REQUIRE(e.terms.size() == 12);
    const Laurent want = sum_of_terms(figure12_terms()).divided_by(cross);
    CHECK(e.value == want);
}

TEST_CASE("figure 10: the singly notched example, reconstructed terms") {
    auto T = load_surface("figure10_surface.json");
    REQUIRE(T.valid());
    auto g = load_arc("figure10_arc.json", T);
    auto e = expand(T, g);
    Monomial cross;
    for (int i : {1, 2, 3, 4, 5, 6}) cross.mul_var(xvar(i), 1);
    CHECK(e.cross == cross);
    REQUIRE(e.terms.size() == 15);
    const Laurent want = sum_of_terms(figure10_terms()).divided_by(cross);
    CHECK(e.value == want);
}

TEST_CASE("figure 10: x_{l_p} = x_gamma * x_{gamma0}") {
    auto T = load_surface("figure10_surface.json");
    auto g = load_arc("figure10_arc.json", T);
    auto g0 = load_arc("figure10_arc_plain.json", T);
    auto eg = expand(T, g);
    auto eg0 = expand(T, g0);
    // l_p: from p2, parallel to gamma0 reversed, once around p1, back
    TaggedArc lp;
    lp.name = "l_p";
    lp.endpoints[0] = {"p2", Tag::plain};
    lp.endpoints[1] = {"p2", Tag::plain};
    lp.crossings = {T.id_of("6"), T.id_of("5"), T.id_of("4"), T.id_of("1"),
                    T.id_of("2"), T.id_of("3"), T.id_of("4"), T.id_of("5"),
                    T.id_of("6")};
    lp.first_triangle = 5;
    lp.last_triangle = 5;
    auto elp = expand(T, lp);
    CHECK(elp.terms.size() == 75);
    CHECK(eg.value * eg0.value == elp.value);
}

TEST_CASE("hook direction does not change the expansion") {
    auto T10 = load_surface("figure10_surface.json");
    auto g10 = load_arc("figure10_arc.json", T10);
    CHECK(expand(T10, g10, true).value == expand(T10, g10, false).value);
    auto T12 = load_surface("figure12_surface.json");
    auto g12 = load_arc("figure12_arc.json", T12);
    CHECK(expand(T12, g12, true).value == expand(T12, g12, false).value);
}

TEST_CASE("arc direction does not change the expansion") {
    auto T = load_surface("figure10_surface.json");
    auto g = load_arc("figure10_arc.json", T);
    TaggedArc rev = g;
    std::swap(rev.endpoints[0], rev.endpoints[1]);
    std::reverse(rev.crossings.begin(), rev.crossings.end());
    std::swap(rev.first_triangle, rev.last_triangle);
    CHECK(expand(T, rev).value == expand(T, g).value);
}

TEST_CASE("d=1: quadrilateral exchange relation") {
    auto T = load_surface("figure10_surface.json");
    // plain arc crossing only arc 4: quadrilateral sides 1,3 / 14,5
    TaggedArc d1;
    d1.name = "flip4";
    d1.endpoints[0] = {"p1", Tag::plain};
    d1.endpoints[1] = {"m3", Tag::plain};
    d1.crossings = {T.id_of("4")};
    d1.first_triangle = 0;
    d1.last_triangle = 3;
    auto e = expand(T, d1);
    REQUIRE(e.terms.size() == 2);
    Laurent want;
    {
        Monomial a;
        a.mul_var(xvar(1), 1);
        a.mul_var(xvar(14), 1);
        want.add_term(a, 1);
        Monomial b;
        b.mul_var(xvar(3), 1);
        b.mul_var(xvar(5), 1);
        b.mul_var(yvar(4), 1);
        want.add_term(b, 1);
    }
    CHECK(e.value == want.divided_by(Monomial::variable(xvar(4))));
}

TEST_CASE("positivity and term count") {
    auto T = load_surface("figure12_surface.json");
    auto g = load_arc("figure12_arc.json", T);
    auto e = expand(T, g);
    const Laurent numerator = e.value.divided_by(e.cross.inverse());
    for (const auto& [m, c] : numerator.terms()) CHECK(c > 0);
    LoopGraph lg(T, g);
    CHECK(lg.good_matchings().size() == e.terms.size());
}

TEST_CASE("main theorem hypothesis errors") {
    auto T = load_surface("figure10_surface.json");
    TaggedArc inT;
    inT.name = "arc-of-T";
    inT.endpoints[0] = {"p1", Tag::notched};
    inT.endpoints[1] = {"m4", Tag::plain};
    inT.crossings = {};
    inT.first_triangle = 0;
    inT.last_triangle = 0;
    CHECK_THROWS_WITH(expand(T, inT), Catch::Matchers::ContainsSubstring("reduction"));
}
