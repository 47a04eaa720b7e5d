#include <catch2/catch_amalgamated.hpp>

#include "cluloop/expansion.hpp"
#include "cluloop/generator.hpp"
#include "cluloop/poset.hpp"
#include "util.hpp"

using namespace cluloop;

TEST_CASE("snake quiver basics") {
    auto P = gen::polygon(4, gen::Shape::fan);
    auto arc = gen::polygon_chord(P, 1, 3);
    SnakeGraph g1(P.surface, resolve_walk(P.surface, arc.crossings, arc.first_triangle,
                                          arc.last_triangle));
    auto q1 = quiver_of_snake(g1);
    CHECK(q1.vertices == 1);
    CHECK(q1.arrows.empty());

    for (int d = 2; d <= 6; ++d) {
        auto Z = gen::polygon(d + 3, gen::Shape::fan);
        auto za = gen::polygon_chord(Z, 1, d + 2);
        SnakeGraph g(Z.surface, resolve_walk(Z.surface, za.crossings, za.first_triangle,
                                             za.last_triangle));
        auto q = quiver_of_snake(g);
        CHECK((int)q.arrows.size() == d - 1);
        CHECK(q.acyclic());
    }
}

TEST_CASE("order ideal enumeration: empty quiver and chain") {
    HasseQuiver empty;
    empty.vertices = 4;
    CHECK(order_ideals(empty).size() == 16);
    HasseQuiver chain;
    chain.vertices = 5;
    for (int i = 1; i < 5; ++i) chain.arrows.insert({i, i + 1});
    CHECK(order_ideals(chain).size() == 6);
    CHECK(order_ideals(chain) == order_ideals_bruteforce(chain));
}

TEST_CASE("loop quivers of the paper fixtures") {
    auto T10 = load_surface("figure10_surface.json");
    auto g10 = load_arc("figure10_arc.json", T10);
    LoopGraph lg10(T10, g10);
    auto q10 = quiver_of_loop(lg10);
    CHECK(q10.vertices == 6);
    CHECK(q10.arrows.size() == 6);  // 5 consecutive + 1 loop arrow
    CHECK(order_ideals(q10).size() == 15);
    CHECK(order_ideals(q10) == order_ideals_bruteforce(q10));

    auto T12 = load_surface("figure12_surface.json");
    auto g12 = load_arc("figure12_arc.json", T12);
    LoopGraph lg12(T12, g12);
    auto q12 = quiver_of_loop(lg12);
    CHECK(q12.vertices == 6);
    CHECK(q12.arrows.size() == 7);  // 5 consecutive + 2 loop arrows
    CHECK(order_ideals(q12).size() == 12);
    CHECK(order_ideals(q12) == order_ideals_bruteforce(q12));
}

TEST_CASE("cut-free loop quiver equals the snake quiver") {
    auto P = gen::polygon(7, gen::Shape::fan);
    auto arc = gen::polygon_chord(P, 1, 5);
    LoopGraph lg(P.surface, resolve_walk(P.surface, arc.crossings, arc.first_triangle,
                                         arc.last_triangle));
    auto ql = quiver_of_loop(lg);
    auto qs = quiver_of_snake(lg.base());
    CHECK(ql.arrows == qs.arrows);
}

TEST_CASE("height map is a bijection onto order ideals") {
    for (const char* which : {"figure10", "figure12"}) {
        auto T = load_surface(std::string(which) + "_surface.json");
        auto g = load_arc(std::string(which) + "_arc.json", T);
        LoopGraph lg(T, g);
        auto gms = lg.good_matchings();
        auto ideals = order_ideals(quiver_of_loop(lg));
        REQUIRE(gms.size() == ideals.size());
        std::set<std::set<int>> heights;
        for (const auto& gm : gms) heights.insert(ideal_from_matching(gm));
        CHECK(heights == std::set<std::set<int>>(ideals.begin(), ideals.end()));
        // round trip
        for (const auto& I : ideals) {
            const auto& gm = matching_from_ideal(gms, I);
            CHECK(ideal_from_matching(gm) == I);
        }
        // min and max
        std::set<int> full;
        for (int j = 1; j <= lg.base().tile_count(); ++j) full.insert(j);
        CHECK_NOTHROW(matching_from_ideal(gms, {}));
        CHECK_NOTHROW(matching_from_ideal(gms, full));
    }
}

TEST_CASE("lattice: covers are exactly single positive twists") {
    for (const char* which : {"figure10", "figure12"}) {
        auto T = load_surface(std::string(which) + "_surface.json");
        auto g = load_arc(std::string(which) + "_arc.json", T);
        LoopGraph lg(T, g);
        auto L = lattice(lg);
        // every arrow raises the height by exactly one element
        for (auto [i, k] : L.arrows) {
            const auto& a = L.matchings[i].height;
            const auto& b = L.matchings[k].height;
            CHECK(a.size() + 1 == b.size());
            CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
        }
        // arrows match covers of the ideal lattice bijectively
        auto ideals = order_ideals(quiver_of_loop(lg));
        std::set<std::pair<std::set<int>, std::set<int>>> covers;
        for (const auto& I : ideals)
            for (const auto& J : ideals) {
                if (I.size() + 1 != J.size()) continue;
                if (std::includes(J.begin(), J.end(), I.begin(), I.end()))
                    covers.insert({I, J});
            }
        std::set<std::pair<std::set<int>, std::set<int>>> twisted;
        for (auto [i, k] : L.arrows)
            twisted.insert({L.matchings[i].height, L.matchings[k].height});
        CHECK(covers == twisted);
        // unique source and sink
        int sources = 0, sinks = 0;
        for (int i = 0; i < (int)L.matchings.size(); ++i) {
            bool in = false, out = false;
            for (auto [a, b] : L.arrows) {
                in |= (b == i);
                out |= (a == i);
            }
            if (!in) ++sources;
            if (!out) ++sinks;
        }
        CHECK(sources == 1);
        CHECK(sinks == 1);
    }
}

TEST_CASE("single tile without cuts gives a 2-chain lattice") {
    auto P = gen::polygon(4, gen::Shape::fan);
    auto arc = gen::polygon_chord(P, 1, 3);
    LoopGraph lg(P.surface, resolve_walk(P.surface, arc.crossings, arc.first_triangle,
                                         arc.last_triangle));
    auto L = lattice(lg);
    CHECK(L.matchings.size() == 2);
    CHECK(L.arrows.size() == 1);
}
