#pragma once
// Shared driver for the mutation-oracle fixtures (tests and acceptance).
#include <nlohmann/json.hpp>

#include "cluloop/expansion.hpp"
#include "cluloop/generator.hpp"
#include "cluloop/mutation.hpp"
#include "util.hpp"

struct OracleCase {
    std::string name;
    cluloop::Triangulation surface;
    cluloop::Laurent expansion;   // boundary specialized to 1
    cluloop::Monomial cross;      // crossing monomial (plain x-part)
    std::vector<int> flips;
    int position = 0;
};

inline std::vector<OracleCase> load_oracle_cases() {
    using namespace cluloop;
    std::vector<OracleCase> out;
    auto j = load_json("oracle_flips.json");
    for (const auto& f : j.at("fixtures")) {
        const std::string fam = f.at("family").get<std::string>();
        std::optional<gen::Generated> G;
        TaggedArc arc;
        std::optional<Triangulation> S;
        bool plain_in_T = false;
        if (fam == "hexagon_fan") {
            G = gen::polygon(6, gen::Shape::fan);
            arc = gen::polygon_chord(*G, f.at("a").get<int>(), f.at("b").get<int>());
        } else if (fam == "heptagon_zigzag") {
            G = gen::polygon(7, gen::Shape::zigzag);
            arc = gen::zigzag_transversal(*G);
        } else if (fam == "punctured_square" || fam == "punctured_pentagon") {
            G = gen::punctured_polygon(fam == "punctured_square" ? 4 : 5);
            arc = gen::punctured_polygon_arc(*G, f.at("a").get<int>(), f.at("k").get<int>(),
                                             false);
        } else if (fam == "selffolded_square") {
            G = gen::punctured_square_selffolded();
            arc = gen::selffolded_crossing_arc(*G);
        } else if (fam == "annulus") {
            G = gen::annulus11();
            arc = gen::annulus_wrap(*G, f.at("start").get<int>(), f.at("w").get<int>());
        } else if (fam == "figure10") {
            S = load_surface("figure10_surface.json");
            arc = load_arc(f.at("arc").get<std::string>(), *S);
        } else if (fam == "punctured_square_notched_spoke") {
            G = gen::punctured_polygon(4);
            arc.name = "notched_spoke";
            arc.endpoints[0] = {"v0", Tag::plain};
            arc.endpoints[1] = {"p", Tag::notched};
            arc.first_triangle = 3;
            arc.last_triangle = 0;
            plain_in_T = true;
        } else {
            throw std::runtime_error("unknown oracle family " + fam);
        }
        const Triangulation& T = G ? G->surface : *S;
        OracleCase c{f.at("name").get<std::string>(),
                     T,
                     {},
                     {},
                     f.at("flips").get<std::vector<int>>(),
                     f.at("position").get<int>()};
        if (plain_in_T) {
            auto r = expand_when_plain_in_T(T, arc);
            c.expansion = specialize_boundary(T, r.value);
            c.cross = r.ellp.cross;
        } else {
            auto e = expand(T, arc);
            c.expansion = specialize_boundary(T, e.value);
            c.cross = e.cross;
        }
        out.push_back(std::move(c));
    }
    return out;
}
