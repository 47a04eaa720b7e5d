#pragma once
// Generated singly and doubly notched test arcs on the paper surfaces and the
// mixed punctured polygons.
#include "cluloop/generator.hpp"
#include "util.hpp"

struct NotchedCase {
    std::string name;
    cluloop::Triangulation surface;
    cluloop::TaggedArc arc;
    bool doubly = false;
};

inline cluloop::TaggedArc make_arc(const cluloop::Triangulation& T, std::string name,
                                   std::string p0, cluloop::Tag t0, std::string p1,
                                   cluloop::Tag t1, std::vector<std::string> crossings,
                                   int first, int last) {
    cluloop::TaggedArc a;
    a.name = std::move(name);
    a.endpoints[0] = {std::move(p0), t0};
    a.endpoints[1] = {std::move(p1), t1};
    for (const auto& c : crossings) a.crossings.push_back(T.id_of(c));
    a.first_triangle = first;
    a.last_triangle = last;
    return a;
}

inline std::vector<NotchedCase> notched_corpus() {
    using namespace cluloop;
    std::vector<NotchedCase> out;
    auto T10 = load_surface("figure10_surface.json");
    auto T12 = load_surface("figure12_surface.json");
    struct Spec {
        const char* name;
        const char* srf;
        const char* p0;
        const char* p1;
        std::vector<std::string> cr;
        int first, last;
    };
    // plain-arc data between the two punctures of each paper surface
    const std::vector<Spec> between = {
        {"f10_456", "10", "p1", "p2", {"4", "5", "6"}, 0, 5},
        {"f10_7654", "10", "p2", "p1", {"7", "6", "5", "4"}, 6, 0},
        {"f10_8654", "10", "p2", "p1", {"8", "6", "5", "4"}, 7, 0},
        {"f10_97654", "10", "p2", "p1", {"9", "7", "6", "5", "4"}, 7, 0},
        {"f12_6", "12", "p2", "p3", {"6"}, 0, 2},
        {"f12_892", "12", "p2", "p3", {"8", "9", "2"}, 0, 3},
        {"f12_92", "12", "p2", "p3", {"9", "2"}, 1, 3},
        {"f12_8", "12", "p2", "p1", {"8"}, 0, 1},
        {"f12_2", "12", "p3", "p1", {"2"}, 3, 5},
    };
    for (const auto& s : between) {
        const Triangulation& T = s.srf == std::string("10") ? T10 : T12;
        // generic position only: the crossing adjacent to a notched end may
        // not belong to that puncture's star
        auto star_has = [&](const char* p, const std::string& arc) {
            for (int a : T.point(p).walk_arcs)
                if (T.label_name(a) == arc) return true;
            return false;
        };
        const bool ok0 = !star_has(s.p0, s.cr.front());
        const bool ok1 = !star_has(s.p1, s.cr.back());
        if (ok0)
            out.push_back({std::string(s.name) + "_n0",
                           T,
                           make_arc(T, s.name, s.p0, Tag::notched, s.p1, Tag::plain,
                                    s.cr, s.first, s.last),
                           false});
        if (ok1)
            out.push_back({std::string(s.name) + "_n1",
                           T,
                           make_arc(T, s.name, s.p0, Tag::plain, s.p1, Tag::notched,
                                    s.cr, s.first, s.last),
                           false});
        if (ok0 && ok1)
            out.push_back({std::string(s.name) + "_nn",
                           T,
                           make_arc(T, s.name, s.p0, Tag::notched, s.p1, Tag::notched,
                                    s.cr, s.first, s.last),
                           true});
    }
    for (int N = 5; N <= 7; ++N)
        for (int t = 2; t <= N - 3; ++t) {
            auto P = gen::punctured_polygon_mixed(N, t);
            for (int a = t + 2; a < N; ++a) {
                out.push_back({"mixed_N" + std::to_string(N) + "_t" + std::to_string(t) +
                                   "_a" + std::to_string(a),
                               P.surface, gen::mixed_polygon_arc_to_p(P, t, a, true),
                               false});
            }
        }
    return out;
}
