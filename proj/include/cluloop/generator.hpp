#pragma once

// Deterministic corpus generators: triangulated polygons (with and without
// punctures), the self-folded square, and small annuli, together with arcs
// whose crossing data is produced by combinatorial walking.

#include <random>
#include <string>
#include <vector>

#include "cluloop/surface.hpp"

namespace cluloop::gen {

enum class Shape { fan, zigzag, random };

struct Generated {
    Triangulation surface;
    int n_boundary = 0;                       // polygon vertex count
    std::vector<std::pair<int, int>> chords;  // interior arcs as vertex pairs
};

// A convex N-gon with vertices v0..v_{N-1}, boundary segments b_i = (v_i,
// v_{i+1}); triangulated by non-crossing chords. Chords are id'd 1..N-3 in
// creation order, boundary N-2 .. 2N-4... boundary ids follow interior ids.
inline Generated polygon(int N, Shape shape, uint64_t seed = 0) {
    std::vector<std::pair<int, int>> chords;
    if (shape == Shape::fan) {
        for (int k = 2; k < N - 1; ++k) chords.push_back({0, k});
    } else if (shape == Shape::zigzag) {
        // alternate ears from the two ends of the vertex range
        int lo = 0, hi = N - 1;
        bool at_lo = false;
        while (hi - lo >= 2) {
            if (at_lo)
                ++lo;
            else
                --hi;
            if (hi - lo >= 2) chords.push_back({lo, hi});
            at_lo = !at_lo;
        }
    } else {
        std::mt19937_64 rng(seed);
        // random ear decomposition
        std::vector<int> verts(N);
        for (int i = 0; i < N; ++i) verts[i] = i;
        while (verts.size() > 3) {
            const int m = (int)verts.size();
            const int e = 1 + (int)(rng() % (m - 2));  // ear tip position
            chords.push_back({verts[e - 1], verts[e + 1]});
            verts.erase(verts.begin() + e);
        }
    }
    // name points and sides
    auto vname = [](int v) { return "v" + std::to_string(v); };
    std::vector<std::string> arc_names, bnames;
    std::map<std::string, std::array<std::string, 2>> ends;
    for (int i = 0; i < (int)chords.size(); ++i) {
        arc_names.push_back(std::to_string(i + 1));
        ends[arc_names.back()] = {vname(chords[i].first), vname(chords[i].second)};
    }
    for (int i = 0; i < N; ++i) {
        bnames.push_back(std::to_string((int)chords.size() + 1 + i));
        ends[bnames.back()] = {vname(i), vname((i + 1) % N)};
    }
    // sides as vertex pairs for triangle assembly
    std::map<std::pair<int, int>, std::string> side_name;
    auto norm = [](int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
    for (int i = 0; i < (int)chords.size(); ++i)
        side_name[norm(chords[i].first, chords[i].second)] = arc_names[i];
    for (int i = 0; i < N; ++i) side_name[norm(i, (i + 1) % N)] = bnames[i];
    // triangles: every vertex triple whose three sides all exist
    std::vector<std::array<std::string, 3>> tris;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            for (int c = b + 1; c < N; ++c) {
                if (!side_name.count(norm(a, b)) || !side_name.count(norm(b, c)) ||
                    !side_name.count(norm(a, c)))
                    continue;
                // a < b < c is anticlockwise for the standard polygon; list
                // sides clockwise: (a,c), (c,b), (b,a)
                tris.push_back({side_name[norm(a, c)], side_name[norm(b, c)],
                                side_name[norm(a, b)]});
            }
    std::vector<std::string> marked;
    for (int i = 0; i < N; ++i) marked.push_back(vname(i));
    Generated g{Triangulation(arc_names, bnames, tris, {}, {}, marked, ends), N, chords};
    return g;
}

// The chord from vertex a to vertex b as a tagged arc: crossings found by
// walking triangles toward b; each crossed chord separates a from b.
inline TaggedArc polygon_chord(const Generated& P, int a, int b) {
    const auto& T = P.surface;
    auto vname = [](int v) { return "v" + std::to_string(v); };
    auto separates = [&](const std::pair<int, int>& ch) {
        // does chord {c,d} separate a from b strictly?
        auto inside = [&](int lo, int hi, int v) {
            // v strictly between lo and hi going anticlockwise
            int x = (v - lo + P.n_boundary) % P.n_boundary;
            int h = (hi - lo + P.n_boundary) % P.n_boundary;
            return 0 < x && x < h;
        };
        const auto [c, d] = ch;
        return inside(c, d, a) != inside(c, d, b);
    };
    TaggedArc arc;
    arc.name = "chord_" + std::to_string(a) + "_" + std::to_string(b);
    arc.endpoints[0] = {vname(a), Tag::plain};
    arc.endpoints[1] = {vname(b), Tag::plain};
    std::vector<int> crossed;
    for (int i = 0; i < (int)P.chords.size(); ++i) {
        const auto [c, d] = P.chords[i];
        if (c == a || c == b || d == a || d == b) continue;
        if (separates(P.chords[i])) crossed.push_back(i + 1);
    }
    int first = -1, last = -1;
    // crossing order along the arc: the crossed chords are pairwise
    // non-crossing, hence nested between a and b; the chord met first has the
    // anticlockwise-side endpoint nearest a and the clockwise-side endpoint
    // farthest from a
    std::sort(crossed.begin(), crossed.end(), [&](int i1, int i2) {
        auto key = [&](int idx) {
            const auto [c, d] = P.chords[idx - 1];
            int w1 = (c - a + P.n_boundary) % P.n_boundary;
            int w2 = (d - a + P.n_boundary) % P.n_boundary;
            return std::pair{std::min(w1, w2), -std::max(w1, w2)};
        };
        return key(i1) < key(i2);
    });
    arc.crossings = crossed;
    // first/last triangles: the triangles at a and b that the arc starts and
    // ends in; identified by containing the first/last crossed side (or each
    // other's vertex when there are no crossings)
    for (int t = 0; t < T.triangle_count(); ++t) {
        const bool hasA = T.corner_at(t, vname(a)).has_value();
        const bool hasB = T.corner_at(t, vname(b)).has_value();
        const auto& tri = T.triangle(t);
        auto has_side = [&](int id) {
            return tri[0] == id || tri[1] == id || tri[2] == id;
        };
        if (crossed.empty()) {
            if (hasA && hasB) {
                first = last = t;
            }
        } else {
            if (hasA && has_side(crossed.front())) first = t;
            if (hasB && has_side(crossed.back())) last = t;
        }
    }
    arc.first_triangle = first;
    arc.last_triangle = last;
    return arc;
}

// For the zigzag polygon: the transversal chord crossing every interior arc.
inline TaggedArc zigzag_transversal(const Generated& P) {
    // zigzag chords leave exactly two "end" vertices not used by any chord
    // endpoint adjacent pattern; the long transversal joins the two ear tips.
    const int N = P.n_boundary;
    std::vector<int> deg(N, 0);
    for (auto [c, d] : P.chords) {
        ++deg[c];
        ++deg[d];
    }
    // ear tips: vertices of degree 0 (strictly inside an ear)
    std::vector<int> tips;
    for (int v = 0; v < N; ++v)
        if (deg[v] == 0) tips.push_back(v);
    if (tips.size() != 2) throw std::runtime_error("unexpected zigzag shape");
    return polygon_chord(P, tips[0], tips[1]);
}

// Once-punctured N-gon with the spoke fan: spokes 1..N from p to v_i,
// boundary N+1..2N, triangles (b_i, r_{i+1}, r_i).
inline Generated punctured_polygon(int N) {
    auto vname = [](int v) { return "v" + std::to_string(v); };
    std::vector<std::string> arc_names, bnames;
    std::map<std::string, std::array<std::string, 2>> ends;
    for (int i = 0; i < N; ++i) {
        arc_names.push_back(std::to_string(i + 1));
        ends[arc_names.back()] = {"p", vname(i)};
    }
    for (int i = 0; i < N; ++i) {
        bnames.push_back(std::to_string(N + i + 1));
        ends[bnames.back()] = {vname(i), vname((i + 1) % N)};
    }
    std::vector<std::array<std::string, 3>> tris;
    for (int i = 0; i < N; ++i)
        tris.push_back({bnames[i], arc_names[(i + 1) % N], arc_names[i]});
    std::vector<std::string> marked{"p"};
    for (int i = 0; i < N; ++i) marked.push_back(vname(i));
    Generated g{Triangulation(arc_names, bnames, tris, {}, {"p"}, marked, ends), N, {}};
    return g;
}

// Arc from v_a across k consecutive spokes (ending at a boundary vertex when
// to_puncture is false, at p when true); optional notching at p.
inline TaggedArc punctured_polygon_arc(const Generated& P, int a, int k,
                                       bool to_puncture, bool notched = false) {
    const int N = P.n_boundary;
    auto vname = [](int v) { return "v" + std::to_string(v); };
    TaggedArc arc;
    arc.name = "arc";
    for (int s = 1; s <= k; ++s) arc.crossings.push_back((a + s) % N + 1);
    arc.endpoints[0] = {vname(a), Tag::plain};
    if (to_puncture) {
        arc.endpoints[1] = {"p", notched ? Tag::notched : Tag::plain};
        arc.last_triangle = (a + k) % N;
    } else {
        arc.endpoints[1] = {vname((a + k + 1) % N), Tag::plain};
        arc.last_triangle = (a + k) % N;
    }
    arc.first_triangle = a;
    return arc;
}

// Once-punctured square with a self-folded triangle: radius 1 from v1's loop
// 2 to the puncture q; chords 3 and 4 are the two v1-v3 diagonals of the
// outer region.
inline Generated punctured_square_selffolded() {
    nlohmann::json j = {
        {"arcs",
         {{{"name", "1"}, {"ends", {"q", "v1"}}},
          {{"name", "2"}, {"ends", {"v1", "v1"}}},
          {{"name", "3"}, {"ends", {"v1", "v3"}}},
          {{"name", "4"}, {"ends", {"v1", "v3"}}}}},
        {"boundary",
         {{{"name", "5"}, {"ends", {"v1", "v2"}}},
          {{"name", "6"}, {"ends", {"v2", "v3"}}},
          {{"name", "7"}, {"ends", {"v3", "v4"}}},
          {{"name", "8"}, {"ends", {"v4", "v1"}}}}},
        {"punctures", {"q"}},
        {"marked_points", {"q", "v1", "v2", "v3", "v4"}},
        {"triangles",
         {{"1", "1", "2"}, {"2", "4", "3"}, {"5", "6", "4"}, {"3", "7", "8"}}},
        {"self_folded", {{{"radius", "1"}, {"loop", "2"}, {"puncture", "q"}}}}};
    return Generated{Triangulation::from_json(j), 4, {}};
}

// The arc of the self-folded square crossing the radius: v2 to v4 over the
// top of the puncture, crossing 4, 2, 1, 2, 3.
inline TaggedArc selffolded_crossing_arc(const Generated& P) {
    const auto& T = P.surface;
    TaggedArc arc;
    arc.name = "over_the_top";
    arc.endpoints[0] = {"v2", Tag::plain};
    arc.endpoints[1] = {"v4", Tag::plain};
    arc.crossings = {T.id_of("4"), T.id_of("2"), T.id_of("1"), T.id_of("2"), T.id_of("3")};
    arc.first_triangle = 2;  // (5,6,4)
    arc.last_triangle = 3;   // (3,7,8)
    return arc;
}

// Annulus with one marked point on each boundary circle, bridged by arcs 1
// and 2; boundary 3 (outer) and 4 (inner).
inline Generated annulus11() {
    nlohmann::json j = {
        {"arcs",
         {{{"name", "1"}, {"ends", {"a", "b"}}}, {{"name", "2"}, {"ends", {"a", "b"}}}}},
        {"boundary",
         {{{"name", "3"}, {"ends", {"a", "a"}}}, {{"name", "4"}, {"ends", {"b", "b"}}}}},
        {"punctures", nlohmann::json::array()},
        {"marked_points", {"a", "b"}},
        {"triangles", {{"3", "1", "2"}, {"4", "1", "2"}}},
        {"self_folded", nlohmann::json::array()}};
    return Generated{Triangulation::from_json(j), 2, {}};
}

// Arc from a to b wrapping around the annulus: crossing sequence alternates
// 1,2 starting from the named arc, length 2w+1.
inline TaggedArc annulus_wrap(const Generated& P, int start_arc, int w) {
    const auto& T = P.surface;
    TaggedArc arc;
    arc.name = "wrap";
    arc.endpoints[0] = {"a", Tag::plain};
    arc.endpoints[1] = {"b", Tag::plain};
    int cur = start_arc;
    for (int i = 0; i < 2 * w + 1; ++i) {
        arc.crossings.push_back(T.id_of(std::to_string(cur)));
        cur = 3 - cur;
    }
    arc.first_triangle = start_arc == 1 ? 0 : 1;
    arc.last_triangle = (start_arc + 2 * w) % 2 == 1 ? 1 : 0;
    return arc;
}


// Once-punctured N-gon with a mixed triangulation: the fan of chords from v0
// plus a punctured triangle (v0, v_t, v_{t+1}) carrying three spokes. Arcs
// from far boundary vertices to p cross chords before entering the star, so
// notched arcs with gamma0 outside T exist here.
inline Generated punctured_polygon_mixed(int N, int t) {
    if (t < 1 || t > N - 2) throw std::runtime_error("bad puncture sector");
    auto vname = [](int v) { return "v" + std::to_string(v); };
    std::vector<std::string> arc_names, bnames;
    std::map<std::string, std::array<std::string, 2>> ends;
    std::vector<std::pair<int, int>> chords;
    for (int kk = 2; kk < N - 1; ++kk) chords.push_back({0, kk});
    int id = 0;
    for (auto [a, b] : chords) {
        arc_names.push_back(std::to_string(++id));
        ends[arc_names.back()] = {vname(a), vname(b)};
    }
    // spokes p->v0, p->v_t, p->v_{t+1}
    const int s0 = ++id, s1 = ++id, s2 = ++id;
    for (int v : {0, t, t + 1}) {
        arc_names.push_back(std::to_string(s0 + (v == 0 ? 0 : (v == t ? 1 : 2))));
        ends[arc_names.back()] = {"p", vname(v)};
    }
    for (int i = 0; i < N; ++i) {
        bnames.push_back(std::to_string(id + 1 + i));
        ends[bnames.back()] = {vname(i), vname((i + 1) % N)};
    }
    auto chord_name = [&](int a, int b) -> std::string {
        for (int i = 0; i < (int)chords.size(); ++i)
            if ((chords[i] == std::pair{a, b}) || (chords[i] == std::pair{b, a}))
                return std::to_string(i + 1);
        // boundary side
        for (int i = 0; i < N; ++i)
            if ((a + 1) % N == b || (b + 1) % N == a) {
                const int lo = ((a + 1) % N == b) ? a : b;
                return std::to_string(id + 1 + lo);
            }
        throw std::runtime_error("no side between vertices");
    };
    std::vector<std::array<std::string, 3>> tris;
    // plain fan triangles (v0, k, k+1) for k = 1..N-2, except the punctured one
    for (int kk = 1; kk < N - 1; ++kk) {
        if (kk == t) continue;
        tris.push_back({chord_name(0, kk + 1), chord_name(kk, kk + 1), chord_name(0, kk)});
    }
    // punctured triangle (v0, v_t, v_{t+1}) with spokes s0, s1, s2: clockwise
    // triples around p mirror the fan convention of punctured_polygon
    const std::string e_ot = chord_name(0, t), e_tt = chord_name(t, t + 1),
                      e_to = chord_name(0, t + 1);
    const std::string r0 = std::to_string(s0), r1 = std::to_string(s1),
                      r2 = std::to_string(s2);
    tris.push_back({e_ot, r0, r1});
    tris.push_back({e_tt, r1, r2});
    tris.push_back({e_to, r2, r0});
    std::vector<std::string> marked{"p"};
    for (int i = 0; i < N; ++i) marked.push_back(vname(i));
    Generated g{Triangulation(arc_names, bnames, tris, {}, {"p"}, marked, ends), N, chords};
    return g;
}

// Arc from boundary vertex v_a (a >= t+2) to the puncture of the mixed
// polygon: crosses the fan chords (0,a-1), ..., (0,t+1) and ends on p inside
// the sub-triangle entered through (0,t+1); optionally notched at p.
inline TaggedArc mixed_polygon_arc_to_p(const Generated& P, int t, int a, bool notched) {
    const auto& T = P.surface;
    auto vname = [](int v) { return "v" + std::to_string(v); };
    TaggedArc arc;
    arc.name = "to_p";
    arc.endpoints[0] = {vname(a), Tag::plain};
    arc.endpoints[1] = {"p", notched ? Tag::notched : Tag::plain};
    for (int kk = a - 1; kk >= t + 1; --kk)
        arc.crossings.push_back(kk - 1);  // chord (0,kk) carries dense id kk-1
    const int nchords = (int)P.chords.size();
    int first = -1, last = -1;
    for (int tt = 0; tt < T.triangle_count(); ++tt) {
        if (T.corner_at(tt, vname(a))) {
            const auto& tri = T.triangle(tt);
            for (int kk = 0; kk < 3; ++kk)
                if (tri[kk] == arc.crossings.front()) first = tt;
        }
        if (T.corner_at(tt, "p")) {
            // the sub-triangle (e_to, r2, r0) holds the end of the arc
            const auto& tri = T.triangle(tt);
            bool has_r0 = false, has_r2 = false;
            for (int kk = 0; kk < 3; ++kk) {
                has_r0 |= tri[kk] == nchords + 1;
                has_r2 |= tri[kk] == nchords + 3;
            }
            if (has_r0 && has_r2) last = tt;
        }
    }
    arc.first_triangle = first;
    arc.last_triangle = last;
    return arc;
}

}  // namespace cluloop::gen
