#pragma once

// DOT exports: snake and loop graphs with an optional highlighted matching,
// quivers, and the lattice of good matchings.

#include <ostream>
#include <set>
#include <sstream>

#include "cluloop/loopgraph.hpp"
#include "cluloop/poset.hpp"

namespace cluloop {

inline std::string dot_vertex(const Vertex& v) {
    return "v" + std::to_string(v.first) + "_" + std::to_string(v.second);
}

// Snake graph with grid positions; highlight draws the matching bold.
inline void write_snake_dot(std::ostream& os, const SnakeGraph& g,
                            const Matching* highlight = nullptr) {
    std::set<int> hl;
    if (highlight) hl.insert(highlight->begin(), highlight->end());
    os << "graph snake {\n  node [shape=point];\n";
    for (const auto& v : g.vertices())
        os << "  " << dot_vertex(v) << " [pos=\"" << v.first << "," << v.second
           << "!\"];\n";
    for (const auto& e : g.edges()) {
        os << "  " << dot_vertex(e.a) << " -- " << dot_vertex(e.b) << " [label=\""
           << g.triangulation().label_name(e.label) << "\"";
        if (hl.count(e.id)) os << ", penwidth=3, color=red";
        os << "];\n";
    }
    // diagonals, dashed
    for (const auto& t : g.tiles())
        os << "  " << dot_vertex(t.nw()) << " -- " << dot_vertex(t.se())
           << " [style=dashed, label=\"" << g.triangulation().label_name(t.diag)
           << "\"];\n";
    os << "}\n";
}

// Loop graph: cut edges drawn distinguished; optional good-matching overlay.
inline void write_loop_dot(std::ostream& os, const LoopGraph& lg,
                           const GoodMatching* highlight = nullptr) {
    std::set<int> hl;
    if (highlight) hl.insert(highlight->glued.begin(), highlight->glued.end());
    std::set<int> cut_ids;
    for (const auto& c : lg.cuts()) cut_ids.insert(lg.glued_of_base(c.near_edge));
    os << "graph loop {\n  node [shape=point];\n";
    std::set<Vertex> seen;
    for (const auto& ge : lg.glued_edges()) {
        seen.insert(ge.a);
        seen.insert(ge.b);
    }
    for (const auto& v : seen) os << "  " << dot_vertex(v) << ";\n";
    for (const auto& ge : lg.glued_edges()) {
        os << "  " << dot_vertex(ge.a) << " -- " << dot_vertex(ge.b) << " [label=\""
           << lg.base().triangulation().label_name(ge.label) << "\"";
        if (cut_ids.count(ge.gid)) os << ", style=bold, color=blue";
        if (hl.count(ge.gid)) os << ", penwidth=3, color=red";
        os << "];\n";
    }
    os << "}\n";
}

inline void write_quiver_dot(std::ostream& os, const HasseQuiver& q) {
    os << "digraph quiver {\n";
    for (int v = 1; v <= q.vertices; ++v) os << "  " << v << ";\n";
    for (auto [a, b] : q.arrows) os << "  " << a << " -> " << b << ";\n";
    os << "}\n";
}

// The lattice of good matchings; vertices named by their height sets.
inline void write_lattice_dot(std::ostream& os, const MatchingLattice& L) {
    auto hname = [](const std::set<int>& h) {
        std::ostringstream s;
        s << "\"{";
        bool first = true;
        for (int j : h) {
            if (!first) s << ",";
            first = false;
            s << j;
        }
        s << "}\"";
        return s.str();
    };
    os << "digraph lattice {\n";
    for (const auto& gm : L.matchings) os << "  " << hname(gm.height) << ";\n";
    for (auto [i, k] : L.arrows)
        os << "  " << hname(L.matchings[i].height) << " -> "
           << hname(L.matchings[k].height) << ";\n";
    os << "}\n";
}

}  // namespace cluloop
