#pragma once

// Hooked arcs, loop graphs (snake graphs with one or two ends glued back to
// an interior tile), good matchings with cut classification, positive twists.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cluloop/snakegraph.hpp"

namespace cluloop {

struct HookedArc {
    std::vector<int> crossings;
    int first_tri = -1;
    int last_tri = -1;
    int hook_start = 0;  // number of crossings contributed by the start hook
    int hook_end = 0;
};

// The clockwise wind around a puncture, anchored at a corner of its star:
// with the corner cycle in walk order w_0..w_{l-1} and the anchor at index i,
// the clockwise hook crosses w_{i-1}, w_{i-2}, ..., w_{i-l}.
inline std::vector<int> hook_wind(const Triangulation::PointInfo& p, const Slot& anchor,
                                  bool clockwise) {
    const int l = (int)p.corners.size();
    int i = -1;
    for (int k = 0; k < l; ++k)
        if (p.corners[k] == anchor) i = k;
    if (i < 0) throw std::runtime_error("hook anchor corner is not at the puncture");
    std::vector<int> wind;
    for (int s = 0; s < l; ++s) {
        const int idx = clockwise ? ((i - 1 - s) % l + l) % l : (i + s) % l;
        wind.push_back(p.walk_arcs[idx]);
    }
    return wind;
}

// Replace each notched endpoint of gamma by a hook. The returned crossing
// data drives the loop-graph construction.
inline HookedArc build_hooked_arc(const Triangulation& T, const TaggedArc& g,
                                  bool clockwise = true) {
    HookedArc h;
    h.crossings = g.crossings;
    h.first_tri = g.first_triangle;
    h.last_tri = g.last_triangle;
    auto check_end = [&](int e) {
        const auto& pt = T.point(g.endpoints[e].point);
        if (!pt.puncture)
            throw std::runtime_error("notched endpoint '" + g.endpoints[e].point +
                                     "' is not a puncture");
        for (const auto& sf : T.self_folded())
            if (sf.puncture == pt.name)
                throw std::runtime_error(
                    "arc is notched at a puncture enclosed by a self-folded triangle; "
                    "apply tag-reversal normalization first");
        // the subgraph location k1/k2 is ambiguous when gamma0 lands on the
        // puncture through one of its own star arcs
        const int adjacent = g.crossings.empty()
                                 ? 0
                                 : (e == 0 ? g.crossings.front() : g.crossings.back());
        for (int a : pt.walk_arcs)
            if (a == adjacent)
                throw std::runtime_error(
                    "hooked-arc subgraph location is ambiguous: gamma0 reaches the "
                    "notched puncture through its star (arc '" +
                    T.label_name(adjacent) + "')");
        return &pt;
    };
    if (g.notched_at(0)) {
        const auto* pt = check_end(0);
        auto anchor = T.corner_at(g.first_triangle, pt->name);
        if (!anchor)
            throw std::runtime_error("first_triangle has no corner at the notched endpoint");
        auto wind = hook_wind(*pt, *anchor, clockwise);
        // a wind may not double straight back over the adjacent crossing;
        // flip its direction when the underlying arc leaves through a flank
        if (!g.crossings.empty() && wind.back() == g.crossings.front())
            wind = hook_wind(*pt, *anchor, !clockwise);
        h.crossings.insert(h.crossings.begin(), wind.begin(), wind.end());
        h.hook_start = (int)wind.size();
        // the wind starts and ends in the anchor triangle
    }
    if (g.notched_at(1)) {
        const auto* pt = check_end(1);
        auto anchor = T.corner_at(g.last_triangle, pt->name);
        if (!anchor)
            throw std::runtime_error("last_triangle has no corner at the notched endpoint");
        auto wind = hook_wind(*pt, *anchor, clockwise);
        if (!g.crossings.empty() && wind.front() == g.crossings.back())
            wind = hook_wind(*pt, *anchor, !clockwise);
        h.crossings.insert(h.crossings.end(), wind.begin(), wind.end());
        h.hook_end = (int)wind.size();
    }
    return h;
}

enum class CutClass { left, right, centre };
inline const char* cut_class_name(CutClass c) {
    switch (c) {
        case CutClass::left: return "left";
        case CutClass::right: return "right";
        default: return "centre";
    }
}

struct Cut {
    bool at_start = true;  // loop with respect to G1 (else G_d)
    int k = 0;             // interior tile index glued to the end tile
    int near_edge = -1;    // base edge at the end tile (c)
    int far_edge = -1;     // base edge at tile k (c')
    Vertex x{}, y{}, xp{}, yp{};  // Def. 3.7 vertex identification x~x', y~y'
};

struct GluedEdge {
    int gid = -1;
    Vertex a{}, b{};           // glued representatives
    std::vector<int> lift;     // base edge ids (two for a cut edge)
    int label = 0;
};

struct GoodMatching {
    Matching glued;                 // glued edge ids
    std::vector<CutClass> classes;  // one entry per cut
    Matching extension;             // perfect matching of the base snake graph
    std::set<int> height;           // positive tiles of the extension
};

class LoopGraph {
public:
    LoopGraph(const Triangulation& T, const TaggedArc& g, bool clockwise = true)
        : hooked_(build_hooked_arc(T, g, clockwise)),
          base_(T, resolve_walk(T, hooked_.crossings, hooked_.first_tri, hooked_.last_tri)) {
        const int d = base_.tile_count();
        k1_ = hooked_.hook_start + 1;
        k2_ = d - hooked_.hook_end;
        if (k1_ > k2_) throw std::runtime_error("loop graph requires k1 <= k2");
        if (hooked_.hook_start > 0) make_cut(/*at_start=*/true, k1_);
        if (hooked_.hook_end > 0) make_cut(/*at_start=*/false, k2_);
        glue();
    }

    // Degenerate (cut-free) view of a plain arc, or direct construction from
    // explicit crossing data.
    LoopGraph(const Triangulation& T, CrossingWalk walk)
        : hooked_{}, base_(T, std::move(walk)) {
        k1_ = 1;
        k2_ = base_.tile_count();
        glue();
    }

    const SnakeGraph& base() const { return base_; }
    const HookedArc& hooked() const { return hooked_; }
    int k1() const { return k1_; }
    int k2() const { return k2_; }
    const std::vector<Cut>& cuts() const { return cuts_; }
    const std::vector<GluedEdge>& glued_edges() const { return glued_; }
    const GluedEdge& glued_edge(int gid) const { return glued_[gid]; }
    int glued_of_base(int eid) const { return base_to_glued_.at(eid); }

    // Classification of a perfect matching of the glued graph; nullopt with
    // offending cut index when the matching is not good.
    struct Classified {
        std::vector<CutClass> classes;
        Matching extension;
    };
    std::optional<Classified> classify(const Matching& glued_pm, int* bad_cut = nullptr) const {
        std::set<Vertex> covered;
        Matching lift;
        std::vector<bool> centre(cuts_.size(), false);
        for (int gid : glued_pm) {
            const auto& ge = glued_[gid];
            if (ge.lift.size() == 2) {
                for (int ci = 0; ci < (int)cuts_.size(); ++ci)
                    if (cut_gid_[ci] == gid) centre[ci] = true;
                lift.push_back(ge.lift[0]);
                lift.push_back(ge.lift[1]);
            } else {
                lift.push_back(ge.lift[0]);
            }
        }
        for (int eid : lift)
            for (const Vertex v : {base_.edge(eid).a, base_.edge(eid).b}) {
                if (covered.count(v)) return std::nullopt;
                covered.insert(v);
            }
        // A good matching extends to a perfect matching of the base by adding
        // cut copies only; the uncovered vertices are precisely the unchosen
        // copies of the identified cut vertices.
        std::vector<int> cands;
        for (int ci = 0; ci < (int)cuts_.size(); ++ci) {
            if (centre[ci]) continue;
            cands.push_back(cuts_[ci].near_edge);
            cands.push_back(cuts_[ci].far_edge);
        }
        std::vector<Vertex> uncovered;
        for (const Vertex& v : base_.vertices())
            if (!covered.count(v)) uncovered.push_back(v);
        std::vector<Matching> completions;
        const int nc = (int)cands.size();
        for (int mask = 0; mask < (1 << nc); ++mask) {
            std::set<Vertex> add;
            bool ok = true;
            for (int b = 0; b < nc && ok; ++b) {
                if (!(mask & (1 << b))) continue;
                for (const Vertex v : {base_.edge(cands[b]).a, base_.edge(cands[b]).b}) {
                    if (covered.count(v) || add.count(v)) ok = false;
                    add.insert(v);
                }
            }
            if (!ok || add.size() != uncovered.size()) continue;
            Matching comp;
            for (int b = 0; b < nc; ++b)
                if (mask & (1 << b)) comp.push_back(cands[b]);
            completions.push_back(std::move(comp));
        }
        if (completions.empty()) {
            if (bad_cut) {
                *bad_cut = -1;
                for (int ci = 0; ci < (int)cuts_.size(); ++ci) {
                    const Cut& c = cuts_[ci];
                    if (centre[ci]) continue;
                    const bool right = covered.count(c.x) && covered.count(c.y);
                    const bool left = covered.count(c.xp) && covered.count(c.yp);
                    if (!right && !left) {
                        *bad_cut = ci;
                        break;
                    }
                }
            }
            return std::nullopt;
        }
        if (completions.size() > 1)
            throw std::runtime_error("good-matching extension is not unique (bug)");
        Classified out;
        std::set<int> comp(completions[0].begin(), completions[0].end());
        for (int ci = 0; ci < (int)cuts_.size(); ++ci) {
            const Cut& c = cuts_[ci];
            if (centre[ci])
                out.classes.push_back(CutClass::centre);
            else if (comp.count(c.far_edge) && !comp.count(c.near_edge))
                out.classes.push_back(CutClass::right);
            else if (comp.count(c.near_edge) && !comp.count(c.far_edge))
                out.classes.push_back(CutClass::left);
            else
                out.classes.push_back(covered.count(c.x) && covered.count(c.y)
                                          ? CutClass::right
                                          : CutClass::left);
        }
        Matching ext = lift;
        ext.insert(ext.end(), completions[0].begin(), completions[0].end());
        std::sort(ext.begin(), ext.end());
        out.extension = std::move(ext);
        return out;
    }

    // All good matchings, deterministically ordered by height set.
    std::vector<GoodMatching> good_matchings() const {
        std::vector<GoodMatching> out;
        for (const auto& pm : glued_perfect_matchings()) {
            auto cl = classify(pm);
            if (!cl) continue;
            GoodMatching gm;
            gm.glued = pm;
            gm.classes = cl->classes;
            gm.extension = cl->extension;
            gm.height = base_.positivity(gm.extension);
            out.push_back(std::move(gm));
        }
        std::sort(out.begin(), out.end(), [](const GoodMatching& a, const GoodMatching& b) {
            if (a.height != b.height) return a.height < b.height;
            return a.glued < b.glued;
        });
        return out;
    }

    // All perfect matchings of the glued graph (good or not).
    std::vector<Matching> glued_perfect_matchings() const {
        std::vector<Vertex> vs;
        for (const auto& v : gverts_) vs.push_back(v);
        std::map<Vertex, int> vi;
        for (int i = 0; i < (int)vs.size(); ++i) vi[vs[i]] = i;
        std::vector<std::vector<std::pair<int, int>>> adj(vs.size());
        for (const auto& ge : glued_) {
            int ia = vi.at(ge.a), ib = vi.at(ge.b);
            if (ib < ia) std::swap(ia, ib);
            adj[ia].push_back({ge.gid, ib});
        }
        std::vector<Matching> out;
        std::vector<bool> covered(vs.size(), false);
        Matching cur;
        rec(adj, covered, 0, cur, out);
        return out;
    }

    // Positive twist at tile j (Section 7): for odd j replace {N,S} by {W,E},
    // for even j replace {W,E} by {N,S}; in reverse when the present matching
    // holds the other pair. Returns the twisted matching when it is good.
    std::optional<GoodMatching> positive_twist(const GoodMatching& p, int j) const {
        const auto pairs = tile_pairs(j);
        const auto& from = (j % 2 == 1) ? pairs.first : pairs.second;
        const auto& to = (j % 2 == 1) ? pairs.second : pairs.first;
        std::set<int> cur(p.glued.begin(), p.glued.end());
        if (!cur.count(from.first) || !cur.count(from.second)) return std::nullopt;
        cur.erase(from.first);
        cur.erase(from.second);
        cur.insert(to.first);
        cur.insert(to.second);
        Matching m(cur.begin(), cur.end());
        // must remain a perfect matching of the glued graph
        std::set<Vertex> seen;
        for (int gid : m)
            for (const Vertex v : {glued_[gid].a, glued_[gid].b}) {
                if (seen.count(v)) return std::nullopt;
                seen.insert(v);
            }
        if (seen.size() != gverts_.size()) return std::nullopt;
        auto cl = classify(m);
        if (!cl) return std::nullopt;
        GoodMatching gm;
        gm.glued = std::move(m);
        gm.classes = cl->classes;
        gm.extension = cl->extension;
        gm.height = base_.positivity(gm.extension);
        return gm;
    }

    // {N,S} and {W,E} glued edge ids of tile j.
    std::pair<std::pair<int, int>, std::pair<int, int>> tile_pairs(int j) const {
        auto ge = [&](Side s) { return base_to_glued_.at(base_.edge_of(j, s)); };
        return {{ge(Side::N), ge(Side::S)}, {ge(Side::W), ge(Side::E)}};
    }

private:
    void make_cut(bool at_start, int k) {
        const int d = base_.tile_count();
        const int endtile = at_start ? 1 : d;
        const auto ends = at_start ? std::array<Side, 2>{Side::S, Side::W}
                                   : std::array<Side, 2>{Side::N, Side::E};
        std::vector<std::pair<int, int>> matches;  // (near edge, far edge)
        for (Side se : ends)
            for (Side sk : ends) {
                const int en = base_.edge_of(endtile, se);
                const int ek = base_.edge_of(k, sk);
                if (en == ek) continue;
                // the cut is a boundary edge on both sides; edges shared with
                // a neighbouring tile are interior
                if (base_.edge(en).occurrences > 1 || base_.edge(ek).occurrences > 1)
                    continue;
                if (base_.edge(en).slot == base_.edge(ek).slot)
                    matches.push_back({en, ek});
            }
        if (matches.size() != 1)
            throw std::runtime_error("cut location ambiguous or missing (" +
                                     std::to_string(matches.size()) + " candidates)");
        Cut c;
        c.at_start = at_start;
        c.k = k;
        c.near_edge = matches[0].first;
        c.far_edge = matches[0].second;
        const Tile& te = base_.tile(endtile);
        const Tile& tk = base_.tile(k);
        const Edge& ne = base_.edge(c.near_edge);
        const Edge& fe = base_.edge(c.far_edge);
        if (at_start) {
            c.x = te.sw;
            c.y = (ne.a == c.x) ? ne.b : ne.a;
            c.yp = tk.sw;
            c.xp = (fe.a == c.yp) ? fe.b : fe.a;
        } else {
            c.x = te.ne();
            c.y = (ne.a == c.x) ? ne.b : ne.a;
            c.yp = tk.ne();
            c.xp = (fe.a == c.yp) ? fe.b : fe.a;
        }
        cuts_.push_back(c);
    }

    void glue() {
        std::map<Vertex, Vertex> parent;
        std::function<Vertex(Vertex)> find = [&](Vertex v) {
            while (parent.count(v)) v = parent.at(v);
            return v;
        };
        for (const auto& c : cuts_) {
            for (auto [a, b] : {std::pair{c.x, c.xp}, std::pair{c.y, c.yp}}) {
                const Vertex ra = find(a), rb = find(b);
                if (!(ra == rb)) parent[ra] = rb;
            }
        }
        std::set<int> cut_edges;
        cut_gid_.clear();
        for (const auto& c : cuts_) {
            cut_edges.insert(c.near_edge);
            cut_edges.insert(c.far_edge);
        }
        for (const auto& c : cuts_) {
            GluedEdge ge;
            ge.gid = (int)glued_.size();
            ge.a = find(base_.edge(c.near_edge).a);
            ge.b = find(base_.edge(c.near_edge).b);
            if (ge.b < ge.a) std::swap(ge.a, ge.b);
            const Vertex fa = find(base_.edge(c.far_edge).a);
            const Vertex fb = find(base_.edge(c.far_edge).b);
            if (!((fa == ge.a && fb == ge.b) || (fa == ge.b && fb == ge.a)))
                throw std::runtime_error("cut gluing does not identify the two cut edges");
            ge.lift = {c.near_edge, c.far_edge};
            ge.label = base_.edge(c.near_edge).label;
            cut_gid_.push_back(ge.gid);
            base_to_glued_[c.near_edge] = ge.gid;
            base_to_glued_[c.far_edge] = ge.gid;
            glued_.push_back(ge);
        }
        for (const auto& e : base_.edges()) {
            if (cut_edges.count(e.id)) continue;
            GluedEdge ge;
            ge.gid = (int)glued_.size();
            ge.a = find(e.a);
            ge.b = find(e.b);
            if (ge.b < ge.a) std::swap(ge.a, ge.b);
            ge.lift = {e.id};
            ge.label = e.label;
            base_to_glued_[e.id] = ge.gid;
            glued_.push_back(ge);
        }
        for (const auto& ge : glued_) {
            gverts_.insert(ge.a);
            gverts_.insert(ge.b);
        }
    }

    static void rec(const std::vector<std::vector<std::pair<int, int>>>& adj,
                    std::vector<bool>& covered, int i, Matching& cur,
                    std::vector<Matching>& out) {
        const int n = (int)covered.size();
        while (i < n && covered[i]) ++i;
        if (i == n) {
            Matching m = cur;
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        for (const auto& [gid, j] : adj[i]) {
            if (covered[j]) continue;
            covered[i] = covered[j] = true;
            cur.push_back(gid);
            rec(adj, covered, i + 1, cur, out);
            cur.pop_back();
            covered[i] = covered[j] = false;
        }
    }

    HookedArc hooked_;
    SnakeGraph base_;
    int k1_ = 1, k2_ = 1;
    std::vector<Cut> cuts_;
    std::vector<int> cut_gid_;
    std::vector<GluedEdge> glued_;
    std::map<int, int> base_to_glued_;
    std::set<Vertex> gverts_;
};

}  // namespace cluloop
