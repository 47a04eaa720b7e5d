#pragma once

// Combinatorial model of a triangulated bordered surface: interior arcs,
// boundary segments, clockwise-oriented triangles, self-folded triangles,
// marked-point stars recovered by corner walking, and the adjacency matrix.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cluloop {

// Side labels are dense ids: interior arcs 1..n, boundary segments n+1..m.
struct Slot {
    int tri = -1;
    int pos = -1;  // 0..2 within the clockwise triple
    bool operator==(const Slot&) const = default;
    auto operator<=>(const Slot&) const = default;
    bool valid() const { return tri >= 0; }
};

struct SelfFolded {
    std::string radius;
    std::string loop;
    std::string puncture;
};

enum class Tag { plain, notched };

struct ArcEndpoint {
    std::string point;
    Tag tag = Tag::plain;
};

// A tagged arc presented by its crossing data. Crossings are listed along a
// chosen direction of the underlying plain arc; first/last triangle indices
// disambiguate the ends. For an arc of the triangulation (no crossings) the
// two triangle indices name triangles incident to it.
struct TaggedArc {
    std::string name;
    std::array<ArcEndpoint, 2> endpoints;
    std::vector<int> crossings;  // dense arc ids
    int first_triangle = -1;
    int last_triangle = -1;

    bool notched_at(int end) const { return endpoints[end].tag == Tag::notched; }
};

class Triangulation {
public:
    // --- construction -----------------------------------------------------

    static Triangulation from_json(const nlohmann::json& j);

    Triangulation(std::vector<std::string> arc_names,
                  std::vector<std::string> boundary_names,
                  std::vector<std::array<std::string, 3>> triangles_by_name,
                  std::vector<SelfFolded> self_folded_by_name,
                  std::vector<std::string> punctures,
                  std::vector<std::string> marked_points,
                  std::map<std::string, std::array<std::string, 2>> ends)
        : arc_names_(std::move(arc_names)),
          boundary_names_(std::move(boundary_names)),
          punctures_(std::move(punctures)),
          marked_points_(std::move(marked_points)),
          declared_ends_(std::move(ends)) {
        for (int i = 0; i < (int)arc_names_.size(); ++i) id_[arc_names_[i]] = i + 1;
        for (int i = 0; i < (int)boundary_names_.size(); ++i)
            id_[boundary_names_[i]] = (int)arc_names_.size() + i + 1;
        for (const auto& t : triangles_by_name) {
            std::array<int, 3> tri{};
            for (int k = 0; k < 3; ++k) {
                auto it = id_.find(t[k]);
                tri[k] = (it == id_.end()) ? 0 : it->second;
                if (tri[k] == 0)
                    diagnostics_.push_back("triangle side '" + t[k] + "' is not a declared label");
            }
            tris_.push_back(tri);
        }
        self_folded_ = std::move(self_folded_by_name);
        build();
    }

    // --- basic queries -----------------------------------------------------

    int arc_count() const { return (int)arc_names_.size(); }
    int label_count() const { return (int)(arc_names_.size() + boundary_names_.size()); }
    bool is_interior(int id) const { return id >= 1 && id <= arc_count(); }
    const std::string& label_name(int id) const {
        return is_interior(id) ? arc_names_[id - 1]
                               : boundary_names_[id - arc_count() - 1];
    }
    int id_of(const std::string& name) const {
        auto it = id_.find(name);
        if (it == id_.end()) throw std::runtime_error("unknown label '" + name + "'");
        return it->second;
    }
    int triangle_count() const { return (int)tris_.size(); }
    const std::array<int, 3>& triangle(int t) const { return tris_[t]; }
    int side(const Slot& s) const { return tris_[s.tri][s.pos]; }
    const std::vector<SelfFolded>& self_folded() const { return self_folded_; }
    const std::vector<std::string>& punctures() const { return punctures_; }
    const std::vector<std::string>& boundary_names() const { return boundary_names_; }
    const std::vector<std::string>& arc_names() const { return arc_names_; }
    bool has_boundary() const { return !boundary_names_.empty(); }

    bool is_radius(int id) const { return radius_loop_.count(id) != 0; }
    bool is_monogon_loop(int id) const { return loop_radius_.count(id) != 0; }
    // radius -> loop of its self-folded triangle
    int loop_of_radius(int id) const { return radius_loop_.at(id); }
    int radius_of_loop(int id) const { return loop_radius_.at(id); }
    const std::string& puncture_of_radius(int id) const { return radius_punct_.at(id); }

    // pi_T of Def. 2.9: the glued side of a self-folded triangle maps to the
    // remaining side; every other label is fixed.
    int pi(int id) const {
        if (id < 1 || id > arc_count())
            throw std::runtime_error("pi_T: not an interior arc id");
        auto it = radius_loop_.find(id);
        return it == radius_loop_.end() ? id : it->second;
    }

    // --- slots -------------------------------------------------------------

    const std::vector<Slot>& slots_of(int id) const { return occ_[id]; }

    // The other slot carrying the same interior arc (radius: same triangle).
    Slot mate(const Slot& s) const {
        const auto& v = occ_[side(s)];
        if (v.size() != 2) throw std::runtime_error("mate() on non-interior side");
        return v[0] == s ? v[1] : v[0];
    }

    // --- marked points -----------------------------------------------------

    struct PointInfo {
        std::string name;
        bool puncture = false;
        // corners around the point, in corner-walk order; each corner is
        // (triangle, k) sitting between slots k and k+1
        std::vector<Slot> corners;
        // arcs crossed along the walk (the slot k+1 labels); for punctures a
        // full cycle, for boundary points the interior fan
        std::vector<int> walk_arcs;
    };

    const std::vector<PointInfo>& points() const { return points_; }
    const PointInfo& point(const std::string& name) const {
        for (const auto& p : points_)
            if (p.name == name) return p;
        throw std::runtime_error("unknown marked point '" + name + "'");
    }

    // Star of a puncture in clockwise order with degree multiplicity
    // (reverse of the corner-walk order).
    std::vector<int> puncture_star(const std::string& name) const {
        const auto& p = point(name);
        if (!p.puncture) throw std::runtime_error("'" + name + "' is not a puncture");
        std::vector<int> star(p.walk_arcs.rbegin(), p.walk_arcs.rend());
        return star;
    }

    // Corner of triangle t at the given point, if any.
    std::optional<Slot> corner_at(int t, const std::string& pointname) const {
        for (const auto& p : points_) {
            if (p.name != pointname) continue;
            for (const auto& c : p.corners)
                if (c.tri == t) return c;
        }
        return std::nullopt;
    }
    const std::string& point_of_corner(const Slot& corner) const {
        return corner_point_.at(corner);
    }

    // --- validation ---------------------------------------------------------

    const std::vector<std::string>& diagnostics() const { return diagnostics_; }
    bool valid() const { return diagnostics_.empty(); }

    // --- adjacency matrix ----------------------------------------------------

    // B_T of Def. 2.9: summed over non-self-folded triangles with the pi_T
    // substitution; row/col indices are interior arc ids minus one.
    std::vector<std::vector<int>> adjacency_matrix() const {
        const int n = arc_count();
        std::vector<std::vector<int>> B(n, std::vector<int>(n, 0));
        for (const auto& tri : tris_) {
            if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) continue;
            for (int t = 0; t < 3; ++t) {
                const int a = tri[t], b = tri[(t + 1) % 3];  // b follows a clockwise
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k) {
                        if (pi(j) == a && pi(k) == b) B[j - 1][k - 1] += 1;
                        if (pi(j) == b && pi(k) == a) B[j - 1][k - 1] -= 1;
                    }
            }
        }
        return B;
    }

private:
    void build() {
        occ_.assign(label_count() + 1, {});
        for (int t = 0; t < (int)tris_.size(); ++t)
            for (int k = 0; k < 3; ++k)
                if (tris_[t][k] >= 1) occ_[tris_[t][k]].push_back({t, k});
        for (int a = 1; a <= arc_count(); ++a)
            if (occ_[a].size() != 2)
                diagnostics_.push_back("arc '" + label_name(a) + "' occurs in " +
                                       std::to_string(occ_[a].size()) +
                                       " triangle slots (expected 2)");
        for (int b = arc_count() + 1; b <= label_count(); ++b)
            if (occ_[b].size() != 1)
                diagnostics_.push_back("boundary segment '" + label_name(b) +
                                       "' occurs in " + std::to_string(occ_[b].size()) +
                                       " triangle slots (expected 1)");

        // self-folded records: radius occurs twice in one triangle whose third
        // side is the loop
        std::set<int> declared_sf_tris;
        for (const auto& sf : self_folded_) {
            const int r = id_.count(sf.radius) ? id_.at(sf.radius) : 0;
            const int l = id_.count(sf.loop) ? id_.at(sf.loop) : 0;
            if (!r || !l) {
                diagnostics_.push_back("self-folded record names unknown labels");
                continue;
            }
            bool ok = false;
            for (int t = 0; t < (int)tris_.size(); ++t) {
                int rc = 0, lc = 0;
                for (int k = 0; k < 3; ++k) {
                    if (tris_[t][k] == r) ++rc;
                    if (tris_[t][k] == l) ++lc;
                }
                if (rc == 2 && lc == 1) {
                    ok = true;
                    declared_sf_tris.insert(t);
                }
            }
            if (!ok)
                diagnostics_.push_back("self-folded record (radius '" + sf.radius +
                                       "', loop '" + sf.loop +
                                       "') has no matching triangle (r,r,l)");
            radius_loop_[r] = l;
            loop_radius_[l] = r;
            radius_punct_[r] = sf.puncture;
        }
        for (int t = 0; t < (int)tris_.size(); ++t) {
            const auto& tr = tris_[t];
            const bool repeated = tr[0] == tr[1] || tr[1] == tr[2] || tr[0] == tr[2];
            if (repeated && !declared_sf_tris.count(t))
                diagnostics_.push_back("triangle " + std::to_string(t) +
                                       " repeats a side but no self_folded record declares it");
        }
        if (!diagnostics_.empty()) return;

        walk_corners();
        assign_points();
    }

    // Corner (t,k) sits between slots k and k+1. The walk crosses slot k+1 to
    // its mate (t',k') and continues at corner (t',k'). Interior points close
    // into cycles, boundary points into chains.
    void walk_corners() {
        std::map<Slot, Slot> nxt, prv;
        for (int t = 0; t < (int)tris_.size(); ++t)
            for (int k = 0; k < 3; ++k) {
                const Slot crossed{t, (k + 1) % 3};
                if (!is_interior(side(crossed))) continue;
                const Slot m = mate(crossed);
                nxt[{t, k}] = m;
                prv[m] = {t, k};
            }
        std::set<Slot> seen;
        for (int t = 0; t < (int)tris_.size(); ++t)
            for (int k = 0; k < 3; ++k) {
                const Slot c{t, k};
                if (seen.count(c) || prv.count(c)) continue;
                // chain start: boundary marked point
                std::vector<Slot> chain{c};
                seen.insert(c);
                Slot cur = c;
                while (nxt.count(cur)) {
                    cur = nxt[cur];
                    if (seen.count(cur)) {
                        diagnostics_.push_back("corner walk is inconsistent (chain rejoins)");
                        return;
                    }
                    chain.push_back(cur);
                    seen.insert(cur);
                }
                chains_.push_back(std::move(chain));
            }
        for (int t = 0; t < (int)tris_.size(); ++t)
            for (int k = 0; k < 3; ++k) {
                const Slot c{t, k};
                if (seen.count(c)) continue;
                std::vector<Slot> cyc{c};
                seen.insert(c);
                Slot cur = nxt.at(c);
                while (!(cur == c)) {
                    if (seen.count(cur)) {
                        diagnostics_.push_back("corner walk is inconsistent (cycle collides)");
                        return;
                    }
                    cyc.push_back(cur);
                    seen.insert(cur);
                    cur = nxt.at(cur);
                }
                cycles_.push_back(std::move(cyc));
            }
    }

    // Flanking sides of a corner: slots k and k+1 of its triangle.
    std::pair<int, int> corner_sides(const Slot& c) const {
        return {tris_[c.tri][c.pos], tris_[c.tri][(c.pos + 1) % 3]};
    }

    void assign_points() {
        const std::set<std::string> punct_set(punctures_.begin(), punctures_.end());
        auto candidates = [&](const std::vector<Slot>& group) {
            std::set<std::string> cand;
            bool first = true;
            for (const auto& c : group) {
                auto [a, b] = corner_sides(c);
                std::set<std::string> here;
                const auto& ea = declared_ends_.at(label_name(a));
                const auto& eb = declared_ends_.at(label_name(b));
                for (const auto& pa : ea)
                    for (const auto& pb : eb)
                        if (pa == pb) here.insert(pa);
                if (first) {
                    cand = here;
                    first = false;
                } else {
                    std::set<std::string> merged;
                    std::set_intersection(cand.begin(), cand.end(), here.begin(),
                                          here.end(),
                                          std::inserter(merged, merged.begin()));
                    cand = merged;
                }
            }
            return cand;
        };
        std::set<std::string> used;
        auto place = [&](const std::vector<Slot>& group, bool puncture) {
            auto cand = candidates(group);
            std::vector<std::string> filtered;
            for (const auto& nm : cand)
                if (punct_set.count(nm) == (puncture ? 1u : 0u) && !used.count(nm))
                    filtered.push_back(nm);
            if (filtered.size() != 1) {
                diagnostics_.push_back(
                    "cannot uniquely assign a declared marked point to a corner " +
                    std::string(puncture ? "cycle" : "chain") + " (" +
                    std::to_string(filtered.size()) + " candidates)");
                return std::string{};
            }
            used.insert(filtered[0]);
            return filtered[0];
        };
        for (const auto& cyc : cycles_) {
            PointInfo p;
            p.puncture = true;
            p.name = place(cyc, true);
            if (p.name.empty()) return;
            p.corners = cyc;
            for (const auto& c : cyc) p.walk_arcs.push_back(tris_[c.tri][(c.pos + 1) % 3]);
            points_.push_back(std::move(p));
        }
        for (const auto& ch : chains_) {
            PointInfo p;
            p.puncture = false;
            p.name = place(ch, false);
            if (p.name.empty()) return;
            p.corners = ch;
            for (std::size_t i = 0; i + 1 < ch.size(); ++i)
                p.walk_arcs.push_back(tris_[ch[i].tri][(ch[i].pos + 1) % 3]);
            points_.push_back(std::move(p));
        }
        // every declared marked point must be realized
        for (const auto& nm : marked_points_) {
            bool found = false;
            for (const auto& p : points_) found |= (p.name == nm);
            if (!found)
                diagnostics_.push_back("declared marked point '" + nm +
                                       "' does not appear in the triangulation");
        }
        for (const auto& p : points_)
            for (const auto& c : p.corners) corner_point_[c] = p.name;
    }

    std::vector<std::string> arc_names_, boundary_names_;
    std::vector<std::string> punctures_, marked_points_;
    std::map<std::string, std::array<std::string, 2>> declared_ends_;
    std::map<std::string, int> id_;
    std::vector<std::array<int, 3>> tris_;

    std::vector<SelfFolded> self_folded_;

    std::vector<std::vector<Slot>> occ_;
    std::map<int, int> radius_loop_, loop_radius_;
    std::map<int, std::string> radius_punct_;
    std::vector<std::vector<Slot>> cycles_, chains_;
    std::vector<PointInfo> points_;
    std::map<Slot, std::string> corner_point_;
    std::vector<std::string> diagnostics_;
};


// The tagged triangulation iota(T) of an ideal triangulation: every arc
// plain, except that the loop of each self-folded triangle is replaced by its
// radius notched at the enclosed puncture. Indices follow the ideal labels.
struct TaggedTriangulationArc {
    int index = 0;       // label index in T (1..n)
    int underlying = 0;  // underlying plain arc id
    Tag tag_at_puncture = Tag::plain;
    std::string puncture;  // set when notched
};

inline std::vector<TaggedTriangulationArc> ideal_to_tagged(const Triangulation& T) {
    std::vector<TaggedTriangulationArc> out;
    for (int a = 1; a <= T.arc_count(); ++a) {
        TaggedTriangulationArc t;
        t.index = a;
        if (T.is_monogon_loop(a)) {
            t.underlying = T.radius_of_loop(a);
            t.tag_at_puncture = Tag::notched;
            t.puncture = T.puncture_of_radius(t.underlying);
        } else {
            t.underlying = a;
        }
        out.push_back(t);
    }
    return out;
}

// Inverse of ideal_to_tagged (the Remark's two replacement rules): a notched
// radius turns back into the loop that carries its index; everything else is
// its own underlying arc. Returns the arc ids of the ideal triangulation.
inline std::vector<int> tagged_to_ideal(const Triangulation& T,
                                        const std::vector<TaggedTriangulationArc>& tagged) {
    std::vector<int> out;
    for (const auto& t : tagged) {
        if (t.tag_at_puncture == Tag::notched) {
            if (!T.is_radius(t.underlying))
                throw std::runtime_error("notched tagged arc is not a radius");
            out.push_back(t.index);  // the loop label carrying this index
        } else {
            out.push_back(t.underlying);
        }
    }
    return out;
}

inline Triangulation Triangulation::from_json(const nlohmann::json& j) {
    std::vector<std::string> arcs, boundary, punctures, marked;
    std::map<std::string, std::array<std::string, 2>> ends;
    for (const auto& a : j.at("arcs")) {
        arcs.push_back(a.at("name").get<std::string>());
        ends[arcs.back()] = {a.at("ends")[0].get<std::string>(),
                             a.at("ends")[1].get<std::string>()};
    }
    for (const auto& b : j.at("boundary")) {
        boundary.push_back(b.at("name").get<std::string>());
        ends[boundary.back()] = {b.at("ends")[0].get<std::string>(),
                                 b.at("ends")[1].get<std::string>()};
    }
    for (const auto& p : j.at("punctures")) punctures.push_back(p.get<std::string>());
    for (const auto& p : j.at("marked_points")) marked.push_back(p.get<std::string>());
    std::vector<std::array<std::string, 3>> tris;
    for (const auto& t : j.at("triangles"))
        tris.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                        t[2].get<std::string>()});
    std::vector<SelfFolded> sf;
    if (j.contains("self_folded"))
        for (const auto& s : j.at("self_folded")) {
            SelfFolded rec;
            rec.radius = s.at("radius").get<std::string>();
            rec.loop = s.at("loop").get<std::string>();
            rec.puncture = s.at("puncture").get<std::string>();
            sf.push_back(rec);
        }
    return Triangulation(arcs, boundary, tris, sf, punctures, marked, ends);
}

inline TaggedArc arc_from_json(const nlohmann::json& j, const Triangulation& t) {
    TaggedArc a;
    a.name = j.value("name", "arc");
    for (int e = 0; e < 2; ++e) {
        const auto& ep = j.at("endpoints")[e];
        a.endpoints[e].point = ep.at("point").get<std::string>();
        const std::string tag = ep.at("tag").get<std::string>();
        if (tag == "plain")
            a.endpoints[e].tag = Tag::plain;
        else if (tag == "notched")
            a.endpoints[e].tag = Tag::notched;
        else
            throw std::runtime_error("bad tag '" + tag + "'");
    }
    for (const auto& c : j.at("crossings")) a.crossings.push_back(t.id_of(c.get<std::string>()));
    a.first_triangle = j.at("first_triangle").get<int>();
    a.last_triangle = j.at("last_triangle").get<int>();
    return a;
}

}  // namespace cluloop
