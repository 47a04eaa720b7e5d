#pragma once

// Snake graphs from crossing sequences: tiles with oriented edge labels,
// perfect-matching enumeration, induced diagonal orientations, positivity.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cluloop/surface.hpp"

namespace cluloop {

// The passage chain of a directed curve: the regions visited between
// crossings. passages[j-1] / passages[j] are the lower / upper triangle of
// tile j; entry/exit are triangle slots (invalid at the two ends).
struct Passage {
    int tri = -1;
    Slot entry{};
    Slot exit{};
};

struct CrossingWalk {
    std::vector<Passage> passages;  // size d+1
    std::vector<int> crossings;     // arc ids, size d
};

// Resolve a crossing sequence into a passage chain by slot walking.
// first_tri anchors the start; after each crossing the walk continues in the
// mate slot's triangle. When a triangle offers two slots with the wanted
// label (a self-folded radius entered through the loop), the slot PRECEDING
// the entry slot in cyclic order is taken; the mirrored choice changes the
// zig-zag bend at the radius tile and is calibrated by the mutation oracle.
inline CrossingWalk resolve_walk(const Triangulation& T, const std::vector<int>& crossings,
                                 int first_tri, int last_tri) {
    CrossingWalk w;
    w.crossings = crossings;
    Passage cur;
    cur.tri = first_tri;
    for (std::size_t j = 0; j < crossings.size(); ++j) {
        const int want = crossings[j];
        Slot exit{};
        for (int off = 1; off <= 3; ++off) {
            const int pos = cur.entry.valid() ? (cur.entry.pos + 3 - off) % 3 : off - 1;
            const Slot s{cur.tri, pos};
            if (cur.entry.valid() && s == cur.entry) continue;
            if (T.side(s) == want) {
                exit = s;
                break;
            }
        }
        if (!exit.valid())
            throw std::runtime_error("crossing step " + std::to_string(j + 1) + ": arc '" +
                                     T.label_name(want) + "' is not a side of triangle " +
                                     std::to_string(cur.tri));
        cur.exit = exit;
        w.passages.push_back(cur);
        const Slot next_entry = T.mate(exit);
        cur = Passage{};
        cur.tri = next_entry.tri;
        cur.entry = next_entry;
    }
    cur.exit = Slot{};
    w.passages.push_back(cur);
    if (last_tri >= 0 && cur.tri != last_tri)
        throw std::runtime_error("crossing sequence ends in triangle " +
                                 std::to_string(cur.tri) + ", expected " +
                                 std::to_string(last_tri));
    return w;
}

enum class Side : uint8_t { N = 0, E = 1, S = 2, W = 3 };
inline const char* side_name(Side s) {
    static const char* nm[4] = {"N", "E", "S", "W"};
    return nm[(int)s];
}
inline Side side_mirror(Side s) {  // 180-degree rotation: N<->S, E<->W
    switch (s) {
        case Side::N: return Side::S;
        case Side::S: return Side::N;
        case Side::E: return Side::W;
        default: return Side::E;
    }
}

using Vertex = std::pair<int, int>;

struct Tile {
    int index = 0;           // 1..d
    int rel = 1;             // +1 / -1, alternating with rel(G1) = +1
    int diag = 0;            // arc id of the crossed arc
    bool ordinary = true;    // false on self-folded radius crossings
    std::array<Slot, 4> side_slot{};  // indexed by Side
    Vertex sw{0, 0};         // grid position of the tile's SW corner

    Vertex corner(Side a, Side b) const;  // the shared corner of two sides
    std::pair<Vertex, Vertex> side_vertices(Side s) const {
        const auto [x, y] = sw;
        switch (s) {
            case Side::S: return {{x, y}, {x + 1, y}};
            case Side::W: return {{x, y}, {x, y + 1}};
            case Side::N: return {{x, y + 1}, {x + 1, y + 1}};
            default: return {{x + 1, y}, {x + 1, y + 1}};
        }
    }
    Vertex nw() const { return {sw.first, sw.second + 1}; }
    Vertex se() const { return {sw.first + 1, sw.second}; }
    Vertex ne() const { return {sw.first + 1, sw.second + 1}; }
};

struct Edge {
    int id = -1;
    Slot slot{};       // triangle slot carrying the label
    int label = 0;     // arc or boundary id
    Vertex a{}, b{};   // base-plane endpoints
    int tile = -1;     // a tile this edge bounds (lowest index)
    Side side{};       // its side in that tile
    int occurrences = 0;  // 2 for an edge shared by consecutive tiles
};

// A matching is a set of edge ids.
using Matching = std::vector<int>;

class SnakeGraph {
public:
    // Build from a resolved crossing walk; conventions:
    //   rel alternates starting at +1;
    //   lower triangle, clockwise from the exit slot (D,P,Q):
    //     rel=+1 -> S=P, W=Q ; rel=-1 -> W=P, S=Q
    //   upper triangle, clockwise from the entry slot (D,A,B):
    //     rel=+1 -> N=A, E=B ; rel=-1 -> E=A, N=B
    SnakeGraph(const Triangulation& T, CrossingWalk walk)
        : tri_(&T), walk_(std::move(walk)) {
        const int d = (int)walk_.crossings.size();
        tiles_.resize(d);
        for (int j = 1; j <= d; ++j) {
            Tile& t = tiles_[j - 1];
            t.index = j;
            t.rel = (j % 2 == 1) ? 1 : -1;
            t.diag = walk_.crossings[j - 1];
            t.ordinary = !T.is_radius(t.diag);
            const Passage& lo = walk_.passages[j - 1];
            const Passage& up = walk_.passages[j];
            auto rot = [&](int tri, const Slot& from, int off) {
                return Slot{tri, (from.pos + off) % 3};
            };
            const Slot P = rot(lo.tri, lo.exit, 1), Q = rot(lo.tri, lo.exit, 2);
            if (t.rel == 1) {
                t.side_slot[(int)Side::S] = P;
                t.side_slot[(int)Side::W] = Q;
            } else {
                t.side_slot[(int)Side::W] = P;
                t.side_slot[(int)Side::S] = Q;
            }
            const Slot A = rot(up.tri, up.entry, 1), B = rot(up.tri, up.entry, 2);
            if (t.rel == 1) {
                t.side_slot[(int)Side::N] = A;
                t.side_slot[(int)Side::E] = B;
            } else {
                t.side_slot[(int)Side::E] = A;
                t.side_slot[(int)Side::N] = B;
            }
        }
        // glue directions: the shared edge is the third slot of the shared
        // passage; it must sit N or E on tile j and S or W on tile j+1.
        dirs_.resize(std::max(0, d - 1));
        for (int j = 1; j < d; ++j) {
            const Passage& sh = walk_.passages[j];
            Slot third{};
            for (int pos = 0; pos < 3; ++pos) {
                const Slot s{sh.tri, pos};
                if (s == sh.entry || s == sh.exit) continue;
                third = s;
            }
            const Tile& a = tiles_[j - 1];
            const Tile& b = tiles_[j];
            if (a.side_slot[(int)Side::N] == third &&
                b.side_slot[(int)Side::S] == third)
                dirs_[j - 1] = 'U';
            else if (a.side_slot[(int)Side::E] == third &&
                     b.side_slot[(int)Side::W] == third)
                dirs_[j - 1] = 'R';
            else
                throw std::runtime_error("tile gluing inconsistent at step " +
                                         std::to_string(j));
        }
        // coordinates
        int x = 0, y = 0;
        for (int j = 0; j < d; ++j) {
            tiles_[j].sw = {x, y};
            if (j + 1 < d) {
                if (dirs_[j] == 'U')
                    ++y;
                else
                    ++x;
            }
        }
        // edges: key by (slot, endpoint set); shared slots between consecutive
        // tiles coincide, a slot reappearing elsewhere becomes a new edge.
        std::map<Slot, std::vector<int>> by_slot;
        for (int j = 0; j < d; ++j) {
            for (int si = 0; si < 4; ++si) {
                const Slot s = tiles_[j].side_slot[si];
                auto [va, vb] = tiles_[j].side_vertices((Side)si);
                if (vb < va) std::swap(va, vb);
                int found = -1;
                for (int eid : by_slot[s])
                    if (edges_[eid].a == va && edges_[eid].b == vb) found = eid;
                if (found < 0) {
                    Edge e;
                    e.id = (int)edges_.size();
                    e.slot = s;
                    e.label = T.side(s);
                    e.a = va;
                    e.b = vb;
                    e.tile = j + 1;
                    e.side = (Side)si;
                    by_slot[s].push_back(e.id);
                    edges_.push_back(e);
                    found = e.id;
                }
                ++edges_[found].occurrences;
                tile_edge_[{j + 1, (Side)si}] = found;
            }
        }
        for (const auto& e : edges_) {
            vertices_.insert(e.a);
            vertices_.insert(e.b);
        }
    }

    const Triangulation& triangulation() const { return *tri_; }
    const CrossingWalk& walk() const { return walk_; }
    int tile_count() const { return (int)tiles_.size(); }
    const std::vector<Tile>& tiles() const { return tiles_; }
    const Tile& tile(int j) const { return tiles_[j - 1]; }  // 1-based
    const std::vector<char>& glue_dirs() const { return dirs_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }
    const std::set<Vertex>& vertices() const { return vertices_; }
    int edge_of(int tile, Side s) const { return tile_edge_.at({tile, s}); }

    bool is_straight() const {
        for (std::size_t i = 1; i < dirs_.size(); ++i)
            if (dirs_[i] != dirs_[0]) return false;
        return true;
    }
    bool is_zigzag() const {
        for (std::size_t i = 1; i < dirs_.size(); ++i)
            if (dirs_[i] == dirs_[i - 1]) return false;
        return true;
    }

    // All perfect matchings, by sequential extension along the snake; the
    // result is sorted by height set for deterministic output.
    std::vector<Matching> perfect_matchings() const {
        auto pms = enumerate_pm(vertices_, all_edge_ids());
        std::sort(pms.begin(), pms.end(), [&](const Matching& a, const Matching& b) {
            return positivity(a) < positivity(b);
        });
        return pms;
    }

    std::vector<int> all_edge_ids() const {
        std::vector<int> ids(edges_.size());
        for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = (int)i;
        return ids;
    }

    // Generic enumerator on a vertex subset / edge subset of this graph.
    std::vector<Matching> enumerate_pm(const std::set<Vertex>& verts,
                                       const std::vector<int>& edge_ids) const {
        std::vector<Vertex> vs(verts.begin(), verts.end());
        std::map<Vertex, int> vi;
        for (int i = 0; i < (int)vs.size(); ++i) vi[vs[i]] = i;
        std::vector<std::vector<std::pair<int, int>>> adj(vs.size());
        for (int eid : edge_ids) {
            const Edge& e = edges_[eid];
            if (!vi.count(e.a) || !vi.count(e.b)) continue;
            int ia = vi[e.a], ib = vi[e.b];
            if (ib < ia) std::swap(ia, ib);
            adj[ia].push_back({eid, ib});
        }
        std::vector<Matching> out;
        std::vector<bool> covered(vs.size(), false);
        Matching cur;
        enum_rec(adj, covered, 0, cur, out);
        return out;
    }

    // Orientation the matching induces on each diagonal, by the alternating
    // walk from SW(G1) to NE(Gd). Returns per-tile direction, true = "down"
    // (NW -> SE). Throws if the walk does not alternate cleanly.
    std::vector<bool> induced_orientation(const Matching& pm) const {
        const int d = tile_count();
        std::map<Vertex, int> vmatch;
        for (int eid : pm) {
            const Edge& e = edges_[eid];
            if (vmatch.count(e.a) || vmatch.count(e.b))
                throw std::runtime_error("induced_orientation: not a matching");
            vmatch[e.a] = eid;
            vmatch[e.b] = eid;
        }
        std::vector<bool> down(d, false);
        std::vector<bool> used(d, false);
        Vertex cur = tiles_[0].sw;
        const Vertex end = tiles_[d - 1].ne();
        for (int step = 0; step <= d; ++step) {
            auto it = vmatch.find(cur);
            if (it == vmatch.end())
                throw std::runtime_error("induced_orientation: walk stuck (uncovered vertex)");
            const Edge& e = edges_[it->second];
            cur = (e.a == cur) ? e.b : e.a;
            if (step == d) break;
            int hit = -1;
            bool dir_down = false;
            for (int j = 0; j < d; ++j) {
                if (used[j]) continue;
                if (cur == tiles_[j].nw()) {
                    hit = j;
                    dir_down = true;
                    break;
                }
                if (cur == tiles_[j].se()) {
                    hit = j;
                    dir_down = false;
                    break;
                }
            }
            if (hit < 0)
                throw std::runtime_error("induced_orientation: walk has no diagonal to traverse");
            used[hit] = true;
            down[hit] = dir_down;
            cur = dir_down ? tiles_[hit].se() : tiles_[hit].nw();
        }
        if (cur != end) throw std::runtime_error("induced_orientation: walk missed NE(Gd)");
        return down;
    }

    // Positive tiles: diagonal down with rel = +1, or up with rel = -1.
    std::set<int> positivity(const Matching& pm) const {
        const auto down = induced_orientation(pm);
        std::set<int> pos;
        for (int j = 0; j < tile_count(); ++j)
            if (down[j] == (tiles_[j].rel == 1)) pos.insert(j + 1);
        return pos;
    }

private:
    static void enum_rec(const std::vector<std::vector<std::pair<int, int>>>& adj,
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
        for (const auto& [eid, j] : adj[i]) {
            if (covered[j]) continue;
            covered[i] = covered[j] = true;
            cur.push_back(eid);
            enum_rec(adj, covered, i + 1, cur, out);
            cur.pop_back();
            covered[i] = covered[j] = false;
        }
    }

    const Triangulation* tri_;
    CrossingWalk walk_;
    std::vector<Tile> tiles_;
    std::vector<char> dirs_;
    std::vector<Edge> edges_;
    std::set<Vertex> vertices_;
    std::map<std::pair<int, Side>, int> tile_edge_;
};

}  // namespace cluloop
