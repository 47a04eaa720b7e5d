#pragma once

// The quivers Q_G and Q_G-bowtie, order ideals, the height map, and the
// lattice of good matchings.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cluloop/loopgraph.hpp"

namespace cluloop {

struct HasseQuiver {
    int vertices = 0;                          // 1..d
    std::set<std::pair<int, int>> arrows;      // (from, to), from <= to in the poset

    bool acyclic() const {
        std::map<int, std::vector<int>> adj;
        for (auto [a, b] : arrows) adj[a].push_back(b);
        std::vector<int> state(vertices + 1, 0);
        std::function<bool(int)> dfs = [&](int v) {
            state[v] = 1;
            for (int w : adj[v]) {
                if (state[w] == 1) return false;
                if (state[w] == 0 && !dfs(w)) return false;
            }
            state[v] = 2;
            return true;
        };
        for (int v = 1; v <= vertices; ++v)
            if (state[v] == 0 && !dfs(v)) return false;
        return true;
    }

    // reachability closure: below[v] = all u with u <= v
    std::vector<std::set<int>> below() const {
        std::vector<std::set<int>> out(vertices + 1);
        std::map<int, std::vector<int>> pred;
        for (auto [a, b] : arrows) pred[b].push_back(a);
        // iterate to fixpoint (small graphs)
        bool changed = true;
        for (int v = 1; v <= vertices; ++v) out[v].insert(v);
        while (changed) {
            changed = false;
            for (int v = 1; v <= vertices; ++v)
                for (int u : pred[v])
                    for (int w : out[u])
                        if (out[v].insert(w).second) changed = true;
        }
        return out;
    }
};

// Def. 7.3: arrows between consecutive tiles by the parity / glue-direction
// rule. On the right = glued east, on top = glued north.
inline HasseQuiver quiver_of_snake(const SnakeGraph& g) {
    HasseQuiver q;
    q.vertices = g.tile_count();
    const auto& dirs = g.glue_dirs();
    for (int j = 1; j < q.vertices + 0; ++j) {
        if (j > (int)dirs.size()) break;
        const bool right = dirs[j - 1] == 'R';
        const bool jodd = j % 2 == 1;
        // arrow j -> j+1 iff (j odd and right) or (j even and on top)
        if (jodd == right)
            q.arrows.insert({j, j + 1});
        else
            q.arrows.insert({j + 1, j});
    }
    if (!q.acyclic()) throw std::runtime_error("snake quiver acquired a cycle (bug)");
    return q;
}

// The loop quiver: the snake quiver plus one arrow per cut, by the
// cut-edge-side / parity rule.
inline HasseQuiver quiver_of_loop(const LoopGraph& lg) {
    HasseQuiver q = quiver_of_snake(lg.base());
    const int d = lg.base().tile_count();
    for (const auto& c : lg.cuts()) {
        const int k = c.k;
        const bool kodd = k % 2 == 1;
        auto far_is = [&](Side s) { return lg.base().edge_of(k, s) == c.far_edge; };
        if (c.at_start) {
            // arrow 1->k iff (k odd and S(Gk) cut) or (k even and W(Gk) cut)
            const bool fwd = (kodd && far_is(Side::S)) || (!kodd && far_is(Side::W));
            const bool bwd = (!kodd && far_is(Side::S)) || (kodd && far_is(Side::W));
            if (fwd == bwd) throw std::runtime_error("cut edge is on an unexpected side");
            q.arrows.insert(fwd ? std::pair{1, k} : std::pair{k, 1});
        } else {
            const bool fwd = (kodd && far_is(Side::N)) || (!kodd && far_is(Side::E));
            const bool bwd = (!kodd && far_is(Side::N)) || (kodd && far_is(Side::E));
            if (fwd == bwd) throw std::runtime_error("cut edge is on an unexpected side");
            q.arrows.insert(fwd ? std::pair{d, k} : std::pair{k, d});
        }
    }
    if (!q.acyclic())
        throw std::runtime_error("loop quiver is cyclic: not a surface loop graph");
    return q;
}

// All order ideals (downward-closed sets), by DFS over elements in a
// topological order with closure pruning; deterministic output sorted as sets.
inline std::vector<std::set<int>> order_ideals(const HasseQuiver& q) {
    if (!q.acyclic()) throw std::runtime_error("order_ideals requires an acyclic quiver");
    const auto bel = q.below();
    // topological order: sources first, so every element's down-set precedes it
    std::vector<int> topo;
    {
        std::vector<int> indeg(q.vertices + 1, 0);
        for (auto [a, b] : q.arrows) ++indeg[b];
        std::set<int> ready;
        for (int v = 1; v <= q.vertices; ++v)
            if (indeg[v] == 0) ready.insert(v);
        std::map<int, std::vector<int>> adj;
        for (auto [a, b] : q.arrows) adj[a].push_back(b);
        while (!ready.empty()) {
            const int v = *ready.begin();
            ready.erase(ready.begin());
            topo.push_back(v);
            for (int w : adj[v])
                if (--indeg[w] == 0) ready.insert(w);
        }
    }
    std::vector<std::set<int>> out;
    std::set<int> cur;
    std::function<void(int)> rec = [&](int idx) {
        if (idx == (int)topo.size()) {
            out.push_back(cur);
            return;
        }
        const int v = topo[idx];
        rec(idx + 1);  // exclude v
        bool ok = true;
        for (int u : bel[v])
            if (u != v && !cur.count(u)) {
                ok = false;
                break;
            }
        if (ok) {
            cur.insert(v);
            rec(idx + 1);
            cur.erase(v);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

// Exhaustive subset filter, kept as the independent oracle for d <= 14.
inline std::vector<std::set<int>> order_ideals_bruteforce(const HasseQuiver& q) {
    const auto bel = q.below();
    std::vector<std::set<int>> out;
    for (unsigned long mask = 0; mask < (1ul << q.vertices); ++mask) {
        std::set<int> I;
        for (int v = 1; v <= q.vertices; ++v)
            if (mask & (1ul << (v - 1))) I.insert(v);
        bool closed = true;
        for (int v : I)
            for (int u : bel[v])
                if (!I.count(u)) {
                    closed = false;
                    break;
                }
        if (closed) out.push_back(I);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The height map: good matchings <-> order ideals of the loop quiver.
inline std::set<int> ideal_from_matching(const GoodMatching& p) { return p.height; }

inline const GoodMatching& matching_from_ideal(const std::vector<GoodMatching>& all,
                                               const std::set<int>& ideal) {
    for (const auto& gm : all)
        if (gm.height == ideal) return gm;
    throw std::runtime_error("no good matching with the requested height (not an ideal?)");
}

// The lattice of good matchings: vertices are good matchings, one arrow per
// positive twist. Returned as adjacency on indices into good_matchings().
struct MatchingLattice {
    std::vector<GoodMatching> matchings;
    std::set<std::pair<int, int>> arrows;  // (from index, to index)
};

inline MatchingLattice lattice(const LoopGraph& lg) {
    MatchingLattice L;
    L.matchings = lg.good_matchings();
    std::map<std::set<int>, int> index_by_height;
    for (int i = 0; i < (int)L.matchings.size(); ++i)
        index_by_height[L.matchings[i].height] = i;
    const int d = lg.base().tile_count();
    for (int i = 0; i < (int)L.matchings.size(); ++i)
        for (int j = 1; j <= d; ++j) {
            auto tw = lg.positive_twist(L.matchings[i], j);
            if (!tw) continue;
            auto it = index_by_height.find(tw->height);
            if (it == index_by_height.end())
                throw std::runtime_error("twist produced an unknown matching");
            L.arrows.insert({i, it->second});
        }
    return L;
}

}  // namespace cluloop
