#pragma once

// Brute-force oracles, independent of the syllable-structure fast paths they
// check: BFS on the lazily expanded tree, Dijkstra on the explicit segment
// graph, exhaustive admissible-sequence search.

#include <map>
#include <queue>
#include <set>

#include "acyl/tree.hpp"

namespace acyltest {

struct BfsRegion {
    std::map<acyl::TreeVertex, long long, acyl::VertexLess> dist;
    std::map<acyl::TreeVertex, acyl::TreeVertex, acyl::VertexLess> parent;
    bool acyclic = true;
};

inline BfsRegion bfs_region(const acyl::Tree& T, const acyl::TreeVertex& root, long long radius,
                            long long budget) {
    BfsRegion r;
    r.dist[root] = 0;
    std::queue<acyl::TreeVertex> q;
    q.push(root);
    while (!q.empty()) {
        acyl::TreeVertex u = q.front();
        q.pop();
        long long du = r.dist[u];
        if (du == radius) continue;
        for (const acyl::TreeVertex& v : T.neighbors(u, budget).verts) {
            auto it = r.dist.find(v);
            if (it == r.dist.end()) {
                r.dist[v] = du + 1;
                r.parent.emplace(v, u);
                q.push(v);
            } else {
                // in a tree the only previously seen neighbour is the parent
                auto pu = r.parent.find(u);
                bool is_parent = pu != r.parent.end() && pu->second == v;
                if (!is_parent) r.acyclic = false;
            }
        }
    }
    return r;
}

// Bidirectional BFS distance between two vertices, expanding neighbours on
// the fly.
inline long long bfs_distance(const acyl::Tree& T, const acyl::TreeVertex& a,
                              const acyl::TreeVertex& b, long long budget, long long maxd = 64) {
    if (a == b) return 0;
    using Map = std::map<acyl::TreeVertex, long long, acyl::VertexLess>;
    Map da, db;
    da[a] = 0;
    db[b] = 0;
    std::vector<acyl::TreeVertex> fa{a}, fb{b};
    long long ra = 0, rb = 0;
    while (!fa.empty() || !fb.empty()) {
        bool expand_a = !fa.empty() && (fa.size() <= fb.size() || fb.empty());
        auto& fr = expand_a ? fa : fb;
        auto& self = expand_a ? da : db;
        auto& other = expand_a ? db : da;
        long long& rr = expand_a ? ra : rb;
        if (ra + rb >= maxd) return -1;
        std::vector<acyl::TreeVertex> next;
        for (const acyl::TreeVertex& u : fr)
            for (const acyl::TreeVertex& v : T.neighbors(u, budget).verts) {
                if (self.count(v)) continue;
                auto it = other.find(v);
                if (it != other.end()) return rr + 1 + it->second;
                self[v] = rr + 1;
                next.push_back(v);
            }
        rr += 1;
        fr.swap(next);
    }
    return -1;
}

} // namespace acyltest
