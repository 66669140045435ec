#pragma once

#include <optional>
#include <set>
#include <vector>

#include "acyl/group.hpp"

namespace acyl {

// Vertices of the barycentrically subdivided Bass-Serre tree. A_vertex /
// B_vertex carry canonical codes for gA resp. gB (tail dropped, trailing
// same-factor syllable stripped); midpoints carry codes for gC (tail
// dropped). All distances are in subdivided edge units.
enum class VKind : uint8_t { AVert = 0, BVert = 1, Mid = 2 };

struct TreeVertex {
    VKind kind = VKind::Mid;
    GroupElement code;

    bool operator==(const TreeVertex& o) const { return kind == o.kind && code == o.code; }
    bool operator!=(const TreeVertex& o) const { return !(*this == o); }
};

int compare_vertices(const TreeVertex& a, const TreeVertex& b);
struct VertexLess {
    bool operator()(const TreeVertex& a, const TreeVertex& b) const {
        return compare_vertices(a, b) < 0;
    }
};
struct VertexHash {
    size_t operator()(const TreeVertex& v) const {
        return hash_element(v.code) * 31 + static_cast<size_t>(v.kind);
    }
};

// An edge of the subdivision: one endpoint is always a midpoint (stored
// second).
struct TreeEdge {
    TreeVertex endpoint;
    TreeVertex mid;
};

using Path = std::vector<TreeVertex>; // consecutive vertices, length = size-1

// An eventually periodic point of Delta(T) = V_inf(T) u dT: an
// infinite-valence vertex, or a geodesic ray given by a prefix from its base
// plus a hyperbolic period whose axis carries the tail.
struct BoundaryTarget {
    enum class Kind : uint8_t { InfiniteVertex, Ray } kind = Kind::InfiniteVertex;
    TreeVertex vertex;        // InfiniteVertex
    Path prefix;              // Ray: prefix[0] = base, prefix.back() = anchor on the axis
    GroupElement period;      // hyperbolic element
    Path window;              // [anchor, period * anchor] along the axis, size = ||period||+1
    long long period_len = 0; // ||period||

    bool is_ray() const { return kind == Kind::Ray; }
};

struct FiniteSubtree {
    std::set<TreeVertex, VertexLess> vertices;

    bool contains(const TreeVertex& v) const { return vertices.count(v) > 0; }
    size_t size() const { return vertices.size(); }
};

class Tree {
public:
    explicit Tree(const Group& g) : G_(&g) {}

    const Group& group() const { return *G_; }

    TreeVertex canonical(VKind kind, GroupElement code) const;
    TreeVertex base_mid() const { return canonical(VKind::Mid, G_->one()); }
    TreeVertex base_a() const { return canonical(VKind::AVert, G_->one()); }
    TreeVertex base_b() const { return canonical(VKind::BVert, G_->one()); }

    TreeVertex act(const GroupElement& g, const TreeVertex& v) const;
    Path act(const GroupElement& g, const Path& p) const;
    BoundaryTarget act(const GroupElement& g, const BoundaryTarget& t) const;

    // Geodesic [base_mid, v]; v's position is size-1.
    Path path_from_base(const TreeVertex& v) const;
    Path geodesic(const TreeVertex& u, const TreeVertex& v) const;
    long long distance(const TreeVertex& u, const TreeVertex& v) const;

    struct Neighbors {
        std::vector<TreeVertex> verts;
        bool truncated = false;
    };
    // Neighbours of a vertex: for a midpoint its two endpoints; for an A/B
    // vertex the incident midpoints whose direction representative has factor
    // length <= budget (truncated flag set at infinite-valence vertices).
    Neighbors neighbors(const TreeVertex& v, long long budget) const;

    bool infinite_valence(const TreeVertex& v) const;

    // --- boundary targets ---

    // i-th vertex of [base, xi); for vertex targets the constant tail repeats
    // the vertex itself (callers normally stop at the vertex).
    TreeVertex ray_vertex(const BoundaryTarget& t, long long i) const;
    long long ray_length(const BoundaryTarget& t) const; // distance base..vertex, or -1 for rays

    BoundaryTarget vertex_target(const TreeVertex& v) const;
    bool targets_equal(const BoundaryTarget& a, const BoundaryTarget& b, long long depth = 256) const;

    // Initial segment of [x, xi] with n edges (shorter when xi is a vertex
    // closer than n).
    Path ray_prefix(const TreeVertex& x, const BoundaryTarget& xi, long long n) const;

    // Index of the gate vertex of x on the ray/vertex-path of xi, plus the
    // distance d(x, gate).
    struct Gate {
        long long index;
        long long dist;
    };
    Gate gate_on_ray(const TreeVertex& x, const BoundaryTarget& xi) const;

    // Observers' topology basis membership: [z,y] does not meet A.
    // y/z are vertices or targets. depth caps ray exploration.
    bool basis_member(const BoundaryTarget& y, const BoundaryTarget& z,
                      const std::vector<TreeVertex>& avoid, long long depth) const;

    // Last vertex of [b, x] inside K (b must be in K).
    TreeVertex project(const BoundaryTarget& x, const FiniteSubtree& K, const TreeVertex& b) const;

    FiniteSubtree hull(const std::vector<TreeVertex>& pts) const;
    long long tree_diameter(const FiniteSubtree& K) const;

    bool on_path(const Path& p, const TreeVertex& v) const;

private:
    const Group* G_;
};

} // namespace acyl
