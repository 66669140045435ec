#pragma once

#include <optional>

#include "acyl/tree.hpp"

namespace acyl {

struct IsometryClass {
    bool hyperbolic = false;
    long long translation_length = 0; // even, > 0 iff hyperbolic
    Path axis_window;                 // hyperbolic: [gate, g*gate], length = ||g||
    TreeVertex fixed_vertex;          // elliptic: a fixed vertex
};

// A hyperbolic axis as a bi-infinite line, vertex(i) for i in Z, with
// vertex(0) = window[0] and vertex(||g||) = g * vertex(0).
struct AxisLine {
    GroupElement g;
    long long len = 0;
    Path window;
};

struct SegmentStabilizer {
    enum class Kind : uint8_t { Trivial, Cyclic, Finite, FactorAll } kind = Kind::Trivial;
    GroupElement generator;             // Cyclic
    std::vector<GroupElement> elements; // Finite: all elements incl. identity
    long long factor_order = -1;        // FactorAll: order of the vertex factor, -1 = infinite

    bool is_finite() const {
        return kind == Kind::Trivial || kind == Kind::Finite ||
               (kind == Kind::FactorAll && factor_order >= 0);
    }
    long long order() const {
        switch (kind) {
        case Kind::Trivial: return 1;
        case Kind::Finite: return static_cast<long long>(elements.size());
        case Kind::FactorAll: return factor_order;
        default: return -1;
        }
    }
};

struct AcylReport {
    long long k = 0;
    long long region_radius = 0;
    long long segments_checked = 0;
    bool all_finite = true;
    long long max_order = 1;
    std::optional<Path> infinite_witness;
    long long max_probe_radius = 0; // L used when only probes were available
    bool budget_truncated = false;
};

struct BoundaryPairReport {
    long long probe_radius = 0;
    long long fixer_count = 0;
    long long min_positive_translation = 0; // 0 when no hyperbolic fixer found
    bool divisibility_ok = true;
    long long zero_translation_count = 0;
    bool zero_set_matches_window_stabilizer = true;
    bool exponent_map_onto_sample = true; // powers of the minimal fixer realize every quotient seen
};

class Isometry {
public:
    Isometry(const Group& G, const Tree& T) : G_(&G), T_(&T) {}

    IsometryClass classify(const GroupElement& g) const;

    AxisLine axis(const GroupElement& g) const; // g must be hyperbolic
    TreeVertex line_vertex(const AxisLine& line, long long i) const;
    // Position of v on the line if |i| <= scan, else nullopt.
    std::optional<long long> line_position(const AxisLine& line, const TreeVertex& v,
                                           long long scan) const;

    // Boundary target for the forward end of axis(g), with prefix from `base`.
    BoundaryTarget axis_target(const GroupElement& g, const TreeVertex& base) const;
    BoundaryTarget axis_target_backward(const GroupElement& g, const TreeVertex& base) const;
    bool validate_target(const BoundaryTarget& t) const;

    // Exact pointwise stabilizer of a geodesic path.
    SegmentStabilizer exact_segment_stabilizer(const Path& sigma) const;

    // All elements of word length <= L fixing sigma pointwise.
    std::vector<GroupElement> pointwise_stabilizer_probe(const Path& sigma, long long L,
                                                         size_t cap = 2'000'000) const;

    // Enumerates the geodesic k-segments of the region (tree ball of the given
    // radius around the base midpoint, neighbour budget as given) and reports
    // stabilizer finiteness. workers > 1 parallelizes the sweep.
    AcylReport check_acylindrical(long long k, long long region_radius, long long budget,
                                  int workers = 1) const;

    // Probes ball(L) for elements fixing both ends of axis(g); verifies the
    // divisibility structure of translation lengths (virtually cyclic type I).
    BoundaryPairReport boundary_pair_probe(const GroupElement& g, long long L, long long k) const;

    // Segments in a region; shared with the metric layer and the sweep above.
    std::vector<Path> region_segments(long long k, long long region_radius, long long budget,
                                      bool* truncated = nullptr) const;

private:
    bool fixes_path(const GroupElement& h, const Path& p) const;

    const Group* G_;
    const Tree* T_;
};

} // namespace acyl
