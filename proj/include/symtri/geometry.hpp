#pragma once

// Lattice regions, point configurations, affine symmetry groups and exact
// integer predicates on lattice triangles. Everything here is immutable after
// construction and uses integer arithmetic only.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symtri {

using PointIndex = int;

struct LatticePoint {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class RegionKind { FullTriangle, HalfRegion };

/// FullTriangle(d) is conv{(0,0),(d,0),(0,d)}. HalfRegion(d) is the convex hull
/// of the lattice points of FullTriangle(d) with y <= x; a quadrilateral for odd d.
struct Region {
    RegionKind kind = RegionKind::FullTriangle;
    int d = 1;

    static Region full(int d) { return {RegionKind::FullTriangle, d}; }
    static Region half(int d) { return {RegionKind::HalfRegion, d}; }

    bool contains(LatticePoint p) const;
    friend bool operator==(const Region&, const Region&) = default;
};

std::string to_string(RegionKind kind);
RegionKind parse_region_kind(const std::string& s);

/// A triangle given by a strictly increasing triple of point indices.
struct Simplex {
    std::array<PointIndex, 3> v{};

    static Simplex make(PointIndex a, PointIndex b, PointIndex c);
    friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct Edge {
    std::array<PointIndex, 2> v{};

    static Edge make(PointIndex a, PointIndex b);
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The three facets of a simplex in lex order.
inline std::array<Edge, 3> edges_of(const Simplex& s) {
    return {Edge{{s.v[0], s.v[1]}}, Edge{{s.v[0], s.v[2]}}, Edge{{s.v[1], s.v[2]}}};
}

/// All lattice points of a region, sorted ascending by (y, x), with a reverse
/// index. Also caches the convex hull and boundary membership.
class PointConfiguration {
public:
    explicit PointConfiguration(Region region);

    const Region& region() const { return region_; }
    std::span<const LatticePoint> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const LatticePoint& operator[](PointIndex i) const { return points_[static_cast<std::size_t>(i)]; }

    std::optional<PointIndex> index_of(LatticePoint p) const;
    PointIndex at(LatticePoint p) const;

    /// Hull vertices in counter-clockwise order starting at the lowest point.
    std::span<const PointIndex> hull() const { return hull_; }
    bool is_degenerate() const { return hull_.size() < 3; }

    bool on_boundary(PointIndex i) const { return boundary_[static_cast<std::size_t>(i)]; }
    /// True iff the segment lies in the boundary of the convex hull.
    bool is_boundary_edge(const Edge& e) const;
    std::size_t boundary_point_count() const;

    /// Twice the Euclidean area of the convex hull.
    std::int64_t normalized_area() const { return area_; }

private:
    Region region_;
    std::vector<LatticePoint> points_;
    std::vector<PointIndex> grid_;  // (d+1)^2 lookup, -1 when absent
    std::vector<PointIndex> hull_;
    std::vector<bool> boundary_;
    std::int64_t area_ = 0;
};

PointConfiguration lattice_points(const Region& region);

/// Affine lattice map p -> M p + t together with the induced point permutation.
struct SymmetryAction {
    std::array<int, 4> matrix{1, 0, 0, 1};  // row-major
    std::array<int, 2> translation{0, 0};
    std::vector<PointIndex> permutation;

    PointIndex apply(PointIndex i) const { return permutation[static_cast<std::size_t>(i)]; }
    Simplex apply(const Simplex& s) const;
    Edge apply(const Edge& e) const;
    int determinant() const { return matrix[0] * matrix[3] - matrix[1] * matrix[2]; }
    bool is_identity() const;

    /// (this ∘ other)(p) = this(other(p)).
    SymmetryAction compose(const SymmetryAction& other) const;
    SymmetryAction inverse() const;

    friend bool operator==(const SymmetryAction& a, const SymmetryAction& b) {
        return a.permutation == b.permutation;
    }
};

struct Group {
    std::vector<SymmetryAction> elements;  // identity first

    std::size_t order() const { return elements.size(); }
    bool contains(const SymmetryAction& g) const;
    bool is_closed() const;
};

Group symmetry_group(const PointConfiguration& config);

/// The reflection (x, y) -> (y, x). Only defined for FullTriangle regions.
SymmetryAction reflection(const PointConfiguration& config);

std::int64_t orientation(LatticePoint a, LatticePoint b, LatticePoint c);
std::int64_t normalized_area(const PointConfiguration& config, const Simplex& s);
inline bool is_unimodular(const PointConfiguration& config, const Simplex& s) {
    return normalized_area(config, s) == 1;
}

/// True iff the closed triangles meet in a common face of both (possibly empty).
bool properly_intersect(const PointConfiguration& config, const Simplex& s, const Simplex& r);

bool h_feasible(const PointConfiguration& config, const Simplex& s);

enum class FeasibleKind { SubsetOfHalf, AxisTriangle, Infeasible, OutOfLemmaScope };

struct FeasibleClass {
    FeasibleKind kind = FeasibleKind::Infeasible;
    int x = 0;        // AxisTriangle only
    int x_prime = 0;  // AxisTriangle only
};

/// Structural classification of unimodular triangles by the axis dichotomy:
/// either on one side of {x = y}, or {(x,x-1),(x-1,x),(x',x')} with
/// x' in {x-1, x}. Does not consult properly_intersect.
FeasibleClass classify_h_feasible(const PointConfiguration& config, const Simplex& s);

bool h_admissible_pair(const PointConfiguration& config, const Simplex& s, const Simplex& r);

/// {g in G : g(pool) = pool}.
Group feasible_symmetry_group(const Group& g, const PointConfiguration& config,
                              std::span<const Simplex> pool);

/// All H-feasible simplices of FullTriangle(d), unimodular only or all nondegenerate.
std::vector<Simplex> h_feasible_pool(const PointConfiguration& config, bool unimodular_only);

}  // namespace symtri
