#include "symtri/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace symtri {

bool Region::contains(LatticePoint p) const {
    if (p.x < 0 || p.y < 0 || p.x + p.y > d) return false;
    return kind == RegionKind::FullTriangle || p.y <= p.x;
}

std::string to_string(RegionKind kind) {
    return kind == RegionKind::FullTriangle ? "full" : "half";
}

RegionKind parse_region_kind(const std::string& s) {
    if (s == "full") return RegionKind::FullTriangle;
    if (s == "half") return RegionKind::HalfRegion;
    throw std::invalid_argument("unknown region '" + s + "'");
}

Simplex Simplex::make(PointIndex a, PointIndex b, PointIndex c) {
    std::array<PointIndex, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    return Simplex{v};
}

Edge Edge::make(PointIndex a, PointIndex b) {
    return a < b ? Edge{{a, b}} : Edge{{b, a}};
}

std::int64_t orientation(LatticePoint a, LatticePoint b, LatticePoint c) {
    return static_cast<std::int64_t>(b.x - a.x) * (c.y - a.y) -
           static_cast<std::int64_t>(b.y - a.y) * (c.x - a.x);
}

namespace {

bool on_segment(LatticePoint a, LatticePoint b, LatticePoint p) {
    return orientation(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Andrew's monotone chain; collinear points are dropped.
std::vector<PointIndex> convex_hull(const std::vector<LatticePoint>& pts) {
    std::vector<PointIndex> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<PointIndex>(i);
    std::sort(idx.begin(), idx.end(), [&](PointIndex a, PointIndex b) {
        return std::pair(pts[a].x, pts[a].y) < std::pair(pts[b].x, pts[b].y);
    });
    if (idx.size() < 3) return idx;
    std::vector<PointIndex> hull(2 * idx.size());
    std::size_t k = 0;
    for (PointIndex i : idx) {
        while (k >= 2 && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    for (std::size_t j = idx.size() - 1, t = k + 1; j-- > 0;) {
        PointIndex i = idx[j];
        while (k >= t && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    if (hull.size() == 2 || (hull.size() >= 3 && orientation(pts[hull[0]], pts[hull[1]], pts[hull[2]]) == 0)) {
        // all points collinear: keep the two extremes
        return {idx.front(), idx.back()};
    }
    auto lowest = std::min_element(hull.begin(), hull.end());  // (y,x) order == index order
    std::rotate(hull.begin(), lowest, hull.end());
    return hull;
}

}  // namespace

PointConfiguration::PointConfiguration(Region region) : region_(region) {
    if (region.d < 1) throw std::invalid_argument("dilation d must be >= 1");
    const int d = region.d;
    grid_.assign(static_cast<std::size_t>((d + 1) * (d + 1)), -1);
    for (int y = 0; y <= d; ++y) {
        for (int x = 0; x <= d; ++x) {
            LatticePoint p{x, y};
            if (!region.contains(p)) continue;
            grid_[static_cast<std::size_t>(y * (d + 1) + x)] = static_cast<PointIndex>(points_.size());
            points_.push_back(p);
        }
    }
    hull_ = convex_hull(points_);

    boundary_.assign(points_.size(), false);
    const std::size_t h = hull_.size();
    for (std::size_t i = 0; i < points_.size(); ++i) {
        for (std::size_t e = 0; e < h && !boundary_[i]; ++e) {
            if (on_segment(points_[hull_[e]], points_[hull_[(e + 1) % h]], points_[i])) boundary_[i] = true;
        }
    }
    if (h >= 3) {
        for (std::size_t e = 0; e < h; ++e) {
            const auto& a = points_[hull_[e]];
            const auto& b = points_[hull_[(e + 1) % h]];
            area_ += static_cast<std::int64_t>(a.x) * b.y - static_cast<std::int64_t>(b.x) * a.y;
        }
    }
}

std::optional<PointIndex> PointConfiguration::index_of(LatticePoint p) const {
    const int d = region_.d;
    if (p.x < 0 || p.y < 0 || p.x > d || p.y > d) return std::nullopt;
    PointIndex i = grid_[static_cast<std::size_t>(p.y * (d + 1) + p.x)];
    if (i < 0) return std::nullopt;
    return i;
}

PointIndex PointConfiguration::at(LatticePoint p) const {
    auto i = index_of(p);
    if (!i) {
        throw std::out_of_range("lattice point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                ") not in configuration");
    }
    return *i;
}

bool PointConfiguration::is_boundary_edge(const Edge& e) const {
    const std::size_t h = hull_.size();
    const auto& p = points_[e.v[0]];
    const auto& q = points_[e.v[1]];
    const std::size_t sides = h == 2 ? 1 : h;
    for (std::size_t k = 0; k < sides; ++k) {
        const auto& a = points_[hull_[k]];
        const auto& b = points_[hull_[(k + 1) % h]];
        if (on_segment(a, b, p) && on_segment(a, b, q)) return true;
    }
    return false;
}

std::size_t PointConfiguration::boundary_point_count() const {
    return static_cast<std::size_t>(std::count(boundary_.begin(), boundary_.end(), true));
}

PointConfiguration lattice_points(const Region& region) { return PointConfiguration(region); }

// ---------------------------------------------------------------------------
// symmetry actions

Simplex SymmetryAction::apply(const Simplex& s) const {
    return Simplex::make(apply(s.v[0]), apply(s.v[1]), apply(s.v[2]));
}

Edge SymmetryAction::apply(const Edge& e) const { return Edge::make(apply(e.v[0]), apply(e.v[1])); }

bool SymmetryAction::is_identity() const {
    for (std::size_t i = 0; i < permutation.size(); ++i) {
        if (permutation[i] != static_cast<PointIndex>(i)) return false;
    }
    return true;
}

SymmetryAction SymmetryAction::compose(const SymmetryAction& other) const {
    SymmetryAction r;
    const auto& a = matrix;
    const auto& b = other.matrix;
    r.matrix = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    const auto& t = other.translation;
    r.translation = {a[0] * t[0] + a[1] * t[1] + translation[0], a[2] * t[0] + a[3] * t[1] + translation[1]};
    r.permutation.resize(permutation.size());
    for (std::size_t i = 0; i < permutation.size(); ++i) r.permutation[i] = apply(other.apply(static_cast<PointIndex>(i)));
    return r;
}

SymmetryAction SymmetryAction::inverse() const {
    // det is +-1, so the inverse matrix is integral
    const int det = determinant();
    SymmetryAction r;
    r.matrix = {matrix[3] * det, -matrix[1] * det, -matrix[2] * det, matrix[0] * det};
    const auto& m = r.matrix;
    r.translation = {-(m[0] * translation[0] + m[1] * translation[1]),
                     -(m[2] * translation[0] + m[3] * translation[1])};
    r.permutation.resize(permutation.size());
    for (std::size_t i = 0; i < permutation.size(); ++i) r.permutation[permutation[i]] = static_cast<PointIndex>(i);
    return r;
}

bool Group::contains(const SymmetryAction& g) const {
    return std::find(elements.begin(), elements.end(), g) != elements.end();
}

bool Group::is_closed() const {
    for (const auto& a : elements) {
        if (!contains(a.inverse())) return false;
        for (const auto& b : elements) {
            if (!contains(a.compose(b))) return false;
        }
    }
    return !elements.empty() && elements.front().is_identity();
}

namespace {

std::optional<SymmetryAction> make_action(const PointConfiguration& config, std::array<int, 4> m,
                                          std::array<int, 2> t) {
    SymmetryAction g{m, t, {}};
    if (std::abs(g.determinant()) != 1) return std::nullopt;
    g.permutation.resize(config.size());
    for (std::size_t i = 0; i < config.size(); ++i) {
        const auto& p = config[static_cast<PointIndex>(i)];
        LatticePoint q{m[0] * p.x + m[1] * p.y + t[0], m[2] * p.x + m[3] * p.y + t[1]};
        auto j = config.index_of(q);
        if (!j) return std::nullopt;
        g.permutation[i] = *j;
    }
    // injective into a finite set of equal size, hence onto
    std::vector<bool> seen(config.size(), false);
    for (PointIndex j : g.permutation) {
        if (seen[static_cast<std::size_t>(j)]) return std::nullopt;
        seen[static_cast<std::size_t>(j)] = true;
    }
    return g;
}

}  // namespace

Group symmetry_group(const PointConfiguration& config) {
    if (config.size() == 0) throw std::invalid_argument("empty configuration");
    Group group;
    const auto hull = config.hull();
    auto push_unique = [&](SymmetryAction g) {
        if (!group.contains(g)) group.elements.push_back(std::move(g));
    };
    push_unique(*make_action(config, {1, 0, 0, 1}, {0, 0}));

    if (hull.size() < 3) {
        // collinear configuration: identity and the point reflection swapping the extremes
        if (hull.size() == 2) {
            const auto& a = config[hull[0]];
            const auto& b = config[hull[1]];
            if (auto g = make_action(config, {-1, 0, 0, -1}, {a.x + b.x, a.y + b.y})) push_unique(std::move(*g));
        }
        return group;
    }

    const auto& v0 = config[hull[0]];
    const auto& v1 = config[hull[1]];
    const auto& v2 = config[hull[2]];
    // V has columns v1-v0, v2-v0
    const int p = v1.x - v0.x, q = v2.x - v0.x, r = v1.y - v0.y, s = v2.y - v0.y;
    const int det = p * s - q * r;
    for (PointIndex a : hull) {
        for (PointIndex b : hull) {
            for (PointIndex c : hull) {
                if (a == b || b == c || a == c) continue;
                const auto& w0 = config[a];
                const auto& w1 = config[b];
                const auto& w2 = config[c];
                const int e = w1.x - w0.x, f = w2.x - w0.x, g = w1.y - w0.y, h = w2.y - w0.y;
                // M = W * adj(V) / det(V)
                const std::array<int, 4> num{e * s - f * r, -e * q + f * p, g * s - h * r, -g * q + h * p};
                bool integral = true;
                for (int x : num) integral = integral && x % det == 0;
                if (!integral) continue;
                std::array<int, 4> m{num[0] / det, num[1] / det, num[2] / det, num[3] / det};
                std::array<int, 2> t{w0.x - (m[0] * v0.x + m[1] * v0.y), w0.y - (m[2] * v0.x + m[3] * v0.y)};
                if (auto act = make_action(config, m, t)) push_unique(std::move(*act));
            }
        }
    }
    return group;
}

SymmetryAction reflection(const PointConfiguration& config) {
    if (config.region().kind != RegionKind::FullTriangle) {
        throw std::invalid_argument("reflection at {x = y} is only a symmetry of the full triangle");
    }
    auto g = make_action(config, {0, 1, 1, 0}, {0, 0});
    if (!g) throw std::logic_error("reflection does not preserve the configuration");
    return *g;
}

// ---------------------------------------------------------------------------
// predicates

std::int64_t normalized_area(const PointConfiguration& config, const Simplex& s) {
    return std::llabs(orientation(config[s.v[0]], config[s.v[1]], config[s.v[2]]));
}

namespace {

bool is_vertex(const Simplex& s, PointIndex i) {
    return s.v[0] == i || s.v[1] == i || s.v[2] == i;
}

// Counter-clockwise corner coordinates.
std::array<LatticePoint, 3> ccw_corners(const PointConfiguration& config, const Simplex& s) {
    std::array<LatticePoint, 3> c{config[s.v[0]], config[s.v[1]], config[s.v[2]]};
    if (orientation(c[0], c[1], c[2]) < 0) std::swap(c[1], c[2]);
    return c;
}

bool in_closed_triangle(const std::array<LatticePoint, 3>& t, LatticePoint p) {
    return orientation(t[0], t[1], p) >= 0 && orientation(t[1], t[2], p) >= 0 && orientation(t[2], t[0], p) >= 0;
}

bool segments_cross(LatticePoint a, LatticePoint b, LatticePoint c, LatticePoint d) {
    auto sgn = [](std::int64_t v) { return (v > 0) - (v < 0); };
    return sgn(orientation(a, b, c)) * sgn(orientation(a, b, d)) < 0 &&
           sgn(orientation(c, d, a)) * sgn(orientation(c, d, b)) < 0;
}

// Some vertex of `inner` that is not a vertex of `outer` lies in closed `outer`.
bool foreign_vertex_inside(const PointConfiguration& config, const Simplex& outer, const Simplex& inner) {
    const auto t = ccw_corners(config, outer);
    for (PointIndex i : inner.v) {
        if (!is_vertex(outer, i) && in_closed_triangle(t, config[i])) return true;
    }
    return false;
}

}  // namespace

bool properly_intersect(const PointConfiguration& config, const Simplex& s, const Simplex& r) {
    if (s == r) return true;
    if (foreign_vertex_inside(config, s, r) || foreign_vertex_inside(config, r, s)) return false;
    for (const auto& e : edges_of(s)) {
        for (const auto& f : edges_of(r)) {
            if (segments_cross(config[e.v[0]], config[e.v[1]], config[f.v[0]], config[f.v[1]])) return false;
        }
    }
    return true;
}

bool h_feasible(const PointConfiguration& config, const Simplex& s) {
    const auto pi = reflection(config);
    const Simplex image = pi.apply(s);
    return image == s || properly_intersect(config, s, image);
}

FeasibleClass classify_h_feasible(const PointConfiguration& config, const Simplex& s) {
    if (config.region().kind != RegionKind::FullTriangle) {
        throw std::invalid_argument("classification is defined on the full triangle only");
    }
    if (!is_unimodular(config, s)) return {FeasibleKind::OutOfLemmaScope};
    const std::array<LatticePoint, 3> p{config[s.v[0]], config[s.v[1]], config[s.v[2]]};
    if (std::all_of(p.begin(), p.end(), [](auto q) { return q.y <= q.x; }) ||
        std::all_of(p.begin(), p.end(), [](auto q) { return q.y >= q.x; })) {
        return {FeasibleKind::SubsetOfHalf};
    }
    for (int i = 0; i < 3; ++i) {
        const auto& a = p[i];
        if (a.y != a.x - 1) continue;
        const int x = a.x;
        const LatticePoint mirror{x - 1, x};
        for (int j = 0; j < 3; ++j) {
            if (p[j] != mirror) continue;
            const auto& c = p[3 - i - j];
            if (c.x == c.y && (c.x == x || c.x == x - 1)) return {FeasibleKind::AxisTriangle, x, c.x};
        }
    }
    return {FeasibleKind::Infeasible};
}

bool h_admissible_pair(const PointConfiguration& config, const Simplex& s, const Simplex& r) {
    const auto pi = reflection(config);
    const std::array<Simplex, 2> os{s, pi.apply(s)};
    const std::array<Simplex, 2> orr{r, pi.apply(r)};
    for (const auto& a : os) {
        for (const auto& b : orr) {
            if (!properly_intersect(config, a, b)) return false;
        }
    }
    return true;
}

Group feasible_symmetry_group(const Group& g, const PointConfiguration& config, std::span<const Simplex> pool) {
    std::vector<Simplex> sorted(pool.begin(), pool.end());
    std::sort(sorted.begin(), sorted.end());
    Group stab;
    for (const auto& h : g.elements) {
        if (h.permutation.size() != config.size()) throw std::invalid_argument("group acts on a different configuration");
        bool keeps = true;
        for (const auto& s : sorted) {
            if (!std::binary_search(sorted.begin(), sorted.end(), h.apply(s))) {
                keeps = false;
                break;
            }
        }
        if (keeps) stab.elements.push_back(h);
    }
    return stab;
}

std::vector<Simplex> h_feasible_pool(const PointConfiguration& config, bool unimodular_only) {
    const auto pi = reflection(config);
    std::vector<Simplex> pool;
    const auto n = static_cast<PointIndex>(config.size());
    for (PointIndex a = 0; a < n; ++a) {
        for (PointIndex b = a + 1; b < n; ++b) {
            for (PointIndex c = b + 1; c < n; ++c) {
                const Simplex s{{a, b, c}};
                const auto area = normalized_area(config, s);
                if (area == 0 || (unimodular_only && area != 1)) continue;
                const Simplex image = pi.apply(s);
                if (image == s || properly_intersect(config, s, image)) pool.push_back(s);
            }
        }
    }
    return pool;
}

}  // namespace symtri
