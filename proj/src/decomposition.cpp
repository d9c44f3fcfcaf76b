#include "symtri/decomposition.hpp"

#include <algorithm>

namespace symtri {

namespace {

using Corners = std::array<LatticePoint, 3>;

Corners corners(const PointConfiguration& config, const Simplex& s) {
    return {config[s.v[0]], config[s.v[1]], config[s.v[2]]};
}

Simplex simplex_at(const PointConfiguration& config, const Corners& c) {
    return Simplex::make(config.at(c[0]), config.at(c[1]), config.at(c[2]));
}

Corners mirrored(const Corners& c) {
    return {LatticePoint{c[0].y, c[0].x}, LatticePoint{c[1].y, c[1].x}, LatticePoint{c[2].y, c[2].x}};
}

bool below_axis(const Corners& c) {
    return std::all_of(c.begin(), c.end(), [](LatticePoint p) { return p.y <= p.x; });
}

bool above_axis(const Corners& c) {
    return std::all_of(c.begin(), c.end(), [](LatticePoint p) { return p.y >= p.x; });
}

Corners central_triangle(int d) {
    const int k = (d - 1) / 2;
    return {LatticePoint{k, k}, LatticePoint{k + 1, k}, LatticePoint{k, k + 1}};
}

std::array<Corners, 2> anti_pair(int k) {
    return {Corners{LatticePoint{k, k}, LatticePoint{k + 1, k}, LatticePoint{k, k + 1}},
            Corners{LatticePoint{k + 1, k}, LatticePoint{k, k + 1}, LatticePoint{k + 1, k + 1}}};
}

Triangulation sorted(Triangulation t) {
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

}  // namespace

std::array<LatticePoint, 3> axis_lower_triangle(int k) {
    return {LatticePoint{k, k}, LatticePoint{k + 1, k}, LatticePoint{k + 1, k + 1}};
}

Triangulation compose(const Triangulation& half, const SplitVector& splits) {
    if (half.region.kind != RegionKind::HalfRegion) throw std::invalid_argument("compose expects a half-region triangulation");
    const int d = half.region.d;
    const int squares = d / 2;
    if (static_cast<int>(splits.flags.size()) != squares) {
        throw CompositionError("split vector has length " + std::to_string(splits.flags.size()) + ", expected " +
                               std::to_string(squares));
    }
    const auto hc = lattice_points(half.region);
    const auto fc = lattice_points(Region::full(d));

    std::vector<Simplex> lower(half.simplices.size());
    for (std::size_t i = 0; i < lower.size(); ++i) lower[i] = simplex_at(fc, corners(hc, half.simplices[i]));
    std::sort(lower.begin(), lower.end());

    Triangulation out{Region::full(d), {}};
    std::vector<Simplex> replaced;
    for (int k = 0; k < squares; ++k) {
        if (splits.flags[static_cast<std::size_t>(k)] != Split::Anti) continue;
        const Simplex lk = simplex_at(fc, axis_lower_triangle(k));
        if (!std::binary_search(lower.begin(), lower.end(), lk)) {
            throw CompositionError("Anti split on axis square " + std::to_string(k) +
                                   " whose lower triangle is not in the half triangulation");
        }
        replaced.push_back(lk);
        for (const auto& c : anti_pair(k)) out.simplices.push_back(simplex_at(fc, c));
    }
    std::sort(replaced.begin(), replaced.end());
    for (const auto& s : lower) {
        if (std::binary_search(replaced.begin(), replaced.end(), s)) continue;
        out.simplices.push_back(s);
        out.simplices.push_back(simplex_at(fc, mirrored(corners(fc, s))));
    }
    if (d % 2 == 1) out.simplices.push_back(simplex_at(fc, central_triangle(d)));
    return sorted(std::move(out));
}

Triangulation reflect_extend(const Triangulation& half) {
    return compose(half, SplitVector::all_main(half.region.d));
}

Decomposition decompose(const Triangulation& t) {
    if (t.region.kind != RegionKind::FullTriangle) throw std::invalid_argument("decompose expects a full-triangle triangulation");
    const int d = t.region.d;
    const auto fc = lattice_points(t.region);
    const auto hc = lattice_points(Region::half(d));
    if (!is_mirror_invariant(fc, t)) throw std::invalid_argument("decompose expects a mirror-invariant triangulation");

    Decomposition out{Triangulation{Region::half(d), {}}, SplitVector::all_main(d)};
    for (const auto& s : t.simplices) {
        const auto c = corners(fc, s);
        if (below_axis(c)) {
            out.half.simplices.push_back(simplex_at(hc, c));
            continue;
        }
        if (above_axis(c)) continue;
        const auto cls = classify_h_feasible(fc, s);
        if (cls.kind != FeasibleKind::AxisTriangle) {
            throw std::invalid_argument("triangle crossing the axis is not an axis triangle");
        }
        const int k = cls.x - 1;
        if (k >= d / 2) continue;  // odd-d central triangle
        if (cls.x_prime == cls.x - 1) {
            out.splits.flags[static_cast<std::size_t>(k)] = Split::Anti;
            out.half.simplices.push_back(simplex_at(hc, axis_lower_triangle(k)));
        }
    }
    out.half = sorted(std::move(out.half));
    return out;
}

int splittable_squares(const Triangulation& half) {
    const auto hc = lattice_points(half.region);
    int s = 0;
    for (int k = 0; k < half.region.d / 2; ++k) {
        const Simplex lk = simplex_at(hc, axis_lower_triangle(k));
        if (std::find(half.simplices.begin(), half.simplices.end(), lk) != half.simplices.end()) ++s;
    }
    return s;
}

BigInt count_via_decomposition(int d, int workers) {
    if (d < 1) throw std::invalid_argument("dilation d must be >= 1");
    const Region region = Region::half(d);
    const auto hc = lattice_points(region);
    std::vector<Simplex> lowers;
    for (int k = 0; k < d / 2; ++k) lowers.push_back(simplex_at(hc, axis_lower_triangle(k)));

    std::vector<std::uint64_t> by_splittable(lowers.size() + 1, 0);
    EnumerationConfig cfg;
    cfg.d = d;
    cfg.symmetric = false;
    cfg.workers = workers;
    enumerate_region(region, cfg, [&](const Triangulation& t) {
        std::size_t s = 0;
        for (const auto& lk : lowers) {
            if (std::binary_search(t.simplices.begin(), t.simplices.end(), lk)) ++s;
        }
        ++by_splittable[s];
    });
    BigInt total = 0;
    for (std::size_t s = 0; s < by_splittable.size(); ++s) total += BigInt(by_splittable[s]) << s;
    return total;
}

}  // namespace symtri
