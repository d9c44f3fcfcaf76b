#include "symtri/bounds.hpp"

#include "symtri/reference_data.hpp"

#include <algorithm>

namespace symtri {

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt strip_count(int n) {
    if (n < 0) throw std::invalid_argument("strip length must be >= 0");
    return binomial(2 * n, n);
}

namespace {

void require_dilation(int d) {
    if (d < 1) throw std::invalid_argument("dilation d must be >= 1");
}

// floor(d/2) strips of each height 0 .. floor(d/2)-1 appear twice; odd d adds
// the central strip of height d-1 with C(d-1, (d-1)/2) triangulations.
BigInt central_factor(int d) { return d % 2 == 1 ? binomial(d - 1, (d - 1) / 2) : BigInt(1); }

}  // namespace

BigInt lower_bound_1(int d) {
    require_dilation(d);
    BigInt r = central_factor(d);
    for (int n = 0; n < d / 2; ++n) {
        const BigInt g = strip_count(n);
        r *= g * g;
    }
    return r;
}

BigInt lower_bound_2(int d, L2Variant variant) {
    require_dilation(d);
    BigInt r = central_factor(d);
    for (int n = 0; n < d / 2; ++n) {
        BigInt sum = 0;
        for (int i = 0; i <= n; ++i) {
            const BigInt g = strip_count(i);
            sum += variant == L2Variant::TableMatching ? g : g * g;
        }
        r *= variant == L2Variant::TableMatching ? sum * sum : sum;
    }
    return r;
}

PointCountRow point_counts(int d) {
    require_dilation(d);
    PointCountRow row;
    row.d = d;
    if (d % 2 == 0) {
        row.n_formula = static_cast<long>(d) * d / 4 + d + 1;
        row.nb_formula = 2L * d;
    } else {
        row.n_formula = static_cast<long>(d + 1) * (d + 3) / 4;
        row.nb_formula = 2L * d + 1;
    }
    const auto config = lattice_points(Region::half(d));
    row.n_measured = static_cast<long>(config.size());
    row.nb_measured = static_cast<long>(config.boundary_point_count());
    row.n_match = row.n_formula == row.n_measured;
    row.nb_match = row.nb_formula == row.nb_measured;
    return row;
}

Triangulation standard_half_triangulation(int d) {
    require_dilation(d);
    const auto config = lattice_points(Region::half(d));
    Triangulation t{Region::half(d), {}};
    auto add = [&](LatticePoint a, LatticePoint b, LatticePoint c) {
        t.simplices.push_back(Simplex::make(config.at(a), config.at(b), config.at(c)));
    };
    for (int x = 0; x < d; ++x) {
        const int top_left = std::min(x, d - x);
        const int top_right = std::min(x + 1, d - x - 1);
        const int m = std::min(top_left, top_right);
        for (int y = 0; y < m; ++y) {
            add({x, y}, {x + 1, y}, {x, y + 1});
            add({x + 1, y}, {x + 1, y + 1}, {x, y + 1});
        }
        if (top_right > top_left) add({x, m}, {x + 1, m}, {x + 1, m + 1});
        if (top_left > top_right) add({x, m}, {x + 1, m}, {x, m + 1});
    }
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

EdgeCounts edge_counts(int d) {
    const auto config = lattice_points(Region::half(d));
    const auto edges = distinct_edges(config, standard_half_triangulation(d));
    EdgeCounts c;
    c.total = static_cast<long>(edges.size());
    c.boundary = static_cast<long>(std::count_if(edges.begin(), edges.end(),
                                                 [&](const Edge& e) { return config.is_boundary_edge(e); }));
    c.interior = c.total - c.boundary;
    const long pick = 3L * static_cast<long>(config.size()) - static_cast<long>(config.boundary_point_count()) - 3;
    if (c.total != pick) {
        throw std::logic_error("edge count " + std::to_string(c.total) + " disagrees with 3n - n_b - 3 = " +
                               std::to_string(pick));
    }
    return c;
}

UpperBoundExponents upper_bound_exponents(int d) {
    require_dilation(d);
    const Rational three_quarter_d2(3L * d * d, 4);
    UpperBoundExponents u;
    u.printed_U = d % 2 == 0 ? three_quarter_d2 - Rational(2L * d + 3) : three_quarter_d2 + Rational(d) - Rational(7, 4);
    const auto e = edge_counts(d);
    u.anclin_interior = e.interior;
    u.total_edges = e.total;
    u.theorem_cap = three_quarter_d2 + Rational(d) - Rational(3, 4);
    u.rough_rectangle = three_quarter_d2 - Rational(2L * d);
    return u;
}

bool pow2_at_least(const Rational& exponent, const BigInt& value) {
    if (value <= 0) return true;
    const auto p = exponent.numerator();
    const auto q = exponent.denominator();  // > 0
    const BigInt vq = boost::multiprecision::pow(value, static_cast<unsigned>(q));
    if (p >= 0) return pow2(static_cast<unsigned>(p)) >= vq;
    return vq * pow2(static_cast<unsigned>(-p)) <= 1;
}

SandwichReport sandwich_check(int d, const BigInt& f_half, const BigInt& f_sym) {
    require_dilation(d);
    SandwichReport r;
    r.d = d;
    r.f_half = f_half;
    r.f_sym = f_sym;
    r.upper = f_half << (d / 2);
    r.lower_slack = f_sym - f_half;
    r.upper_slack = r.upper - f_sym;
    if (r.lower_slack < 0 || r.upper_slack < 0) {
        throw BoundViolation("sandwich violated at d = " + std::to_string(d) + ": " + f_half.str() + " <= " +
                             f_sym.str() + " <= " + r.upper.str() + " fails");
    }
    return r;
}

BoundsRow bounds_row(int d) {
    BoundsRow row;
    row.d = d;
    row.L1 = lower_bound_1(d);
    row.L2 = lower_bound_2(d, L2Variant::TableMatching);
    row.L2_as_printed = lower_bound_2(d, L2Variant::AsPrinted);
    row.F_half_ref = reference_tables().F_half_at(d);
    row.exponents = upper_bound_exponents(d);
    return row;
}

namespace {

std::string rational_str(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

std::vector<Discrepancy> bound_discrepancies(int d_max, const std::vector<std::optional<BigInt>>& f_half) {
    const auto& ref = reference_tables();
    std::vector<Discrepancy> out;
    for (int d = 1; d <= d_max; ++d) {
        if (d <= ref.d_max) {
            const BigInt l2 = lower_bound_2(d);
            const BigInt& printed = ref.L2[static_cast<std::size_t>(d - 1)];
            if (l2 != printed) {
                out.push_back({"table1.L2", d, printed.str(), l2.str(), d == 3,
                               d == 3 ? "odd central-strip factor C(2,1) = 2 absent from the printed row" : ""});
            }
        }
        const auto pc = point_counts(d);
        if (!pc.n_match) {
            out.push_back({"lemma.n", d, std::to_string(pc.n_formula), std::to_string(pc.n_measured), false, ""});
        }
        if (!pc.nb_match) {
            const bool expected = d % 2 == 1 && pc.nb_formula - pc.nb_measured == 1;
            out.push_back({"lemma.n_b", d, std::to_string(pc.nb_formula), std::to_string(pc.nb_measured), expected,
                           expected ? "odd d: the half-integral apex is not a lattice point of the hull" : ""});
        }
        std::optional<BigInt> fh;
        if (static_cast<std::size_t>(d - 1) < f_half.size()) fh = f_half[static_cast<std::size_t>(d - 1)];
        if (!fh) fh = ref.F_half_at(d);
        if (fh) {
            const auto u = upper_bound_exponents(d);
            if (!pow2_at_least(u.printed_U, *fh)) {
                out.push_back({"U.unsound", d, "2^" + rational_str(u.printed_U), fh->str(), true,
                               "printed U(d) is below the half-region count; 2^" +
                                   std::to_string(u.anclin_interior) + " (interior edges) is the sound bound"});
            }
        }
    }
    return out;
}

}  // namespace symtri
