#include "verify.hpp"

#include "symtri/analysis.hpp"
#include "symtri/decomposition.hpp"
#include "symtri/reference_data.hpp"

#include <algorithm>
#include <stdexcept>

namespace symtri::cli {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Warn: return "WARN";
        case CheckStatus::Fail: return "FAIL";
    }
    return "?";
}

namespace {

std::string dstr(int d) { return "d=" + std::to_string(d); }

Check compare(const std::string& name, const BigInt& expected, const BigInt& got, const std::string& what) {
    const bool ok = expected == got;
    return {name, ok ? CheckStatus::Pass : CheckStatus::Fail,
            what + " " + got.str() + (ok ? " matches " : " differs from ") + expected.str()};
}

}  // namespace

std::vector<Check> verify_suite(int d_max, int jobs) {
    if (d_max < 1) throw std::invalid_argument("--d-max must be >= 1");
    if (d_max > kVerifyMaxD) {
        throw std::invalid_argument("verify is limited to d <= " + std::to_string(kVerifyMaxD) +
                                    "; larger d exceed desk-scale enumeration");
    }
    const auto& ref = reference_tables();
    std::vector<Check> checks;
    std::vector<BigInt> f_sym(static_cast<std::size_t>(d_max) + 1), f_half(static_cast<std::size_t>(d_max) + 1);

    for (int d = 1; d <= d_max; ++d) {
        EnumerationConfig cfg;
        cfg.d = d;
        cfg.workers = jobs;
        f_sym[static_cast<std::size_t>(d)] = enumerate_symmetric(cfg).count;
        checks.push_back(compare("symmetric_count " + dstr(d), *ref.F_tilde_at(d), f_sym[static_cast<std::size_t>(d)],
                                 "F~ ="));
        cfg.symmetric = false;
        f_half[static_cast<std::size_t>(d)] = enumerate_region(Region::half(d), cfg).count;
        checks.push_back(compare("half_count " + dstr(d), *ref.F_half_at(d), f_half[static_cast<std::size_t>(d)],
                                 "F_half ="));
    }

    for (int d = 1; d <= std::min(d_max, kVerifyOracleMaxD); ++d) {
        const BigInt naive = enumerate_naive_symmetric(d, Mode::Unimodular);
        checks.push_back(compare("oracle_symmetric " + dstr(d), naive, f_sym[static_cast<std::size_t>(d)],
                                 "reverse search"));
        const BigInt naive_half = enumerate_naive(lattice_points(Region::half(d)), Mode::Unimodular);
        checks.push_back(compare("oracle_half " + dstr(d), naive_half, f_half[static_cast<std::size_t>(d)],
                                 "reverse search"));
    }

    for (int d = 1; d <= d_max; ++d) {
        try {
            const auto r = sandwich_check(d, f_half[static_cast<std::size_t>(d)], f_sym[static_cast<std::size_t>(d)]);
            checks.push_back({"sandwich_computed " + dstr(d), CheckStatus::Pass,
                              r.f_half.str() + " <= " + r.f_sym.str() + " <= " + r.upper.str()});
        } catch (const BoundViolation& e) {
            checks.push_back({"sandwich_computed " + dstr(d), CheckStatus::Fail, e.what()});
        }
    }
    for (int d = 1; d <= ref.d_max; ++d) {
        const auto i = static_cast<std::size_t>(d - 1);
        try {
            sandwich_check(d, ref.F_half[i], ref.F_tilde[i]);
            checks.push_back({"sandwich_reference " + dstr(d), CheckStatus::Pass, "holds on reference counts"});
        } catch (const BoundViolation& e) {
            checks.push_back({"sandwich_reference " + dstr(d), CheckStatus::Fail, e.what()});
        }
        checks.push_back(compare("split_upper_identity " + dstr(d), ref.split_upper[i], ref.F_half[i] << (d / 2),
                                 "2^floor(d/2) F_half ="));
    }

    for (int d = 1; d <= std::min(d_max, 5); ++d) {
        checks.push_back(compare("decomposition " + dstr(d), f_sym[static_cast<std::size_t>(d)],
                                 count_via_decomposition(d, jobs), "sum 2^s(t_half) ="));
    }

    for (int d = 1; d <= std::min(d_max, kVerifyOracleMaxD); ++d) {
        const auto config = lattice_points(Region::full(d));
        const long edges = 3L * static_cast<long>(config.size()) - static_cast<long>(config.boundary_point_count()) - 3;
        std::size_t bad = 0, seen = 0;
        EnumerationConfig cfg;
        cfg.d = d;
        enumerate_symmetric(cfg, [&](const Triangulation& t) {
            ++seen;
            const auto v = validate(config, t);
            const bool ok = v.proper && v.covers && v.unimodular && v.uses_all_points &&
                            static_cast<long>(t.simplices.size()) == static_cast<long>(d) * d &&
                            static_cast<long>(distinct_edges(config, t).size()) == edges &&
                            is_mirror_invariant(config, t);
            if (!ok) ++bad;
        });
        checks.push_back({"pick " + dstr(d), bad ? CheckStatus::Fail : CheckStatus::Pass,
                          std::to_string(seen - bad) + "/" + std::to_string(seen) + " triangulations with " +
                              std::to_string(d * d) + " triangles and " + std::to_string(edges) + " edges"});
    }

    for (int d = 1; d <= d_max; ++d) {
        const auto u = upper_bound_exponents(d);
        const bool ok = pow2(static_cast<unsigned>(u.anclin_interior)) >= f_half[static_cast<std::size_t>(d)];
        checks.push_back({"sound_upper " + dstr(d), ok ? CheckStatus::Pass : CheckStatus::Fail,
                          "2^" + std::to_string(u.anclin_interior) + (ok ? " >= " : " < ") +
                              f_half[static_cast<std::size_t>(d)].str()});
    }

    std::vector<std::optional<BigInt>> fh;
    for (int d = 1; d <= d_max; ++d) fh.emplace_back(f_half[static_cast<std::size_t>(d)]);
    for (const auto& x : bound_discrepancies(std::max(d_max, ref.d_max), fh)) {
        checks.push_back({x.id + " " + dstr(x.d), x.whitelisted ? CheckStatus::Warn : CheckStatus::Fail,
                          "printed " + x.printed + ", measured " + x.measured + (x.note.empty() ? "" : "; " + x.note)});
    }
    for (int d = 4; d <= ref.d_max; ++d) {
        checks.push_back(compare("L2 " + dstr(d), ref.L2[static_cast<std::size_t>(d - 1)], lower_bound_2(d), "L2 ="));
    }
    return checks;
}

}  // namespace symtri::cli
