// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "symtri/analysis.hpp"
#include "symtri/decomposition.hpp"
#include "symtri/io.hpp"
#include "symtri/reference_data.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace symtri;

namespace {

constexpr double kCountSeconds = 60.0;
constexpr double kFitTolerance = 0.05;
constexpr double kOrthogonality = 1e-9;
constexpr double kFitA = 0.56, kFitB = -0.77, kFitC = 0.21;
constexpr int kParallelWorkers = 4;

const std::vector<long> kSymmetric = {1, 2, 7, 74, 1194, 63024};
const std::vector<long> kHalf = {1, 1, 4, 24, 446, 14057};
// extended d = 7 targets, reported but not gating
constexpr long kSymmetric7 = 4739031;
constexpr long kHalf7 = 1214208;
const std::vector<long> kL2 = {9, 54, 729, 14580, 613089, 42916230};

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& what) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BigInt symmetric_count(int d, int workers = 1) {
    EnumerationConfig cfg;
    cfg.d = d;
    cfg.workers = workers;
    return enumerate_symmetric(cfg).count;
}

BigInt half_count(int d, int workers = 1) {
    EnumerationConfig cfg;
    cfg.d = d;
    cfg.symmetric = false;
    cfg.workers = workers;
    return enumerate_region(Region::half(d), cfg).count;
}

std::string timed(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

Outcome c1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (int d = 1; d <= 6; ++d) {
        const auto got = symmetric_count(d);
        if (got != kSymmetric[static_cast<std::size_t>(d - 1)]) o.fail("d=" + std::to_string(d) + " got " + to_string(got));
    }
    const double s = seconds_since(t0);
    if (s >= kCountSeconds) o.fail("runtime " + timed(s));
    if (o.pass) o.detail = "d=1..6 exact in " + timed(s);
    const auto ext = symmetric_count(7);
    o.detail += std::string("; extended d=7 ") + (ext == kSymmetric7 ? "matches " : "differs: ") + to_string(ext);
    return o;
}

Outcome c2() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (int d = 1; d <= 6; ++d) {
        const auto got = half_count(d);
        const long want = kHalf[static_cast<std::size_t>(d - 1)];
        if (got != want) o.fail("d=" + std::to_string(d) + " got " + to_string(got) + " want " + std::to_string(want));
    }
    const double s = seconds_since(t0);
    if (s >= kCountSeconds) o.fail("runtime " + timed(s));
    if (o.pass) o.detail = "d=1..6 exact in " + timed(s);
    const auto ext = half_count(7);
    o.detail += std::string("; extended d=7 ") + (ext == kHalf7 ? "matches " : "differs: got ") + to_string(ext) +
                (ext == kHalf7 ? "" : " want " + std::to_string(kHalf7));
    return o;
}

Outcome c3() {
    Outcome o;
    for (int d = 1; d <= 4; ++d) {
        const auto fast = symmetric_count(d);
        const auto naive = enumerate_naive_symmetric(d, Mode::Unimodular);
        if (fast != naive) o.fail("d=" + std::to_string(d) + " " + to_string(fast) + " vs " + to_string(naive));
    }
    if (o.pass) o.detail = "d=1..4";
    return o;
}

Outcome c4() {
    Outcome o;
    const auto& ref = reference_tables();
    for (int d = 4; d <= 9; ++d) {
        const auto got = lower_bound_2(d);
        if (got != kL2[static_cast<std::size_t>(d - 4)] || got != ref.L2[static_cast<std::size_t>(d - 1)]) {
            o.fail("d=" + std::to_string(d) + " got " + to_string(got));
        }
    }
    bool warned = false;
    for (const auto& x : bound_discrepancies(9)) {
        if (x.id == "table1.L2" && x.d == 3 && x.whitelisted && x.measured == "2" && x.printed == "1") warned = true;
    }
    if (!warned) o.fail("d=3 not reported as a whitelisted warning");
    if (o.pass) o.detail = "d=4..9 exact; d=3 WARN 2 vs 1";
    return o;
}

Outcome c5() {
    Outcome o;
    for (int d = 1; d <= 6; ++d) {
        try {
            sandwich_check(d, half_count(d), symmetric_count(d));
        } catch (const BoundViolation& e) {
            o.fail(std::string("computed ") + e.what());
        }
    }
    const auto& ref = reference_tables();
    for (int d = 1; d <= 9; ++d) {
        const auto i = static_cast<std::size_t>(d - 1);
        try {
            sandwich_check(d, ref.F_half[i], ref.F_tilde[i]);
        } catch (const BoundViolation& e) {
            o.fail(std::string("reference ") + e.what());
        }
        if ((ref.F_half[i] << (d / 2)) != ref.split_upper[i]) o.fail("identity d=" + std::to_string(d));
    }
    if (o.pass) o.detail = "computed d<=6, reference d<=9, identity d=1..9";
    return o;
}

Outcome c6() {
    Outcome o;
    for (int d = 1; d <= 5; ++d) {
        const auto via = count_via_decomposition(d);
        if (via != symmetric_count(d)) o.fail("d=" + std::to_string(d) + " got " + to_string(via));
    }
    if (o.pass) o.detail = "d=1..5";
    return o;
}

Outcome c7() {
    Outcome o;
    for (int d = 1; d <= 4; ++d) {
        for (bool symmetric : {true, false}) {
            const Region region = symmetric ? Region::full(d) : Region::half(d);
            const auto config = lattice_points(region);
            const long n = static_cast<long>(config.size());
            const long nb = static_cast<long>(config.boundary_point_count());
            const auto want_triangles = static_cast<std::size_t>(config.normalized_area());
            const Visitor check = [&](const Triangulation& t) {
                const auto v = validate(config, t);
                if (!v.proper || !v.covers || !v.unimodular) o.fail("invalid triangulation d=" + std::to_string(d));
                if (t.simplices.size() != want_triangles) o.fail("triangle count d=" + std::to_string(d));
                if (static_cast<long>(distinct_edges(config, t).size()) != 3 * n - nb - 3) {
                    o.fail("edge count d=" + std::to_string(d));
                }
            };
            EnumerationConfig cfg;
            cfg.d = d;
            cfg.symmetric = symmetric;
            if (symmetric) {
                if (want_triangles != static_cast<std::size_t>(d * d)) o.fail("area d=" + std::to_string(d));
                enumerate_symmetric(cfg, check);
            } else {
                enumerate_region(region, cfg, check);
            }
        }
    }
    for (int d = 1; d <= 12; ++d) {
        const auto config = lattice_points(Region::half(d));
        const auto direct = static_cast<long>(distinct_edges(config, standard_half_triangulation(d)).size());
        if (edge_counts(d).total != direct) o.fail("edge_counts d=" + std::to_string(d));
    }
    if (o.pass) o.detail = "d<=4 triangulations, edge_counts d=1..12";
    return o;
}

Outcome c8() {
    Outcome o;
    for (int d = 1; d <= 7; ++d) {
        const BigInt f = half_count(d);
        if (!pow2_at_least(Rational(upper_bound_exponents(d).anclin_interior), f)) o.fail("d=" + std::to_string(d));
    }
    bool flagged = false;
    for (const auto& x : bound_discrepancies(9)) {
        if (x.id == "U.unsound" && x.d == 4 && x.measured == "24") flagged = true;
    }
    if (!flagged) o.fail("printed U(4) not flagged");
    if (o.pass) o.detail = "d=1..7; U(4) flagged";
    return o;
}

Outcome c9() {
    Outcome o;
    const auto& ref = reference_tables();
    std::vector<std::pair<double, double>> pts;
    for (int d = 1; d <= 9; ++d) pts.emplace_back(d, log_value(ref.F_tilde[static_cast<std::size_t>(d - 1)], Rounding::Exact).exact);
    const auto f = quadratic_fit(pts);
    if (std::abs(f.a - kFitA) > kFitTolerance) o.fail("a=" + std::to_string(f.a));
    if (std::abs(f.b - kFitB) > kFitTolerance) o.fail("b=" + std::to_string(f.b));
    if (std::abs(f.c - kFitC) > kFitTolerance) o.fail("c=" + std::to_string(f.c));
    if (f.orthogonality > kOrthogonality) o.fail("orthogonality " + std::to_string(f.orthogonality));
    char buf[96];
    std::snprintf(buf, sizeof buf, "a=%.4f b=%.4f c=%.4f", f.a, f.b, f.c);
    if (o.pass) o.detail = buf;
    return o;
}

Outcome c10() {
    Outcome o;
    ComputedValues cv;
    cv.formulas = true;
    const auto rep = table_report(Table::Table2, 9, cv);
    for (int d = 1; d <= 9; ++d) {
        const auto* c = rep.find("f_tilde", d);
        if (!c || c->status != CellStatus::Match) o.fail("f_tilde d=" + std::to_string(d));
    }
    int u_annotated = 0;
    for (const auto& x : report_discrepancies(rep)) {
        if (x.id == "table2.u") {
            if (!x.whitelisted || x.note.empty()) o.fail("u d=" + std::to_string(x.d) + " not annotated");
            ++u_annotated;
        }
    }
    if (u_annotated == 0) o.fail("no u-row discrepancies");
    if (o.pass) o.detail = "f_tilde d=1..9; " + std::to_string(u_annotated) + " annotated u-row discrepancies";
    return o;
}

Outcome c11() {
    Outcome o;
    const auto& ref = reference_tables();
    for (int d = 2; d <= 9; ++d) {
        try {
            explicit_bound_check(d, ref.F_tilde[static_cast<std::size_t>(d - 1)]);
        } catch (const BoundViolation& e) {
            o.fail(e.what());
        }
    }
    if (o.pass) o.detail = "d=2..9";
    return o;
}

std::string stream_of(int d, bool symmetric) {
    std::ostringstream os;
    const Region region = symmetric ? Region::full(d) : Region::half(d);
    write_stream_header(os, {region, Mode::Unimodular, symmetric});
    EnumerationConfig cfg;
    cfg.d = d;
    cfg.symmetric = symmetric;
    const Visitor v = [&](const Triangulation& t) { write_stream_line(os, t); };
    if (symmetric) {
        enumerate_symmetric(cfg, v);
    } else {
        enumerate_region(region, cfg, v);
    }
    return os.str();
}

Outcome c12() {
    Outcome o;
    for (int d = 1; d <= 5; ++d) {
        if (symmetric_count(d, 1) != symmetric_count(d, kParallelWorkers)) o.fail("symmetric d=" + std::to_string(d));
        if (half_count(d, 1) != half_count(d, kParallelWorkers)) o.fail("half d=" + std::to_string(d));
        for (bool symmetric : {true, false}) {
            if (stream_of(d, symmetric) != stream_of(d, symmetric)) o.fail("stream d=" + std::to_string(d));
        }
    }
    if (o.pass) o.detail = "workers 1 vs 4, d<=5; streams byte-identical";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failed;
        std::printf("%s criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
