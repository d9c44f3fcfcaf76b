#include "cli.hpp"

#include "verify.hpp"

#include "symtri/analysis.hpp"
#include "symtri/io.hpp"
#include "symtri/reference_data.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace symtri::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << csv_field(fields[i]);
    }
    os << "\r\n";
}

std::string rational_text(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string opt_str(const std::optional<BigInt>& v) { return v ? v->str() : ""; }
Json opt_json(const std::optional<std::string>& v) { return v ? Json(*v) : Json(nullptr); }

int default_jobs() {
    const char* env = std::getenv("SYMTRI_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) throw UsageError(std::string("invalid SYMTRI_THREADS value '") + env + "'");
    return static_cast<int>(v);
}

struct Common {
    std::string format = "json";
    int jobs = 0;  // 0 = from environment
    bool timing = false;

    int workers() const { return jobs > 0 ? jobs : default_jobs(); }
};

void add_format(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
}

void add_jobs(CLI::App* cmd, Common& c) {
    cmd->add_option("--jobs", c.jobs, "Worker threads (default: SYMTRI_THREADS or 1)")->check(CLI::Range(1, 1024));
}

struct Selection {
    int d = 0;
    std::string region = "full";
    std::string mode = "unimodular";
    bool symmetric = false;
};

void add_selection(CLI::App* cmd, Selection& s, bool d_required) {
    auto* opt = cmd->add_option("--d", s.d, "Dilation factor")->check(CLI::Range(1, 64));
    if (d_required) opt->required();
    cmd->add_option("--region", s.region, "Region")->check(CLI::IsMember({"full", "half"}));
    cmd->add_option("--mode", s.mode, "Triangle class")->check(CLI::IsMember({"unimodular", "all"}));
    cmd->add_flag("--symmetric", s.symmetric, "Mirror-invariant triangulations of the full triangle");
}

void check_selection(const Selection& s) {
    if (s.symmetric && s.region != "full") throw UsageError("--symmetric requires --region full");
}

struct Run {
    EnumerationResult result;
    double seconds = 0;
};

Run run_selection(const Selection& s, int workers, const Visitor& visitor = {}) {
    EnumerationConfig cfg;
    cfg.d = s.d;
    cfg.mode = parse_mode(s.mode);
    cfg.symmetric = s.symmetric;
    cfg.workers = workers;
    cfg.emit = visitor ? Emit::Stream : Emit::CountOnly;
    const auto t0 = std::chrono::steady_clock::now();
    Run r;
    if (s.symmetric) {
        r.result = enumerate_symmetric(cfg, visitor);
    } else {
        r.result = enumerate_region(Region{parse_region_kind(s.region), s.d}, cfg, visitor);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Json selection_json(const std::string& command, const Selection& s) {
    Json j;
    j["command"] = command;
    j["d"] = s.d;
    j["region"] = s.region;
    j["mode"] = s.mode;
    j["symmetric"] = s.symmetric;
    return j;
}

// ---------------------------------------------------------------------------

int cmd_count(const Selection& s, const Common& c, std::ostream& out) {
    check_selection(s);
    const int workers = c.workers();
    const auto r = run_selection(s, workers);
    if (c.format == "plain") {
        out << r.result.count.str() << '\n';
    } else if (c.format == "csv") {
        csv_row(out, {"d", "region", "mode", "symmetric", "count"});
        csv_row(out, {std::to_string(s.d), s.region, s.mode, s.symmetric ? "true" : "false", r.result.count.str()});
    } else {
        Json j = selection_json("count", s);
        j["count"] = r.result.count.str();
        if (c.timing) {
            j["jobs"] = workers;
            j["nodes"] = r.result.nodes;
            j["seconds"] = r.seconds;
        }
        out << j.dump(2) << '\n';
    }
    return kOk;
}

int cmd_enumerate(const Selection& s, const Common& c, const std::string& path, std::ostream& out) {
    check_selection(s);
    const StreamHeader header{Region{parse_region_kind(s.region), s.d}, parse_mode(s.mode), s.symmetric};
    std::ofstream file;
    std::ostream* sink = &out;
    if (!path.empty()) {
        file.open(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
        sink = &file;
    }
    write_stream_header(*sink, header);
    const auto r = run_selection(s, c.workers(), [&](const Triangulation& t) { write_stream_line(*sink, t); });
    if (!path.empty()) {
        file.close();
        if (!file) throw std::runtime_error("failed writing '" + path + "'");
        Json j = selection_json("enumerate", s);
        j["count"] = r.result.count.str();
        j["out"] = path;
        if (c.timing) {
            j["nodes"] = r.result.nodes;
            j["seconds"] = r.seconds;
        }
        out << j.dump(2) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------

const std::vector<std::string> kBoundsColumns = {
    "d",           "L1",          "L2",           "L2_as_printed", "n",          "n_b",
    "printed_U",   "total_edges", "interior_edges", "theorem_cap", "rough_rectangle",
    "F_half_ref",  "F_tilde_ref", "sandwich_upper", "sandwich_lower_slack", "sandwich_upper_slack",
    "sound_upper_holds"};

std::vector<std::string> bounds_fields(int d) {
    const auto row = bounds_row(d);
    const auto pc = point_counts(d);
    const auto f_tilde = reference_tables().F_tilde_at(d);
    std::string upper, lower_slack, upper_slack, sound;
    if (row.F_half_ref && f_tilde) {
        const auto s = sandwich_check(d, *row.F_half_ref, *f_tilde);
        upper = s.upper.str();
        lower_slack = s.lower_slack.str();
        upper_slack = s.upper_slack.str();
    }
    if (row.F_half_ref) {
        sound = pow2(static_cast<unsigned>(row.exponents.anclin_interior)) >= *row.F_half_ref ? "true" : "false";
    }
    const auto& e = row.exponents;
    return {std::to_string(d),          row.L1.str(),
            row.L2.str(),               row.L2_as_printed.str(),
            std::to_string(pc.n_measured), std::to_string(pc.nb_measured),
            rational_text(e.printed_U), std::to_string(e.total_edges),
            std::to_string(e.anclin_interior), rational_text(e.theorem_cap),
            rational_text(e.rough_rectangle), opt_str(row.F_half_ref),
            opt_str(f_tilde),           upper,
            lower_slack,                upper_slack,
            sound};
}

Json discrepancy_json(const Discrepancy& x) {
    Json j;
    j["id"] = x.id;
    j["d"] = x.d;
    j["printed"] = x.printed;
    j["measured"] = x.measured;
    j["whitelisted"] = x.whitelisted;
    j["note"] = x.note;
    return j;
}

int cmd_bounds(int d, int d_max, const Common& c, std::ostream& out) {
    if ((d > 0) == (d_max > 0)) throw UsageError("bounds needs exactly one of --d or --d-max");
    const int lo = d > 0 ? d : 1;
    const int hi = d > 0 ? d : d_max;
    std::vector<std::vector<std::string>> rows;
    for (int k = lo; k <= hi; ++k) rows.push_back(bounds_fields(k));

    if (c.format == "csv") {
        csv_row(out, kBoundsColumns);
        for (const auto& r : rows) csv_row(out, r);
        return kOk;
    }
    if (c.format == "plain") {
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << kBoundsColumns[i] << '=' << r[i];
            out << '\n';
        }
        return kOk;
    }
    Json j;
    j["command"] = "bounds";
    j["rows"] = Json::array();
    for (const auto& r : rows) {
        Json row;
        for (std::size_t i = 0; i < r.size(); ++i) {
            const auto& col = kBoundsColumns[i];
            if (col == "d" || col == "n" || col == "n_b" || col == "total_edges" || col == "interior_edges") {
                row[kBoundsColumns[i]] = std::stol(r[i]);
            } else if (kBoundsColumns[i] == "sound_upper_holds") {
                row[kBoundsColumns[i]] = r[i].empty() ? Json(nullptr) : Json(r[i] == "true");
            } else {
                row[kBoundsColumns[i]] = r[i].empty() ? Json(nullptr) : Json(r[i]);
            }
        }
        j["rows"].push_back(row);
    }
    j["discrepancies"] = Json::array();
    for (const auto& x : bound_discrepancies(hi)) {
        if (x.d >= lo) j["discrepancies"].push_back(discrepancy_json(x));
    }
    out << j.dump(2) << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------

struct TablesArgs {
    std::string table = "all";
    int d_max = 9;
    int compute_d_max = 0;
    int fit_lo = 1;
    int fit_hi = 9;
};

Json fit_json(const FitResult& f) {
    Json j;
    j["a"] = f.a;
    j["b"] = f.b;
    j["c"] = f.c;
    j["residuals"] = f.residuals;
    j["orthogonality"] = f.orthogonality;
    return j;
}

int cmd_tables(const TablesArgs& a, const Common& c, std::ostream& out) {
    const auto& ref = reference_tables();
    if (a.d_max > ref.d_max) throw UsageError("--d-max must be <= " + std::to_string(ref.d_max));
    if (a.compute_d_max > a.d_max) throw UsageError("--compute-d-max must be <= --d-max");
    if (a.compute_d_max > kVerifyMaxD) {
        throw UsageError("--compute-d-max is limited to " + std::to_string(kVerifyMaxD));
    }
    if (a.fit_lo < 1 || a.fit_hi > ref.d_max || a.fit_hi - a.fit_lo < 2) {
        throw UsageError("fit window must lie in 1.." + std::to_string(ref.d_max) + " and span 3 points");
    }

    ComputedValues cv;
    cv.formulas = true;
    for (int d = 1; d <= a.compute_d_max; ++d) {
        Selection s;
        s.d = d;
        s.symmetric = true;
        cv.f_tilde[d] = run_selection(s, c.workers()).result.count;
        s.symmetric = false;
        s.region = "half";
        cv.f_half[d] = run_selection(s, c.workers()).result.count;
    }
    auto f_tilde_at = [&](int d) {
        auto it = cv.f_tilde.find(d);
        return it != cv.f_tilde.end() ? it->second : *ref.F_tilde_at(d);
    };

    std::vector<TableReport> reports;
    if (a.table != "2") reports.push_back(table_report(Table::Table1, a.d_max, cv));
    if (a.table != "1") reports.push_back(table_report(Table::Table2, a.d_max, cv));

    if (c.format == "csv") {
        csv_row(out, {"table", "row", "d", "reference", "computed", "status", "source", "note"});
        for (const auto& r : reports) {
            for (const auto& cell : r.cells) {
                csv_row(out, {to_string(r.table), cell.row, std::to_string(cell.d), cell.reference.value_or(""),
                              cell.computed.value_or(""), to_string(cell.status), cell.source, cell.note});
            }
        }
        return kOk;
    }
    if (c.format == "plain") {
        for (const auto& r : reports) {
            for (const auto& cell : r.cells) {
                out << to_string(r.table) << ' ' << cell.row << " d=" << cell.d
                    << " reference=" << cell.reference.value_or("-") << " computed=" << cell.computed.value_or("-")
                    << ' ' << to_string(cell.status) << '\n';
            }
        }
        return kOk;
    }

    Json j;
    j["command"] = "tables";
    j["d_max"] = a.d_max;
    j["compute_d_max"] = a.compute_d_max;
    j["tables"] = Json::array();
    Json disc = Json::array();
    for (const auto& r : reports) {
        Json t;
        t["table"] = to_string(r.table);
        t["rows"] = r.rows;
        t["cells"] = Json::array();
        for (const auto& cell : r.cells) {
            Json cj;
            cj["row"] = cell.row;
            cj["d"] = cell.d;
            cj["reference"] = opt_json(cell.reference);
            cj["computed"] = opt_json(cell.computed);
            cj["status"] = to_string(cell.status);
            cj["source"] = cell.source;
            cj["note"] = cell.note;
            t["cells"].push_back(cj);
        }
        j["tables"].push_back(t);
        for (const auto& x : report_discrepancies(r)) disc.push_back(discrepancy_json(x));
    }

    std::vector<std::pair<double, double>> exact, rounded;
    for (int d = a.fit_lo; d <= a.fit_hi; ++d) {
        exact.emplace_back(d, log_value(f_tilde_at(d), Rounding::Exact).exact);
        rounded.emplace_back(d, std::stod(ref.f_tilde[static_cast<std::size_t>(d - 1)]));
    }
    Json fit;
    fit["window"] = {a.fit_lo, a.fit_hi};
    fit["exact"] = fit_json(quadratic_fit(exact));
    fit["rounded"] = fit_json(quadratic_fit(rounded));
    fit["reference"] = {{"a", ref.fit_a}, {"b", ref.fit_b}, {"c", ref.fit_c}};
    j["fit"] = fit;

    Json cap = Json::array(), expl = Json::array();
    for (int d = 2; d <= a.d_max; ++d) {
        const auto lv = log_value(f_tilde_at(d), Rounding::Exact);
        cap.push_back({{"d", d}, {"capacity", capacity(d, lv)}});
        const auto e = explicit_bound_check(d, f_tilde_at(d));
        expl.push_back({{"d", d}, {"lower", e.lower}, {"f_tilde", e.value}, {"upper", e.upper}});
    }
    j["capacity"] = cap;
    j["explicit_bounds"] = expl;
    j["discrepancies"] = disc;
    out << j.dump(2) << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------

int cmd_verify(int d_max, const Common& c, std::ostream& out) {
    if (d_max > kVerifyMaxD) {
        throw UsageError("refusing verify --d-max " + std::to_string(d_max) + ": limited to d <= " +
                         std::to_string(kVerifyMaxD));
    }
    const auto checks = verify_suite(d_max, c.workers());
    std::size_t pass = 0, warn = 0, fail = 0;
    for (const auto& ch : checks) {
        (ch.status == CheckStatus::Pass ? pass : ch.status == CheckStatus::Warn ? warn : fail)++;
    }
    const std::string status = fail ? "FAIL" : "PASS";
    if (c.format == "plain") {
        for (const auto& ch : checks) out << to_string(ch.status) << ' ' << ch.name << ": " << ch.detail << '\n';
        out << status << " (" << pass << " pass, " << warn << " warn, " << fail << " fail)\n";
    } else if (c.format == "csv") {
        csv_row(out, {"check", "status", "detail"});
        for (const auto& ch : checks) csv_row(out, {ch.name, to_string(ch.status), ch.detail});
    } else {
        Json j;
        j["command"] = "verify";
        j["d_max"] = d_max;
        j["status"] = status;
        j["summary"] = {{"pass", pass}, {"warn", warn}, {"fail", fail}};
        j["checks"] = Json::array();
        for (const auto& ch : checks) {
            j["checks"].push_back({{"name", ch.name}, {"status", to_string(ch.status)}, {"detail", ch.detail}});
        }
        out << j.dump(2) << '\n';
    }
    return fail ? kFailure : kOk;
}

// ---------------------------------------------------------------------------

struct RenderArgs {
    Selection sel;
    long index = 0;
    std::string file;
    std::string out;
    bool axis = false;
};

struct Found {};

int cmd_render(const RenderArgs& a, std::ostream& out) {
    std::optional<Triangulation> chosen;
    Region region;
    if (!a.file.empty()) {
        if (a.sel.d > 0) throw UsageError("--file and --d are mutually exclusive");
        std::ifstream in(a.file, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open '" + a.file + "'");
        const auto data = read_stream(in);
        region = data.header.region;
        if (a.index >= static_cast<long>(data.triangulations.size())) {
            throw std::runtime_error("index " + std::to_string(a.index) + " out of range: stream holds " +
                                     std::to_string(data.triangulations.size()) + " triangulations");
        }
        chosen = data.triangulations[static_cast<std::size_t>(a.index)];
    } else {
        if (a.sel.d < 1) throw UsageError("render needs --d or --file");
        check_selection(a.sel);
        region = Region{parse_region_kind(a.sel.region), a.sel.d};
        long seen = 0;
        try {
            run_selection(a.sel, 1, [&](const Triangulation& t) {
                if (seen++ == a.index) {
                    chosen = t;
                    throw Found{};
                }
            });
        } catch (const Found&) {
        }
        if (!chosen) {
            throw std::runtime_error("index " + std::to_string(a.index) + " out of range: " + std::to_string(seen) +
                                     " triangulations");
        }
    }
    const auto config = lattice_points(region);
    const auto check = validate(config, *chosen);
    if (!check.proper || !check.covers) throw std::runtime_error("stream entry is not a triangulation of its region");
    const std::string svg = render_svg(config, *chosen, SvgOptions{40, a.axis});
    if (a.out.empty() || a.out == "-") {
        out << svg;
        return kOk;
    }
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + a.out + "' for writing");
    f << svg;
    f.close();
    if (!f) throw std::runtime_error("failed writing '" + a.out + "'");
    Json j;
    j["command"] = "render";
    j["out"] = a.out;
    j["triangles"] = chosen->simplices.size();
    out << j.dump(2) << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate mirror-invariant lattice triangulations of dilated triangles", "symtri"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "symtri 0.1.0");

    Common common;
    Selection sel;
    std::string enum_out;
    int bounds_d = 0, bounds_dmax = 0;
    TablesArgs tables;
    int verify_dmax = 4;
    RenderArgs render;

    auto* count = app.add_subcommand("count", "Count triangulations");
    add_selection(count, sel, true);
    add_format(count, common);
    add_jobs(count, common);
    count->add_flag("--timing", common.timing, "Report node count and wall time");

    auto* enumerate = app.add_subcommand("enumerate", "Write a triangulation stream");
    add_selection(enumerate, sel, true);
    add_jobs(enumerate, common);
    enumerate->add_option("--out", enum_out, "Stream file (default: stdout)");
    enumerate->add_flag("--timing", common.timing, "Report node count and wall time");

    auto* bounds = app.add_subcommand("bounds", "Closed-form bounds and exponents");
    auto* bd = bounds->add_option("--d", bounds_d, "Single d");
    auto* bdm = bounds->add_option("--d-max", bounds_dmax, "Rows d = 1..N")->check(CLI::Range(1, 200));
    bd->excludes(bdm);
    bd->check(CLI::Range(1, 200));
    add_format(bounds, common);

    auto* tbl = app.add_subcommand("tables", "Reference table reproduction report");
    tbl->add_option("--table", tables.table, "Which table")->check(CLI::IsMember({"1", "2", "all"}));
    tbl->add_option("--d-max", tables.d_max, "Columns d = 1..N")->check(CLI::Range(1, 64));
    tbl->add_option("--compute-d-max", tables.compute_d_max, "Enumerate counts for d = 1..N")
        ->check(CLI::NonNegativeNumber);
    tbl->add_option("--fit-lo", tables.fit_lo, "First d of the regression window");
    tbl->add_option("--fit-hi", tables.fit_hi, "Last d of the regression window");
    add_format(tbl, common);
    add_jobs(tbl, common);

    auto* verify = app.add_subcommand("verify", "Run the property suite");
    verify->add_option("--d-max", verify_dmax, "Largest d")->check(CLI::Range(1, 64));
    add_format(verify, common);
    add_jobs(verify, common);

    auto* rend = app.add_subcommand("render", "Draw one triangulation as SVG");
    add_selection(rend, render.sel, false);
    rend->add_option("--index", render.index, "Position in the stream, from 0")->check(CLI::NonNegativeNumber);
    rend->add_option("--file", render.file, "Read the triangulation from a stream file");
    rend->add_option("--out", render.out, "SVG path (default: stdout)");
    rend->add_flag("--axis", render.axis, "Draw the symmetry axis");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kUsage;
    }

    try {
        if (count->parsed()) return cmd_count(sel, common, out);
        if (enumerate->parsed()) return cmd_enumerate(sel, common, enum_out, out);
        if (bounds->parsed()) return cmd_bounds(bounds_d, bounds_dmax, common, out);
        if (tbl->parsed()) return cmd_tables(tables, common, out);
        if (verify->parsed()) return cmd_verify(verify_dmax, common, out);
        if (rend->parsed()) return cmd_render(render, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace symtri::cli
