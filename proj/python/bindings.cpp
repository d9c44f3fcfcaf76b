#include "cli.hpp"

#include "symtri/analysis.hpp"
#include "symtri/decomposition.hpp"
#include "symtri/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace symtri;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(v.str())); }
BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

std::vector<std::array<int, 3>> triples(const Triangulation& t) {
    std::vector<std::array<int, 3>> out;
    for (const auto& s : t.simplices) out.push_back(s.v);
    return out;
}

Triangulation from_triples(const Region& region, const std::vector<std::array<int, 3>>& ts) {
    const auto n = static_cast<int>(lattice_points(region).size());
    Triangulation t{region, {}};
    for (const auto& v : ts) {
        for (int i : v) {
            if (i < 0 || i >= n) throw py::index_error("point index out of range");
        }
        t.simplices.push_back(Simplex::make(v[0], v[1], v[2]));
    }
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

EnumerationConfig config(int d, const std::string& mode, bool symmetric, int workers) {
    EnumerationConfig cfg;
    cfg.d = d;
    cfg.mode = parse_mode(mode);
    cfg.symmetric = symmetric;
    cfg.workers = workers;
    return cfg;
}

Region region_of(int d, const std::string& region) {
    if (d < 1) throw py::value_error("d must be >= 1");
    return Region{parse_region_kind(region), d};
}

py::dict fit_dict(const FitResult& f) {
    py::dict out;
    out["a"] = f.a;
    out["b"] = f.b;
    out["c"] = f.c;
    out["residuals"] = f.residuals;
    out["orthogonality"] = f.orthogonality;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<EnumerationAborted>(m, "EnumerationAborted", PyExc_RuntimeError);
    py::register_exception<BoundViolation>(m, "BoundViolation", PyExc_ArithmeticError);
    py::register_exception<StreamParseError>(m, "StreamParseError", PyExc_ValueError);

    m.def("lattice_points", [](int d, const std::string& region) {
        const auto c = lattice_points(region_of(d, region));
        std::vector<std::pair<int, int>> out;
        for (const auto& p : c.points()) out.emplace_back(p.x, p.y);
        return out;
    }, py::arg("d"), py::arg("region") = "full");

    m.def("count_symmetric", [](int d, const std::string& mode, int workers) {
        if (d < 1) throw py::value_error("d must be >= 1");
        EnumerationResult r;
        {
            py::gil_scoped_release release;
            r = enumerate_symmetric(config(d, mode, true, workers));
        }
        return to_py(r.count);
    }, py::arg("d"), py::arg("mode") = "unimodular", py::arg("workers") = 1);

    m.def("count_region", [](int d, const std::string& region, const std::string& mode, int workers) {
        const Region reg = region_of(d, region);
        EnumerationResult r;
        {
            py::gil_scoped_release release;
            r = enumerate_region(reg, config(d, mode, false, workers));
        }
        return to_py(r.count);
    }, py::arg("d"), py::arg("region") = "half", py::arg("mode") = "unimodular", py::arg("workers") = 1);

    m.def("enumerate_symmetric", [](int d, const std::string& mode) {
        if (d < 1) throw py::value_error("d must be >= 1");
        std::vector<std::vector<std::array<int, 3>>> out;
        enumerate_symmetric(config(d, mode, true, 1), [&](const Triangulation& t) { out.push_back(triples(t)); });
        return out;
    }, py::arg("d"), py::arg("mode") = "unimodular");

    m.def("enumerate_region", [](int d, const std::string& region, const std::string& mode) {
        std::vector<std::vector<std::array<int, 3>>> out;
        enumerate_region(region_of(d, region), config(d, mode, false, 1),
                         [&](const Triangulation& t) { out.push_back(triples(t)); });
        return out;
    }, py::arg("d"), py::arg("region") = "half", py::arg("mode") = "unimodular");

    m.def("count_naive_symmetric", [](int d) { return to_py(enumerate_naive_symmetric(d, Mode::Unimodular)); },
          py::arg("d"));
    m.def("count_via_decomposition", [](int d, int workers) { return to_py(count_via_decomposition(d, workers)); },
          py::arg("d"), py::arg("workers") = 1);

    m.def("lower_bound_1", [](int d) { return to_py(lower_bound_1(d)); }, py::arg("d"));
    m.def("lower_bound_2", [](int d, bool as_printed) {
        return to_py(lower_bound_2(d, as_printed ? L2Variant::AsPrinted : L2Variant::TableMatching));
    }, py::arg("d"), py::arg("as_printed") = false);

    m.def("edge_counts", [](int d) {
        const auto e = edge_counts(d);
        py::dict out;
        out["total"] = e.total;
        out["interior"] = e.interior;
        out["boundary"] = e.boundary;
        return out;
    }, py::arg("d"));

    m.def("sandwich_check", [](int d, const py::int_& f_half, const py::int_& f_sym) {
        const auto r = sandwich_check(d, from_py(f_half), from_py(f_sym));
        py::dict out;
        out["upper"] = to_py(r.upper);
        out["lower_slack"] = to_py(r.lower_slack);
        out["upper_slack"] = to_py(r.upper_slack);
        return out;
    }, py::arg("d"), py::arg("f_half"), py::arg("f_sym"));

    m.def("log2_rounded", [](const py::int_& v, const std::string& rounding) {
        static const std::map<std::string, Rounding> modes = {{"up", Rounding::Up},
                                                              {"down", Rounding::Down},
                                                              {"one_decimal", Rounding::OneDecimal},
                                                              {"one_decimal_down", Rounding::OneDecimalDown},
                                                              {"exact", Rounding::Exact}};
        const auto it = modes.find(rounding);
        if (it == modes.end()) throw py::value_error("unknown rounding '" + rounding + "'");
        return log_value(from_py(v), it->second).value;
    }, py::arg("value"), py::arg("rounding") = "exact");

    m.def("capacity", [](int d, const py::int_& f_tilde) {
        return capacity(d, log_value(from_py(f_tilde), Rounding::Exact));
    }, py::arg("d"), py::arg("f_tilde"));

    m.def("quadratic_fit", [](const std::vector<std::pair<double, double>>& pts) { return fit_dict(quadratic_fit(pts)); },
          py::arg("points"));

    m.def("explicit_bound_check", [](int d, const py::int_& f_tilde) {
        const auto r = explicit_bound_check(d, from_py(f_tilde));
        py::dict out;
        out["lower"] = r.lower;
        out["value"] = r.value;
        out["upper"] = r.upper;
        return out;
    }, py::arg("d"), py::arg("f_tilde"));

    m.def("table_report", [](int table, int d_max, const std::map<int, py::int_>& f_tilde,
                             const std::map<int, py::int_>& f_half, bool formulas) {
        if (table != 1 && table != 2) throw py::value_error("table must be 1 or 2");
        ComputedValues cv;
        cv.formulas = formulas;
        for (const auto& [d, v] : f_tilde) cv.f_tilde[d] = from_py(v);
        for (const auto& [d, v] : f_half) cv.f_half[d] = from_py(v);
        const auto rep = table_report(table == 1 ? Table::Table1 : Table::Table2, d_max, cv);
        py::list out;
        for (const auto& c : rep.cells) {
            py::dict cell;
            cell["row"] = c.row;
            cell["d"] = c.d;
            cell["reference"] = c.reference;
            cell["computed"] = c.computed;
            cell["status"] = to_string(c.status);
            cell["source"] = c.source;
            cell["note"] = c.note;
            out.append(cell);
        }
        return out;
    }, py::arg("table"), py::arg("d_max") = 9, py::arg("f_tilde") = std::map<int, py::int_>{},
       py::arg("f_half") = std::map<int, py::int_>{}, py::arg("formulas") = true);

    m.def("render_svg", [](int d, const std::vector<std::array<int, 3>>& simplices, const std::string& region, bool axis) {
        const Region reg = region_of(d, region);
        return render_svg(lattice_points(reg), from_triples(reg, simplices), SvgOptions{40, axis});
    }, py::arg("d"), py::arg("simplices"), py::arg("region") = "full", py::arg("axis") = false);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
