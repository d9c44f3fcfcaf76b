#pragma once

// Base-2 logarithm tables, capacity, quadratic regression, the explicit
// two-sided bound on f~(d), and side-by-side reports against the reference tables.

#include "symtri/bigint.hpp"
#include "symtri/bounds.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symtri {

enum class Rounding {
    Up,              // ceiling to an integer
    Down,            // floor to an integer
    OneDecimal,      // nearest tenth, ties to even
    OneDecimalDown,  // floor to a tenth
    Exact,
};

std::string to_string(Rounding r);

struct LogValue {
    BigInt source;
    double exact = 0;  // log2(source) at double precision
    double value = 0;  // after rounding
    Rounding rounding = Rounding::Exact;
    std::string text;  // value as it would be printed
};

/// Throws std::domain_error for nonpositive input.
LogValue log_value(const BigInt& v, Rounding rounding);
std::map<int, LogValue> log_table(const std::map<int, BigInt>& values, Rounding rounding);

/// 2 f~(d) / (d(d-1)) from the exact log. d < 2 throws std::invalid_argument.
double capacity(int d, const LogValue& f_tilde);

struct FitResult {
    double a = 0, b = 0, c = 0;
    std::vector<double> residuals;
    // max_j |X^T r|_j / (|X_j| |y|), zero for an exact least-squares solution
    double orthogonality = 0;
};

/// Least squares a d^2 + b d + c. Fewer than 3 points or fewer than 3
/// distinct abscissae throws std::invalid_argument.
FitResult quadratic_fit(const std::vector<std::pair<double, double>>& points);

struct ExplicitBoundReport {
    int d = 0;
    double lower = 0;  // d^2/4 - d/2 - (d-2) log2 d
    double value = 0;  // log2 F~(d)
    double upper = 0;  // 3/4 d^2 + 3/2 d - 3/4
    double lower_slack = 0;
    double upper_slack = 0;
};

/// Throws BoundViolation if either side fails, std::invalid_argument for d < 2.
ExplicitBoundReport explicit_bound_check(int d, const BigInt& f_tilde);

enum class Table { Table1, Table2 };
std::string to_string(Table t);

enum class CellStatus { Match, Mismatch, Whitelisted, ReferenceOnly };
std::string to_string(CellStatus s);

struct TableCell {
    std::string row;
    int d = 0;
    std::optional<std::string> reference;
    std::optional<std::string> computed;
    CellStatus status = CellStatus::ReferenceOnly;
    std::string source;  // enumeration, formula, reference
    std::string note;
};

struct TableReport {
    Table table = Table::Table1;
    int d_max = 0;
    std::vector<std::string> rows;
    std::vector<TableCell> cells;  // row-major in `rows` order, then d

    const TableCell* find(const std::string& row, int d) const;
    std::size_t count(CellStatus s) const;
};

struct ComputedValues {
    std::map<int, BigInt> f_tilde;
    std::map<int, BigInt> f_half;
    // also evaluate closed forms and derive cells from reference counts
    // (2^floor(d/2) F_half, logarithms of the reference counts)
    bool formulas = false;
};

/// d_max must lie in [1, reference d_max].
TableReport table_report(Table which, int d_max, const ComputedValues& computed);

/// Whitelisted and unexpected disagreements from a report, as discrepancies.
std::vector<Discrepancy> report_discrepancies(const TableReport& report);

}  // namespace symtri
