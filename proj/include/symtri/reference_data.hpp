#pragma once

// Published reference values for d = 1..9, shipped as data/reference_tables.json
// and embedded at build time. Read-only.

#include "symtri/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symtri {

struct ReferenceTables {
    int version = 0;
    int d_max = 0;
    // counts, index d-1
    std::vector<BigInt> L2;
    std::vector<BigInt> F_half;
    std::vector<BigInt> F_tilde;
    std::vector<BigInt> split_upper;
    // logarithmic table as printed
    std::vector<std::string> l2;
    std::vector<std::string> f_half;
    std::vector<std::string> f_tilde;
    std::vector<std::string> log_split_upper;
    std::vector<std::string> u;
    double fit_a = 0, fit_b = 0, fit_c = 0;

    std::optional<BigInt> F_half_at(int d) const;
    std::optional<BigInt> F_tilde_at(int d) const;
};

const ReferenceTables& reference_tables();

/// The raw embedded JSON document.
const char* reference_tables_json();

}  // namespace symtri
