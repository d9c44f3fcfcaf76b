#pragma once

#include <string>
#include <vector>

namespace symtri::cli {

enum class CheckStatus { Pass, Warn, Fail };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

inline constexpr int kVerifyMaxD = 6;
inline constexpr int kVerifyOracleMaxD = 4;

/// Property suite over d = 1..d_max. Brute-force oracle checks stop at
/// kVerifyOracleMaxD. d_max above kVerifyMaxD throws std::invalid_argument.
std::vector<Check> verify_suite(int d_max, int jobs);

const char* to_string(CheckStatus s);

}  // namespace symtri::cli
