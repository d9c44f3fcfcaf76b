#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace symtri {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt parse_bigint(const std::string& s) { return BigInt(s); }

inline BigInt pow2(unsigned e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

/// Base-2 logarithm of a positive integer, accurate to double precision.
double log2_big(const BigInt& v);

}  // namespace symtri
