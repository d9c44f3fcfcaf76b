#include "symtri/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace symtri {

double log2_big(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log2 of a nonpositive integer");
    const auto msb = static_cast<long>(boost::multiprecision::msb(v));
    if (msb < 63) return std::log2(static_cast<double>(v.convert_to<std::uint64_t>()));
    // keep the top 63 bits as the mantissa
    const std::uint64_t top = static_cast<std::uint64_t>(v >> (msb - 62));
    return std::log2(static_cast<double>(top)) + static_cast<double>(msb - 62);
}

}  // namespace symtri
