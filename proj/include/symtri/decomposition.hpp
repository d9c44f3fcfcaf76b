#pragma once

// Correspondence between mirror-invariant unimodular triangulations of the full
// triangle and triangulations of the half region plus one split flag for each
// unit square straddling the axis {x = y}.
//
// Axis square k has corners (k,k), (k+1,k), (k,k+1), (k+1,k+1) for
// 0 <= k < floor(d/2). Its Main split uses the on-axis diagonal; its Anti split
// uses the diagonal (k+1,k)-(k,k+1) crossing the axis.

#include "symtri/bigint.hpp"
#include "symtri/enumeration.hpp"

#include <stdexcept>
#include <vector>

namespace symtri {

enum class Split { Anti, Main };

struct SplitVector {
    std::vector<Split> flags;  // indexed by axis square k

    static SplitVector all_main(int d) { return {std::vector<Split>(static_cast<std::size_t>(d / 2), Split::Main)}; }
    friend bool operator==(const SplitVector&, const SplitVector&) = default;
};

class CompositionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Decomposition {
    Triangulation half;
    SplitVector splits;
};

/// The lower triangle {(k,k),(k+1,k),(k+1,k+1)} of axis square k.
std::array<LatticePoint, 3> axis_lower_triangle(int k);

/// t_half together with its mirror image, plus the fixed central triangle for odd d.
Triangulation reflect_extend(const Triangulation& half);

Decomposition decompose(const Triangulation& t);

/// Inverse of decompose. Throws CompositionError when an Anti flag sits on a
/// square whose lower triangle is not in `half`.
Triangulation compose(const Triangulation& half, const SplitVector& splits);

/// Number of axis squares whose lower triangle belongs to the half triangulation.
int splittable_squares(const Triangulation& half);

/// Sum over all unimodular half-region triangulations of 2^(splittable squares).
BigInt count_via_decomposition(int d, int workers = 1);

}  // namespace symtri
