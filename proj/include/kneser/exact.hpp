#pragma once

#include <cstddef>
#include <vector>

#include "kneser/setfam.hpp"

namespace kneser {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

/// Exact determinant of a square integer matrix (fraction-free Bareiss).
BigInt determinant(IntMatrix m);

/// Integer vector orthogonal to the d-1 given rows of length d, with
/// <normal, x> == det([rows; x]) for every x.
IntVector orthogonal_complement(const IntMatrix& rows);

BigInt dot(const IntVector& a, const IntVector& b);

inline int sign_of(const BigInt& x) { return x.sign(); }

}  // namespace kneser
