#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace crossfam {

/// Exact non-negative integer arithmetic; no overflow for any input this
/// project touches (binomials up to n = 200 and beyond).
using Natural = boost::multiprecision::cpp_int;

/// C(a, b), exact. Returns 0 when b < 0, b > a, or a < 0 so that the
/// truncated sums in the size formulas come out right without special
/// casing at the call sites.
Natural binomial(long a, long b);

}  // namespace crossfam
