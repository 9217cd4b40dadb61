#pragma once

#include "ncl/enumeration.hpp"
#include "ncl/interval.hpp"

namespace ncl {

// The removably non-computable piecewise-affine map: constant
// 2^-a(0) + 2^-a(1) for |x| >= 1, the segment between
// (1/(n+1), sum_{m<=n+1} 2^-a(m)) and (1/n, sum_{m<=n} 2^-a(m)) on
// [1/(n+1), 1/n], even (value(x) = value(-x)), and at 0 the left-computable
// sum of the whole series.
//
// For x != 0 the value is an exact dyadic: with s = 1/(n+1) <= |x| <= 1/n,
//   value = sum_{m<=n+1} 2^-a(m) - 2^-a(n+1) * (|x| n(n+1) - n),
// and |x| n(n+1) - n is dyadic-exact. For x = 0 only the nondecreasing
// lower bounds sum_{m<=M} 2^-a(m) exist; the result is an interval
// unbounded above, reflecting left-computability.
//
// (The companion degenerate examples - the constant map onto a
// non-computable value and the rational-indicator hybrid - are pointwise
// definitions over non-computable constants, not evaluable procedures,
// and are intentionally not exposed as operations.)
Interval removable_phi_eval(const Dyadic& x, const EnumerationPrefix& prefix);

}  // namespace ncl
