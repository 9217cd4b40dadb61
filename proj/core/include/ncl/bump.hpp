#pragma once

#include "ncl/interval.hpp"

namespace ncl {

// Canonical C-infinity bump: phi(x) = e^{-x^2/(1-x^2)} for |x| < 1, 0
// outside. phi(0) = 1, support exactly [-1,1]. Enclosures are exact zero
// outside the support (decided by dyadic comparison, not rounding).
Interval phi(const Interval& x, std::size_t prec_bits = 96);

// phi'(x) = -2x/(1-x^2)^2 * e^{-x^2/(1-x^2)} on |x| < 1, 0 outside.
// Near the support boundary the raw formula degenerates (0 * inf); there
// the enclosure falls back on a certified one-sided tail bound.
Interval phi_prime(const Interval& x, std::size_t prec_bits = 96);

// Enclosure of phi'(-1/2) = (16/9) e^{-1/3}.
Interval phi_prime_at_minus_half(std::size_t prec_bits = 96);

// Certified upper bound for sup |phi'| over the whole line.
Dyadic phi_prime_sup_bound();

// Monotone smooth step: 0 for u <= 0, 1 for u >= 1,
// S(u) = 1/(1 + e^{1/u - 1/(1-u)}) in between.
Interval smooth_step(const Interval& u, std::size_t prec_bits = 64);

// Certified upper bound for sup S'.
Dyadic smooth_step_deriv_sup_bound();

}  // namespace ncl
