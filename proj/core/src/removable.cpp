#include "ncl/removable.hpp"

namespace ncl {

Interval removable_phi_eval(const Dyadic& x, const EnumerationPrefix& prefix) {
  const Dyadic ax = x.abs();
  if (ax.is_zero()) {
    if (prefix.empty())
      throw PrefixTooShort("no lower bound available from an empty prefix");
    return Interval::lower_bound_only(partial_sum(prefix, prefix.size() - 1, 0));
  }
  if (ax >= Dyadic(1)) {
    return Interval(partial_sum(prefix, 1, 0));
  }
  // Find n >= 1 with 1/(n+1) <= |x| <= 1/n, i.e. n <= 1/|x| <= n+1.
  // Start from a rounded reciprocal, then adjust by exact comparisons of
  // n*|x| against 1.
  BigInt nb = Dyadic::div_dir(Dyadic(1), ax, 16, RoundDir::Down).floor_to_int();
  if (nb < 1) nb = 1;
  auto fits = [&](const BigInt& n) {
    return Dyadic::from_mantissa_exp(n, 0) * ax <= Dyadic(1) &&
           Dyadic::from_mantissa_exp(n + 1, 0) * ax >= Dyadic(1);
  };
  while (!fits(nb)) {
    if (Dyadic::from_mantissa_exp(nb, 0) * ax > Dyadic(1))
      --nb;
    else
      ++nb;
  }
  if (nb > 1000000000000LL)
    throw PrefixTooShort("x is too close to 0 for any realistic prefix");
  const auto n = nb.convert_to<std::uint64_t>();
  if (prefix.size() < n + 2)
    throw PrefixTooShort("segment [1/" + std::to_string(n + 1) + ", 1/" +
                         std::to_string(n) + "] needs a(0..." +
                         std::to_string(n + 1) + ")");
  // value = sum_{m<=n+1} 2^-a(m) - 2^-a(n+1) * (|x| n(n+1) - n); the
  // parenthesis is the affine parameter along the segment, in [0, 1].
  const Dyadic y_left = partial_sum(prefix, n + 1, 0);
  const Dyadic t = ax * Dyadic(static_cast<long long>(n * (n + 1))) -
                   Dyadic(static_cast<long long>(n));
  const Dyadic v =
      y_left - Dyadic::pow2(-static_cast<long>(prefix.value(n + 1))) * t;
  return Interval(v);
}

}  // namespace ncl
