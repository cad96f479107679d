#pragma once

#include <algorithm>
#include <vector>

#include "belyi/exact/factor.hpp"
#include "belyi/exact/integer_poly.hpp"

namespace belyi {

namespace detail {

// s^n p(r/s) = sum_i a_i r^i s^(n-i), by Horner in r.
inline BigInteger homogeneous_value(const ZPoly& p, const BigInteger& r, const BigInteger& s) {
  const std::size_t n = p.deg();
  BigInteger acc = p[n];
  BigInteger s_pow = 1;
  for (std::size_t i = n; i-- > 0;) {
    s_pow *= s;
    acc = acc * r + p[i] * s_pow;
  }
  return acc;
}

inline bool divides(const BigInteger& d, const BigInteger& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace detail

// All rational roots of p, ascending, without multiplicity.
//
// After removing the power of x, a root r/s in lowest terms has r dividing the
// constant term and s dividing the leading coefficient. Both are factored
// completely (or IncompleteFactorization is thrown) and every signed pair is
// tried. Since p = (s x - r) S(x) with S in Z[x], (s - r) | p(1) and
// (s + r) | p(-1) prune most candidates before the exact check.
inline std::vector<BigRational> rational_roots(const ZPoly& p,
                                               const FactorLimits& limits = FactorLimits::from_environment()) {
  if (p.is_zero()) throw InvalidInput("rational_roots: zero polynomial");
  std::vector<BigRational> roots;
  const std::size_t k = p.low_order();
  if (k > 0) roots.emplace_back(0);
  const ZPoly q = p.unshifted(k);
  if (q.deg() == 0) return roots;

  const BigInteger at_one = q(BigInteger(1));
  const BigInteger at_minus_one = q(BigInteger(-1));
  const auto nums = divisors(q[0], limits);
  const auto dens = divisors(q.lead(), limits);

  BigInteger g;
  for (const auto& r : nums) {
    for (const auto& s : dens) {
      mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        const BigInteger rr = sign > 0 ? r : BigInteger(-r);
        if (!detail::divides(s - rr, at_one)) continue;
        if (!detail::divides(s + rr, at_minus_one)) continue;
        if (detail::homogeneous_value(q, rr, s) == 0) roots.push_back(make_rational(rr, s));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace belyi
