#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "belyi/exact/integers.hpp"
#include "belyi/exact/poly.hpp"

namespace belyi {

using ZPoly = Poly<BigInteger>;
using QPoly = Poly<BigRational>;
using FpPoly = Poly<Fp>;

// Positive gcd of the coefficients.
inline BigInteger content(const ZPoly& p) {
  if (p.is_zero()) throw InvalidInput("content of the zero polynomial");
  BigInteger g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline ZPoly primitive_part(const ZPoly& p) {
  const BigInteger g = content(p);
  std::vector<BigInteger> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    BigInteger q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    v.push_back(std::move(q));
  }
  return ZPoly(std::move(v));
}

inline bool is_primitive(const ZPoly& p) { return !p.is_zero() && content(p) == 1; }

inline QPoly to_rational(const ZPoly& p) {
  std::vector<BigRational> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return QPoly(std::move(v));
}

// p = scale * primitive with scale > 0 and primitive in Z[x] of content 1.
struct ScaledIntegerPoly {
  BigRational scale;
  ZPoly primitive;
};

inline ScaledIntegerPoly clear_denominators(const QPoly& p) {
  if (p.is_zero()) throw InvalidInput("cannot normalize the zero polynomial");
  BigInteger l = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<BigInteger> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    BigInteger n = c.get_num() * l;
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), c.get_den().get_mpz_t());
    v.push_back(std::move(n));
  }
  ZPoly scaled(std::move(v));
  const BigInteger g = content(scaled);
  return {make_rational(g, l), primitive_part(scaled)};
}

inline FpPoly reduce_mod(const ZPoly& p, std::uint64_t modulus) {
  std::vector<Fp> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) v.emplace_back(c, modulus);
  return FpPoly(std::move(v));
}

namespace detail {

// Large primes used for modular coprimality certificates.
inline constexpr std::uint64_t kCertificatePrimes[] = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL};

}  // namespace detail

// Coprimality over Q. A constant gcd modulo one prime that keeps both degrees
// certifies coprimality; otherwise fall back to Euclid over Q.
inline bool coprime_over_q(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() ? b.is_constant() && !b.is_zero()
                                                     : a.is_constant();
  for (std::uint64_t q : detail::kCertificatePrimes) {
    const FpPoly ar = reduce_mod(a, q);
    const FpPoly br = reduce_mod(b, q);
    if (ar.degree() != a.degree() || br.degree() != b.degree()) continue;
    if (gcd(ar, br).is_constant()) return true;
  }
  return gcd(to_rational(a), to_rational(b)).is_constant();
}

inline bool coprime_over_q(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() ? b.is_constant() && !b.is_zero()
                                                     : a.is_constant();
  return coprime_over_q(clear_denominators(a).primitive, clear_denominators(b).primitive);
}

}  // namespace belyi
