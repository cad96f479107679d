#pragma once

#include <algorithm>
#include <type_traits>
#include <utility>
#include <vector>

#include "belyi/exact/integer_poly.hpp"
#include "belyi/exact/poly.hpp"
#include "belyi/exact/proj_point.hpp"

namespace belyi {

// A rational function numerator/denominator with coprime parts and a nonzero
// denominator. Over Z both parts are additionally primitive: this is the
// content-normalized integer model of a map over Q.
template <class K>
class RationalMap {
 public:
  RationalMap(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidInput("rational map with zero denominator");
    if constexpr (std::is_same_v<K, BigRational>) {
      if (!coprime_over_q(num_, den_)) throw InvalidInput("numerator and denominator not coprime");
    } else if constexpr (Field<K>) {
      if (!gcd(num_, den_).is_constant()) throw InvalidInput("numerator and denominator not coprime");
    } else {
      if (!is_primitive(den_) || (!num_.is_zero() && !is_primitive(num_))) {
        throw InvalidInput("integer model parts must have content 1");
      }
      if (!coprime_over_q(num_, den_)) throw InvalidInput("numerator and denominator not coprime");
    }
  }

  // Polynomial map p / 1.
  static RationalMap polynomial(Poly<K> p) {
    if (p.is_zero()) throw InvalidInput("zero polynomial map");
    K one = coefficient_traits<K>::from_int(p.lead(), 1);
    return RationalMap(std::move(p), Poly<K>::constant(std::move(one)));
  }

  const Poly<K>& numerator() const noexcept { return num_; }
  const Poly<K>& denominator() const noexcept { return den_; }

  // max(deg num, deg den); constant maps have degree 0.
  std::size_t degree() const {
    const std::size_t dn = num_.is_zero() ? 0 : num_.deg();
    return std::max(dn, den_.deg());
  }

  bool is_constant() const { return degree() == 0; }

  friend bool operator==(const RationalMap& a, const RationalMap& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly<K> num_;
  Poly<K> den_;
};

using QMap = RationalMap<BigRational>;
using ZMap = RationalMap<BigInteger>;
using FpMap = RationalMap<Fp>;

// Builds num/den after dividing out their gcd.
template <Field K>
RationalMap<K> reduced_map(const Poly<K>& num, const Poly<K>& den) {
  const Poly<K> g = gcd(num, den);
  if (g.is_zero()) throw InvalidInput("0/0 is not a rational map");
  return RationalMap<K>(exact_quotient(num, g), exact_quotient(den, g));
}

// Equality as rational functions.
template <Field K>
bool same_function(const RationalMap<K>& a, const RationalMap<K>& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

// Scales both parts so the denominator is monic; the function is unchanged.
template <Field K>
RationalMap<K> with_monic_denominator(const RationalMap<K>& f) {
  const K s = coefficient_traits<K>::from_int(f.denominator().lead(), 1) / f.denominator().lead();
  return RationalMap<K>(f.numerator() * s, f.denominator() * s);
}

// Projective evaluation. Coprime parts never vanish together, so no 0/0 case.
template <Field K>
ProjPoint<K> eval_map(const RationalMap<K>& f, const ProjPoint<K>& x) {
  const auto& num = f.numerator();
  const auto& den = f.denominator();
  if (x.is_affine()) {
    const K d = den(x.value());
    if (coefficient_traits<K>::is_zero(d)) return ProjPoint<K>::infinity();
    return ProjPoint<K>(num(x.value()) / d);
  }
  if (num.is_zero()) return ProjPoint<K>(coefficient_traits<K>::from_int(den.lead(), 0));
  if (num.deg() > den.deg()) return ProjPoint<K>::infinity();
  if (num.deg() < den.deg()) return ProjPoint<K>(coefficient_traits<K>::from_int(den.lead(), 0));
  return ProjPoint<K>(num.lead() / den.lead());
}

template <Field K>
ProjPoint<K> eval_map(const RationalMap<K>& f, const K& x) {
  return eval_map(f, ProjPoint<K>(x));
}

namespace detail {

// sum_i c_i A^i B^(n-i) for the coefficients c of p.
template <Field K>
Poly<K> homogenized_substitution(const Poly<K>& p, std::size_t n, const std::vector<Poly<K>>& a_pows,
                                 const std::vector<Poly<K>>& b_pows) {
  Poly<K> r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (coefficient_traits<K>::is_zero(p[i])) continue;
    r += a_pows[i] * b_pows[n - i] * p[i];
  }
  return r;
}

}  // namespace detail

// f o g, written as (sum N_i A^i B^(n-i)) / (sum D_i A^i B^(n-i)) for
// f = N/D of degree n and g = A/B. When coprime_result is set the caller
// guarantees the parts are already coprime (g of degree one) and the gcd is
// skipped.
template <Field K>
RationalMap<K> compose(const RationalMap<K>& f, const RationalMap<K>& g, bool coprime_result = false) {
  const std::size_t n = f.degree();
  const K one = coefficient_traits<K>::from_int(g.denominator().lead(), 1);
  std::vector<Poly<K>> a_pows{Poly<K>::constant(one)};
  std::vector<Poly<K>> b_pows{Poly<K>::constant(one)};
  for (std::size_t i = 1; i <= n; ++i) {
    a_pows.push_back(a_pows.back() * g.numerator());
    b_pows.push_back(b_pows.back() * g.denominator());
  }
  Poly<K> num = detail::homogenized_substitution(f.numerator(), n, a_pows, b_pows);
  Poly<K> den = detail::homogenized_substitution(f.denominator(), n, a_pows, b_pows);
  if (coprime_result) return RationalMap<K>(std::move(num), std::move(den));
  return reduced_map(num, den);
}

// x -> (a x + b) / (c x + d), ad - bc != 0.
template <Field K>
RationalMap<K> mobius(const K& a, const K& b, const K& c, const K& d) {
  if (coefficient_traits<K>::is_zero(a * d - b * c)) throw InvalidInput("degenerate Mobius map");
  return RationalMap<K>(Poly<K>(std::vector<K>{b, a}), Poly<K>(std::vector<K>{d, c}));
}

// phi^-1 o f o phi for a Mobius map phi given with its inverse. Degree-one
// composition keeps coprime parts coprime, so no gcd is needed.
template <Field K>
RationalMap<K> conjugate(const RationalMap<K>& f, const RationalMap<K>& phi,
                         const RationalMap<K>& phi_inverse) {
  return compose(phi_inverse, compose(f, phi, true), true);
}

}  // namespace belyi
