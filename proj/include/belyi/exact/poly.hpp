#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "belyi/errors.hpp"
#include "belyi/exact/prime_field.hpp"
#include "belyi/exact/proj_point.hpp"

namespace belyi {

// Degree of a polynomial; the zero polynomial has no degree (nullopt), which
// orders below every real degree.
using Degree = std::optional<std::size_t>;

// Dense univariate polynomial, coefficients in ascending degree order.
// The leading stored coefficient is nonzero unless the polynomial is zero.
template <class K>
class Poly {
 public:
  using coefficient_type = K;
  using traits = coefficient_traits<K>;

  Poly() = default;
  explicit Poly(std::vector<K> ascending) : c_(std::move(ascending)) { trim(); }

  static Poly constant(K c) { return Poly(std::vector<K>{std::move(c)}); }

  static Poly monomial(K c, std::size_t n) {
    if (traits::is_zero(c)) return {};
    std::vector<K> v(n + 1, traits::from_int(c, 0));
    v[n] = std::move(c);
    return Poly(std::move(v));
  }

  // x - a
  static Poly linear_root(const K& a) {
    return Poly(std::vector<K>{-a, traits::from_int(a, 1)});
  }

  Degree degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }

  // Degree of a polynomial known to be nonzero.
  std::size_t deg() const {
    if (c_.empty()) throw InvalidInput("degree of the zero polynomial");
    return c_.size() - 1;
  }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  std::size_t size() const noexcept { return c_.size(); }
  std::span<const K> coefficients() const noexcept { return c_; }
  const K& operator[](std::size_t i) const { return c_.at(i); }

  const K& lead() const {
    if (c_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
    return c_.back();
  }

  // Multiplicity of x as a factor.
  std::size_t low_order() const {
    if (c_.empty()) throw InvalidInput("order of the zero polynomial");
    std::size_t i = 0;
    while (traits::is_zero(c_[i])) ++i;
    return i;
  }

  // Horner evaluation; x supplies the domain for the zero polynomial.
  K operator()(const K& x) const {
    if (c_.empty()) return traits::from_int(x, 0);
    K acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), traits::from_int(o.c_.front(), 0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), traits::from_int(o.c_.front(), 0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const K& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, traits::from_int(a.c_.front(), 0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // p(x) * x^n
  Poly shifted(std::size_t n) const {
    if (c_.empty()) return {};
    std::vector<K> v(n, traits::from_int(c_.front(), 0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  // p(x) / x^n for n <= low_order().
  Poly unshifted(std::size_t n) const {
    if (c_.empty()) return {};
    if (n > low_order()) throw InvalidInput("x^n does not divide the polynomial");
    return Poly(std::vector<K>(c_.begin() + static_cast<std::ptrdiff_t>(n), c_.end()));
  }

 private:
  void trim() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
Poly<K> pow(const Poly<K>& base, std::size_t e, const K& one) {
  Poly<K> r = Poly<K>::constant(one);
  Poly<K> b = base;
  while (e != 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return r;
}

template <class K>
Poly<K> derivative(const Poly<K>& p) {
  if (p.size() <= 1) return {};
  std::vector<K> v;
  v.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) {
    v.push_back(p[i] * coefficient_traits<K>::from_int(p[i], static_cast<long>(i)));
  }
  return Poly<K>(std::move(v));
}

// f1' f2 - f1 f2'; vanishes exactly when f1/f2 has zero derivative.
template <class K>
Poly<K> wronskian(const Poly<K>& f1, const Poly<K>& f2) {
  return derivative(f1) * f2 - f1 * derivative(f2);
}

// Substitution p(q(x)).
template <class K>
Poly<K> compose(const Poly<K>& p, const Poly<K>& q) {
  Poly<K> r;
  for (std::size_t i = p.size(); i-- > 0;) r = r * q + Poly<K>::constant(p[i]);
  return r;
}

template <Field K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.is_zero() || a.deg() < b.deg()) return {Poly<K>{}, a};
  const std::size_t db = b.deg();
  const K inv_lead = coefficient_traits<K>::from_int(b.lead(), 1) / b.lead();
  std::vector<K> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<K> quo(a.deg() - db + 1, coefficient_traits<K>::from_int(b.lead(), 0));
  for (std::size_t i = a.deg() + 1; i-- > db;) {
    if (coefficient_traits<K>::is_zero(rem[i])) continue;
    K q = rem[i] * inv_lead;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
    quo[i - db] = std::move(q);
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
  return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <Field K>
Poly<K> exact_quotient(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidInput("polynomial division is not exact");
  return q;
}

template <Field K>
Poly<K> monic(const Poly<K>& p) {
  if (p.is_zero()) return p;
  return p * (coefficient_traits<K>::from_int(p.lead(), 1) / p.lead());
}

// Monic greatest common divisor; gcd(0, 0) = 0.
template <Field K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Divide by (x - a) assuming p(a) = 0 (synthetic division).
template <class K>
Poly<K> deflate(const Poly<K>& p, const K& a) {
  if (p.size() <= 1) return {};
  std::vector<K> q(p.size() - 1, coefficient_traits<K>::from_int(a, 0));
  K carry = p.lead();
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = p[i] + carry * a;
  }
  return Poly<K>(std::move(q));
}

// Multiplicity of the affine root a. Infinity is rejected: callers conjugate
// by 1/x instead.
template <class K>
std::size_t ord_at(const Poly<K>& p, const ProjPoint<K>& a) {
  if (a.is_infinity()) throw InvalidInput("ord_at: conjugate by 1/x to work at infinity");
  if (p.is_zero()) throw InvalidInput("ord_at: zero polynomial");
  const K& x = a.value();
  std::size_t m = 0;
  Poly<K> q = p;
  while (!q.is_zero() && coefficient_traits<K>::is_zero(q(x))) {
    q = deflate(q, x);
    ++m;
  }
  return m;
}

template <class K>
std::size_t ord_at(const Poly<K>& p, const K& a) {
  return ord_at(p, ProjPoint<K>(a));
}

}  // namespace belyi
