#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "belyi/exact/integers.hpp"

namespace belyi {

// Element of F_p, stored canonically in [0, p). The modulus travels with the
// value; combining elements of different fields throws std::logic_error.
class Fp {
 public:
  Fp(std::int64_t v, std::uint64_t p) : p_(p) {
    if (p < 2) throw std::logic_error("prime field modulus must be at least 2");
    auto m = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p));
    v_ = static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
  }

  Fp(const BigInteger& v, std::uint64_t p) : p_(p) {
    if (p < 2) throw std::logic_error("prime field modulus must be at least 2");
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    v_ = mpz_fdiv_ui(v.get_mpz_t(), p);
  }

  static Fp from_canonical(std::uint64_t v, std::uint64_t p) {
    if (v >= p) throw std::logic_error("value not reduced modulo p");
    Fp r(0, p);
    r.v_ = v;
    return r;
  }

  std::uint64_t value() const noexcept { return v_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Fp operator-() const { return from_canonical(v_ == 0 ? 0 : p_ - v_, p_); }

  Fp& operator+=(const Fp& o) {
    same_field(o);
    v_ = v_ >= p_ - o.v_ ? v_ - (p_ - o.v_) : v_ + o.v_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    same_field(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    same_field(o);
    v_ = mulmod(v_, o.v_, p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  Fp pow(std::uint64_t e) const { return from_canonical(powmod(v_, e, p_), p_); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    // Fermat; callers only ever build prime fields.
    return pow(p_ - 2);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    a.same_field(b);
    return a.v_ == b.v_;
  }
  friend bool operator<(const Fp& a, const Fp& b) {
    a.same_field(b);
    return a.v_ < b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

 private:
  void same_field(const Fp& o) const {
    if (p_ != o.p_) {
      throw std::logic_error("mixed-modulus arithmetic: F_" + std::to_string(p_) + " vs F_" +
                             std::to_string(o.p_));
    }
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

// What Poly<K> needs to know about its coefficient domain. Constants are made
// "like" an existing sample so prime-field values pick up the right modulus.
template <class K>
struct coefficient_traits;

template <>
struct coefficient_traits<BigInteger> {
  static constexpr bool is_field = false;
  static BigInteger from_int(const BigInteger& /*sample*/, long n) { return n; }
  static bool is_zero(const BigInteger& c) { return sgn(c) == 0; }
};

template <>
struct coefficient_traits<BigRational> {
  static constexpr bool is_field = true;
  static BigRational from_int(const BigRational& /*sample*/, long n) { return n; }
  static bool is_zero(const BigRational& c) { return sgn(c) == 0; }
};

template <>
struct coefficient_traits<Fp> {
  static constexpr bool is_field = true;
  static Fp from_int(const Fp& sample, long n) { return Fp(n, sample.modulus()); }
  static bool is_zero(const Fp& c) { return c.is_zero(); }
};

template <class K>
concept Field = coefficient_traits<K>::is_field;

}  // namespace belyi
