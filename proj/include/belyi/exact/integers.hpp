#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "belyi/errors.hpp"

namespace belyi {

using BigInteger = mpz_class;
using BigRational = mpq_class;

// Binomial coefficient, zero outside 0 <= k <= n.
inline BigInteger binomial(long n, long k) {
  BigInteger r = 0;
  if (n < 0 || k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline BigInteger factorial(unsigned long n) {
  BigInteger r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInteger& n) { return n.get_str(); }

inline std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0) throw InvalidInput("not a rational number: " + text);
  if (q.get_den() == 0) throw InvalidInput("zero denominator: " + text);
  q.canonicalize();
  return q;
}

// p-adic valuation of a nonzero integer.
inline unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

// Deterministic Miller-Rabin; these witnesses cover all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// A rational prime, checked at construction.
class Prime {
 public:
  explicit Prime(std::uint64_t p) : p_(p) {
    if (p > (std::numeric_limits<std::uint64_t>::max() >> 2U) || !is_prime(p)) {
      throw InvalidInput(std::to_string(p) + " is not prime");
    }
  }

  std::uint64_t value() const noexcept { return p_; }
  operator std::uint64_t() const noexcept { return p_; }

  friend bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }
  friend auto operator<=>(Prime a, Prime b) noexcept { return a.p_ <=> b.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace belyi
