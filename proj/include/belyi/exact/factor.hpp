#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "belyi/exact/integers.hpp"

namespace belyi {

// Limits for the factorizations behind rational-root enumeration.
struct FactorLimits {
  // Trial division runs over all candidates up to this bound.
  std::uint64_t trial_bound = 1'000'000;
  // Leftover cofactors up to this size are split by Pollard rho.
  std::uint64_t rho_limit = 1'000'000'000'000ULL;

  // Honors BELYI_FACTOR_BOUND for the trial-division bound.
  static FactorLimits from_environment() {
    FactorLimits limits;
    if (const char* env = std::getenv("BELYI_FACTOR_BOUND"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end == nullptr || *end != '\0' || v < 2) {
        throw InvalidInput(std::string("BELYI_FACTOR_BOUND must be an integer >= 2, got '") + env +
                           "'");
      }
      limits.trial_bound = v;
    }
    return limits;
  }
};

namespace detail {

inline std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2;
    std::uint64_t y = 2;
    std::uint64_t d = 1;
    auto step = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

inline void split_small(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  split_small(d, out);
  split_small(n / d, out);
}

}  // namespace detail

// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
// Throws IncompleteFactorization rather than return an unproven result.
inline std::vector<std::pair<BigInteger, unsigned>> factorize(const BigInteger& n,
                                                              const FactorLimits& limits = {}) {
  if (n == 0) throw InvalidInput("cannot factor zero");
  BigInteger m = abs(n);
  std::map<BigInteger, unsigned> found;

  auto strip = [&](unsigned long q) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), q) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
      ++found[BigInteger(q)];
    }
  };
  strip(2);
  strip(3);
  // Invariant: m has no prime factor below q.
  bool m_is_prime = false;
  for (std::uint64_t q = 5; m > 1; q += 6) {
    if (q > limits.trial_bound) break;
    const BigInteger qq = BigInteger(static_cast<unsigned long>(q)) * static_cast<unsigned long>(q);
    if (qq > m) {
      m_is_prime = true;
      break;
    }
    strip(q);
    if (q + 2 <= limits.trial_bound) strip(q + 2);
  }

  if (m > 1) {
    const auto b = static_cast<unsigned long>(limits.trial_bound + 1);
    if (m_is_prime || m < BigInteger(b) * b) {
      ++found[m];
    } else if (m <= BigInteger(static_cast<unsigned long>(limits.rho_limit))) {
      std::map<std::uint64_t, unsigned> small;
      detail::split_small(m.get_ui(), small);
      for (const auto& [pr, e] : small) found[BigInteger(static_cast<unsigned long>(pr))] += e;
    } else {
      throw IncompleteFactorization("incomplete factorization: cofactor " + m.get_str() +
                                    " exceeds the trial-division and rho limits");
    }
  }
  return {found.begin(), found.end()};
}

// All positive divisors of |n|, ascending.
inline std::vector<BigInteger> divisors(const BigInteger& n, const FactorLimits& limits = {}) {
  std::vector<BigInteger> out{BigInteger(1)};
  for (const auto& [prime, e] : factorize(n, limits)) {
    const std::size_t base = out.size();
    BigInteger pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= prime;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace belyi
