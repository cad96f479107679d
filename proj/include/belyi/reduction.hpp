#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "belyi/construction.hpp"
#include "belyi/render.hpp"

namespace belyi {

enum class ReductionClass { GoodSeparable, GoodInseparable, Bad };

inline const char* to_string(ReductionClass c) {
  switch (c) {
    case ReductionClass::GoodSeparable: return "good separable";
    case ReductionClass::GoodInseparable: return "good inseparable";
    case ReductionClass::Bad: return "bad";
  }
  return "?";
}

// Base points removed when reducing: g = gcd of the reduced parts,
// delta = deg g, eps1 = ord_0 g, eps2 = ord_1 g.
struct BaseDivisor {
  std::size_t eps1 = 0;
  std::size_t eps2 = 0;
  std::size_t delta = 0;

  friend bool operator==(const BaseDivisor&, const BaseDivisor&) = default;
};

struct ReductionReport {
  std::uint64_t p = 0;
  std::size_t d = 0;
  FpMap fbar;
  std::size_t deg_bar = 0;
  BaseDivisor base;
  bool separable = false;
  ReductionClass classification = ReductionClass::Bad;
  bool is_monomial = false;
};

inline bool is_separable(const FpMap& psi) {
  return !wronskian(psi.numerator(), psi.denominator()).is_zero();
}

// psi == x^d as functions.
inline bool is_monomial_map(const FpMap& psi, std::size_t d) {
  const Fp one(1, psi.denominator().lead().modulus());
  return psi.numerator() == psi.denominator() * FpPoly::monomial(one, d);
}

// Reduction of a primitive coprime integer model.
inline ReductionReport reduce_mod_p(const ZMap& model, Prime p) {
  const std::uint64_t q = p.value();
  const FpPoly n = reduce_mod(model.numerator(), q);
  const FpPoly dn = reduce_mod(model.denominator(), q);
  // Primitive parts never vanish entirely mod p.
  if (n.is_zero() || dn.is_zero()) throw InvalidInput("model is not primitive");

  const FpPoly g = gcd(n, dn);
  // Canonical form: monic denominator, so x^d is literally x^d / 1.
  ReductionReport r{q, model.degree(), with_monic_denominator(FpMap(exact_quotient(n, g), exact_quotient(dn, g))),
                    0, {}};
  r.base.delta = g.deg();
  r.base.eps1 = g.low_order();
  r.base.eps2 = ord_at(g, Fp(1, q));
  r.deg_bar = r.fbar.degree();
  r.separable = is_separable(r.fbar);
  if (r.deg_bar != r.d) {
    r.classification = ReductionClass::Bad;
  } else {
    r.classification = r.separable ? ReductionClass::GoodSeparable : ReductionClass::GoodInseparable;
  }
  r.is_monomial = is_monomial_map(r.fbar, r.d);
  return r;
}

// Reduction of a normalized map. The structural facts every such reduction
// satisfies are checked, and a violation is reported as a bug.
inline ReductionReport reduce_mod_p(const BelyiMap& f, Prime p) {
  if (f.scale != 1) {
    throw InternalInconsistency("normalized map with scale " + to_string(f.scale) + " != 1");
  }
  ReductionReport r = reduce_mod_p(f.integer_model, p);
  const std::uint64_t q = p.value();
  auto fail = [&](const std::string& what) {
    throw InternalInconsistency("reduction of " + f.ctype.to_string() + " mod " + std::to_string(q) +
                                ": " + what);
  };
  if (r.fbar.is_constant()) fail("reduced map is constant");
  if (eval_map(r.fbar, Fp(0, q)) != ProjPoint<Fp>(Fp(0, q))) fail("0 is not fixed");
  if (!eval_map(r.fbar, ProjPoint<Fp>::infinity()).is_infinity()) fail("infinity is not fixed");
  const auto at_one = eval_map(r.fbar, Fp(1, q));
  if (at_one.is_infinity() || at_one.value().is_zero()) fail("1 maps to 0 or infinity");
  if (r.is_monomial && r.classification != ReductionClass::GoodInseparable) {
    fail("monomial reduction that is not good inseparable");
  }
  return r;
}

struct FrobeniusDecomposition {
  unsigned n = 0;
  FpMap separable_part;
};

// psi = psi' o x^(p^n) with psi' separable.
inline FrobeniusDecomposition frobenius_decompose(const FpMap& psi) {
  if (psi.is_constant()) throw InvalidInput("frobenius_decompose: constant map");
  const std::uint64_t p = psi.denominator().lead().modulus();
  std::uint64_t g = 0;
  for (const FpPoly* part : {&psi.numerator(), &psi.denominator()}) {
    for (std::size_t i = 0; i < part->size(); ++i) {
      if (!(*part)[i].is_zero()) g = std::gcd(g, static_cast<std::uint64_t>(i));
    }
  }
  const unsigned n = valuation(g, p);
  const std::uint64_t step = ipow(p, n);
  auto squeeze = [&](const FpPoly& a) {
    if (a.is_zero()) return a;
    std::vector<Fp> v;
    for (std::size_t i = 0; i < a.size(); i += step) v.push_back(a[i]);
    return FpPoly(std::move(v));
  };
  return {n, FpMap(squeeze(psi.numerator()), squeeze(psi.denominator()))};
}

struct GeneralizedRamification {
  std::uint64_t e1 = 0;
  std::uint64_t e2 = 0;
  std::uint64_t e3 = 0;
  unsigned n = 0;

  friend bool operator==(const GeneralizedRamification&, const GeneralizedRamification&) = default;
};

// p^n times the ramification indices of the separable part at 0, 1, inf.
// The separable part must send 0 to 0 and inf to inf, send 1 to a finite
// nonzero value, and ramify nowhere else; the index at 1 is taken over its
// image.
inline GeneralizedRamification generalized_ramification(const FpMap& psi) {
  const FrobeniusDecomposition fd = frobenius_decompose(psi);
  const FpPoly& a = fd.separable_part.numerator();
  const FpPoly& b = fd.separable_part.denominator();
  const std::uint64_t p = b.lead().modulus();
  const Fp one(1, p);
  if (a.is_zero() || a.low_order() == 0) throw NotBelyiNormalized("not Belyi-normalized: 0 is not fixed");
  if (a.deg() <= b.deg()) throw NotBelyiNormalized("not Belyi-normalized: infinity is not fixed");
  const Fp a1 = a(one);
  const Fp b1 = b(one);
  if (a1.is_zero() || b1.is_zero()) throw NotBelyiNormalized("not Belyi-normalized: 1 maps to 0 or infinity");

  FpPoly w = wronskian(a, b);
  w = w.unshifted(w.low_order());
  while (!w.is_constant() && w(one).is_zero()) w = deflate(w, one);
  if (!w.is_constant()) {
    throw NotBelyiNormalized("not Belyi-normalized: ramification outside {0, 1, infinity}");
  }

  const std::uint64_t scale = ipow(p, fd.n);
  const Fp mu = a1 / b1;
  GeneralizedRamification out;
  out.n = fd.n;
  out.e1 = scale * a.low_order();
  out.e2 = scale * ord_at(a - b * mu, one);
  out.e3 = scale * (a.deg() - b.deg());
  return out;
}

// Some (eps1, eps2, delta) with eps1 + eps2 <= delta <= d - deg(psi) meeting
// the three index inequalities, or nothing. The box is searched exhaustively.
inline std::optional<BaseDivisor> s_cp_witness(const FpMap& psi, const CombinatorialType& t) {
  if (psi.is_constant()) throw InvalidInput("S_{C,p} membership needs a nonconstant map");
  const auto d = static_cast<long>(t.degree());
  const auto dbar = static_cast<long>(psi.degree());
  if (dbar > d) return std::nullopt;
  GeneralizedRamification gr;
  try {
    gr = generalized_ramification(psi);
  } catch (const NotBelyiNormalized&) {
    return std::nullopt;
  }
  const auto g1 = static_cast<long>(gr.e1);
  const auto g2 = static_cast<long>(gr.e2);
  const auto g3 = static_cast<long>(gr.e3);
  for (long delta = 0; delta <= d - dbar; ++delta) {
    if (g3 < t.e3() - (d - dbar - delta)) continue;
    for (long eps1 = 0; eps1 <= delta; ++eps1) {
      if (g1 < t.e1() - eps1) continue;
      for (long eps2 = 0; eps1 + eps2 <= delta; ++eps2) {
        if (g2 >= t.e2() - eps2) {
          return BaseDivisor{static_cast<std::size_t>(eps1), static_cast<std::size_t>(eps2),
                             static_cast<std::size_t>(delta)};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool in_s_cp(const FpMap& psi, const CombinatorialType& t) {
  return s_cp_witness(psi, t).has_value();
}

// Monomial reduction x^d happens exactly when p | d and e2 <= p^(v_p(d)).
inline bool predict_monomial(const CombinatorialType& t, Prime p) {
  const auto d = static_cast<std::uint64_t>(t.degree());
  if (d % p.value() != 0) return false;
  return static_cast<std::uint64_t>(t.e2()) <= ipow(p.value(), valuation(d, p.value()));
}

struct CensusRow {
  CombinatorialType ctype;
  std::uint64_t p;
  bool predicted_monomial = false;
  std::optional<ReductionReport> report;  // empty when skipped
  std::string skipped_reason;
};

struct CensusJob {
  CombinatorialType ctype;
  std::uint64_t p;
};

inline CensusRow census_row(const CensusJob& job) {
  CensusRow row{job.ctype, job.p, predict_monomial(job.ctype, Prime(job.p)), std::nullopt, {}};
  try {
    row.report = reduce_mod_p(build_exact(job.ctype), Prime(job.p));
  } catch (const UnsupportedType& e) {
    row.skipped_reason = e.what();
  }
  return row;
}

// Rows in job order, computed on up to `threads` workers (0 = hardware).
inline std::vector<CensusRow> census(const std::vector<CensusJob>& jobs, unsigned threads = 0) {
  for (const auto& j : jobs) (void)Prime(j.p);
  std::vector<std::optional<CensusRow>> slots(jobs.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < jobs.size(); i = next++) slots[i] = census_row(jobs[i]);
    } catch (...) {
      errors[id] = std::current_exception();
      next = jobs.size();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<CensusRow> rows;
  rows.reserve(jobs.size());
  for (auto& s : slots) rows.push_back(std::move(*s));
  return rows;
}

// Type-major: every prime for the first type, then the next type.
inline std::vector<CensusRow> census(const std::vector<CombinatorialType>& types,
                                     const std::vector<std::uint64_t>& primes, unsigned threads = 0) {
  std::vector<CensusJob> jobs;
  for (const auto& t : types) {
    for (auto p : primes) jobs.push_back({t, p});
  }
  return census(jobs, threads);
}

// The d = 15 census laid out prime-major: for p = 2, 3, 5, 7 in turn, the
// types (15; 16-e2, e2, 15) for e2 = 2..14.
inline std::vector<CensusJob> table_15_jobs() {
  std::vector<CensusJob> jobs;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    for (int e2 = 2; e2 <= 14; ++e2) jobs.push_back({CombinatorialType::validate(15, 16 - e2, e2, 15), p});
  }
  return jobs;
}

}  // namespace belyi
