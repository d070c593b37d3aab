#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latsum/chain.hpp"
#include "latsum/errors.hpp"
#include "latsum/exact/bigrat.hpp"
#include "latsum/exact/poly.hpp"
#include "latsum/linalg.hpp"

namespace latsum {

/// A linear recurrence with polynomial coefficients in the index n,
///   sum_{i=0..r} c_i(n) u_{n+i} = 0,
/// for a sequence indexed from u_1. Coefficients are normalized: jointly
/// primitive over Z with the leading coefficient of c_r positive.
struct RecurrenceCandidate {
  std::vector<Poly> coeffs;  // c_0 .. c_r
  Index window_first = 1;    // equations n = window_first..window_last were fitted
  Index window_last = 0;

  std::size_t order() const { return coeffs.size() - 1; }

  /// Largest coefficient degree.
  Degree degree() const {
    Degree d;
    for (const auto& c : coeffs) d = std::max(d, c.degree());
    return d;
  }

  /// Degrees of c_r, c_{r-1}, ..., c_0 (used for tie-breaking).
  std::vector<Degree> degree_profile() const {
    std::vector<Degree> out;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out.push_back(it->degree());
    return out;
  }

  friend bool operator==(const RecurrenceCandidate& a, const RecurrenceCandidate& b) {
    return a.coeffs == b.coeffs;
  }
};

/// Scales the coefficient polynomials to the canonical representative of
/// their common ray: integer, jointly primitive, lead(c_r) > 0.
inline std::vector<Poly> normalize_recurrence(const std::vector<Poly>& coeffs) {
  if (coeffs.size() < 2) throw ArgumentError("a recurrence needs order >= 1");
  if (coeffs.back().is_zero()) throw ArgumentError("leading coefficient c_r must be nonzero");
  mpz_class l = 1;
  mpz_class g = 0;
  for (const auto& c : coeffs)
    for (const auto& a : c.coeffs()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.den().get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.num().get_mpz_t());
    }
  BigRat scale(l, g);
  if (coeffs.back().lead().sign() < 0) scale = -scale;
  std::vector<Poly> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.scaled(scale));
  return out;
}

inline RecurrenceCandidate make_candidate(const std::vector<Poly>& coeffs) {
  return RecurrenceCandidate{normalize_recurrence(coeffs), 1, 0};
}

struct GuessOptions {
  std::size_t max_order = 2;
  std::size_t max_degree = 2;
  std::size_t guard = 5;  // equations beyond the unknown count
};

/// Fewest terms guess() accepts for the given bounds.
inline std::size_t min_terms(const GuessOptions& opt) {
  return (opt.max_order + 1) * (opt.max_degree + 1) + opt.max_order + opt.guard;
}

/// Smallest n whose recurrence equation fails on seq, or nullopt.
inline std::optional<Index> verify(const RecurrenceCandidate& cand, std::span<const BigRat> seq) {
  const std::size_t r = cand.order();
  if (seq.size() < r + 1) throw ArgumentError("need at least order + 1 terms to verify");
  for (std::size_t k = 0; k + r < seq.size(); ++k) {
    const BigRat n(static_cast<Index>(k + 1));
    mpq_class acc = 0;
    for (std::size_t i = 0; i <= r; ++i)
      if (!seq[k + i].is_zero()) acc += cand.coeffs[i].eval(n).mpq() * seq[k + i].mpq();
    if (acc != 0) return static_cast<Index>(k + 1);
  }
  return std::nullopt;
}

/// Runs the recurrence forward from seed = u_1..u_r up to u_upto.
inline std::vector<BigRat> extend(const RecurrenceCandidate& cand, std::span<const BigRat> seed, Index upto) {
  const std::size_t r = cand.order();
  if (seed.size() != r)
    throw ArgumentError("seed must hold exactly " + std::to_string(r) + " terms, got " +
                        std::to_string(seed.size()));
  if (upto < static_cast<Index>(r)) throw ArgumentError("upto must be >= the recurrence order");
  std::vector<BigRat> out(seed.begin(), seed.end());
  out.reserve(static_cast<std::size_t>(upto));
  for (Index n = 1; static_cast<Index>(out.size()) < upto; ++n) {
    const BigRat N(n);
    const BigRat lead = cand.coeffs[r].eval(N);
    if (lead.is_zero()) throw SingularLeadingCoefficient(n);
    BigRat acc;
    for (std::size_t i = 0; i < r; ++i) acc += cand.coeffs[i].eval(N) * out[static_cast<std::size_t>(n - 1) + i];
    out.push_back(-acc / lead);
  }
  return out;
}

namespace detail {

// Columns are ordered (i, k) -> i * (degree + 1) + k, the coefficient of
// n^k in c_i; row n holds n^k u_{n+i}.
inline RatMatrix recurrence_system(std::span<const BigRat> seq, std::size_t order, std::size_t degree,
                                   std::size_t equations) {
  RatMatrix m;
  m.reserve(equations);
  for (std::size_t e = 0; e < equations; ++e) {
    const BigRat n(static_cast<Index>(e + 1));
    std::vector<BigRat> row;
    row.reserve((order + 1) * (degree + 1));
    for (std::size_t i = 0; i <= order; ++i) {
      BigRat term = seq[e + i];
      for (std::size_t k = 0; k <= degree; ++k) {
        row.push_back(term);
        term *= n;
      }
    }
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace detail

/// Searches (order, degree) pairs in lexicographic order for a recurrence
/// fitted by undetermined coefficients on the first unknowns + guard
/// equations, and returns the first one that also holds on every remaining
/// term. The all-zero sequence is refused (nullopt).
inline std::optional<RecurrenceCandidate> guess(std::span<const BigRat> seq, const GuessOptions& opt) {
  if (opt.max_order < 1) throw ArgumentError("max_order must be >= 1");
  if (opt.guard < 1) throw ArgumentError("guard must be >= 1");
  const std::size_t need = min_terms(opt);
  if (seq.size() < need) throw InsufficientTerms(seq.size(), need);
  if (std::all_of(seq.begin(), seq.end(), [](const BigRat& v) { return v.is_zero(); })) return std::nullopt;

  for (std::size_t r = 1; r <= opt.max_order; ++r) {
    for (std::size_t deg = 0; deg <= opt.max_degree; ++deg) {
      const std::size_t unknowns = (r + 1) * (deg + 1);
      const std::size_t equations = unknowns + opt.guard;
      auto basis = nullspace(detail::recurrence_system(seq, r, deg, equations), unknowns);
      std::vector<RecurrenceCandidate> found;
      for (const auto& v : basis) {
        std::vector<Poly> coeffs;
        for (std::size_t i = 0; i <= r; ++i) {
          std::vector<BigRat> c;
          for (std::size_t k = 0; k <= deg; ++k) c.emplace_back(v[i * (deg + 1) + k]);
          coeffs.emplace_back(std::move(c));
        }
        if (coeffs.back().is_zero()) continue;
        RecurrenceCandidate cand = make_candidate(coeffs);
        cand.window_first = 1;
        cand.window_last = static_cast<Index>(equations);
        found.push_back(std::move(cand));
      }
      std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.degree_profile() < b.degree_profile();
      });
      for (auto& cand : found)
        if (!verify(cand, seq)) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace latsum
