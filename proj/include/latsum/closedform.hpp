#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>
#include <string>
#include <string_view>

#include "latsum/dp.hpp"
#include "latsum/exact/ratfunc.hpp"
#include "latsum/weights.hpp"

namespace latsum {

/// B_p(x) = 12 p^2 (p - x) / (x (x + 1)(x - 1)).
inline RatFunc closed_B(Index p) {
  if (p < 1) throw ArgumentError("closed_B requires p >= 1");
  const BigRat P(p);
  Poly num({BigRat(12) * P * P * P, BigRat(-12) * P * P});
  Poly den({BigRat(0), BigRat(-1), BigRat(0), BigRat(1)});  // x^3 - x
  return RatFunc::normalize(std::move(num), std::move(den));
}

/// A_p(x) = p (p - 1)(3p^2 - 4xp - 3p + 2x) / (x (x - 1)(x + 1)).
inline RatFunc closed_A(Index p) {
  if (p < 1) throw ArgumentError("closed_A requires p >= 1");
  const BigRat P(p);
  const BigRat scale = P * (P - BigRat(1));
  Poly num({scale * (BigRat(3) * P * P - BigRat(3) * P), scale * (BigRat(-4) * P + BigRat(2))});
  Poly den({BigRat(0), BigRat(-1), BigRat(0), BigRat(1)});
  return RatFunc::normalize(std::move(num), std::move(den));
}

/// Name tags of the checks that produce a ConjectureReport.
enum class CheckName { conj3, conj4, closedB, closedA, rec5 };

inline std::string_view to_string(CheckName n) {
  switch (n) {
    case CheckName::conj3: return "conj3";
    case CheckName::conj4: return "conj4";
    case CheckName::closedB: return "closedB";
    case CheckName::closedA: return "closedA";
    case CheckName::rec5: return "rec5";
  }
  return "?";
}

/// Exact scalar in whichever mode a check produced it.
using AnyScalar = std::variant<BigRat, RatFunc>;

struct Failure {
  Index p;
  AnyScalar expected;
  AnyScalar got;
};

struct ConjectureReport {
  CheckName name;
  Index pmax = 0;
  Index checked = 0;          // number of p values examined
  Index failures = 0;         // > 1 only with continue_on_error
  std::optional<Failure> first_fail;  // smallest violating p
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return !first_fail.has_value(); }
};

struct ScanOptions {
  bool continue_on_error = false;
  /// Called after each p with (p, pmax); used for progress reporting.
  std::function<void(Index, Index)> progress;
};

namespace detail {

class ScanRecorder {
 public:
  ScanRecorder(CheckName name, Index pmax, const ScanOptions& opt)
      : opt_(opt), start_(std::chrono::steady_clock::now()) {
    report_.name = name;
    report_.pmax = pmax;
  }

  /// Returns false when the scan should stop.
  bool record(Index p, const AnyScalar& expected, const AnyScalar& got) {
    ++report_.checked;
    if (opt_.progress) opt_.progress(p, report_.pmax);
    if (expected == got) return true;
    ++report_.failures;
    if (!report_.first_fail) report_.first_fail = Failure{p, expected, got};
    return opt_.continue_on_error;
  }

  ConjectureReport finish() {
    report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    return std::move(report_);
  }

 private:
  const ScanOptions& opt_;
  std::chrono::steady_clock::time_point start_;
  ConjectureReport report_;
};

}  // namespace detail

/// Substitutes a candidate closed form for B_p into
///   B_p = -12 p (x - p)/(x^3 - x + p - p^3) * (p + sum_{p'<p} (p - p')/(x - p') B_{p'}),
/// B_0 = 0, for each p <= pmax with x symbolic.
inline ConjectureReport check_recurrence5(Index pmax, const std::function<RatFunc(Index)>& closed = closed_B,
                                          const ScanOptions& opt = {}) {
  if (pmax < 1) throw ArgumentError("pmax must be >= 1");
  detail::ScanRecorder rec(CheckName::rec5, pmax, opt);
  const RatFunc x = RatFunc::x();
  std::vector<RatFunc> values;
  for (Index p = 1; p <= pmax; ++p) values.push_back(closed(p));
  for (Index p = 1; p <= pmax; ++p) {
    const RatFunc P{BigRat(p)};
    RatFunc inner = P;
    for (Index q = 1; q < p; ++q) {
      const RatFunc Q{BigRat(q)};
      inner += (P - Q) / (x - Q) * values[static_cast<std::size_t>(q - 1)];
    }
    RatFunc rhs = RatFunc(BigRat(-12)) * P * (x - P) / (x * x * x - x + P - P * P * P) * inner;
    if (!rec.record(p, rhs, values[static_cast<std::size_t>(p - 1)])) break;
  }
  return rec.finish();
}

/// dp_b in symbolic mode against closed_B for p = 1..pmax.
inline ConjectureReport verify_closed_b(Index pmax, Form form = Form::reduced, const ScanOptions& opt = {}) {
  if (pmax < 1) throw ArgumentError("pmax must be >= 1");
  detail::ScanRecorder rec(CheckName::closedB, pmax, opt);
  auto b = dp_b(make_bcmv(SymbolicX{}, form), pmax);
  for (Index p = 1; p <= pmax; ++p)
    if (!rec.record(p, closed_B(p), b[static_cast<std::size_t>(p - 1)])) break;
  return rec.finish();
}

/// sum_{p'<p} closed_B(p') against closed_A(p) for p = 1..pmax.
inline ConjectureReport verify_closed_a(Index pmax, const ScanOptions& opt = {}) {
  if (pmax < 1) throw ArgumentError("pmax must be >= 1");
  detail::ScanRecorder rec(CheckName::closedA, pmax, opt);
  RatFunc running;
  for (Index p = 1; p <= pmax; ++p) {
    if (!rec.record(p, closed_A(p), running)) break;
    running += closed_B(p);
  }
  return rec.finish();
}

/// A_p(p) = -p for p = 2..pmax. Each p runs the fixed-x DP at x0 = p on the
/// reduced weights (the raw ones have a removable 0/0 at j = p); closed_A(p)
/// evaluated at p is cross-checked too.
inline ConjectureReport verify_conj3(Index pmax, const ScanOptions& opt = {}) {
  if (pmax < 2) throw ArgumentError("conjecture scans start at p = 2; pmax must be >= 2");
  detail::ScanRecorder rec(CheckName::conj3, pmax, opt);
  for (Index p = 2; p <= pmax; ++p) {
    const BigRat expected = -BigRat(p);
    auto ws = make_bcmv(FixedX{BigRat(p)}, Form::reduced, /*memoize=*/false);
    auto table = compute_table(ws, p, {.with_values = false});
    BigRat got = table.value(Quantity::A, p);
    if (got == expected) got = closed_A(p).eval(BigRat(p));
    if (!rec.record(p, expected, got)) break;
  }
  return rec.finish();
}

/// C_p(p) = p (p + 1)^2 for p = 2..pmax, each p by its own fixed-x DP at
/// x0 = p: b, then d, then the prefix sum. Every p rebuilds its table from
/// p = 1 because b_p and d_p depend on all predecessors at that x0.
inline ConjectureReport verify_conj4(Index pmax, const ScanOptions& opt = {}) {
  if (pmax < 2) throw ArgumentError("conjecture scans start at p = 2; pmax must be >= 2");
  detail::ScanRecorder rec(CheckName::conj4, pmax, opt);
  for (Index p = 2; p <= pmax; ++p) {
    const BigRat expected = BigRat(p) * BigRat(p + 1) * BigRat(p + 1);
    auto table = compute_table(make_bcmv(FixedX{BigRat(p)}, Form::reduced), p);
    if (!rec.record(p, expected, table.value(Quantity::C, p))) break;
  }
  return rec.finish();
}

/// Symbolic route: one symbolic table up to pmax, then A_p and C_p evaluated
/// at x = p. Used to cross-check the fixed-x scans on small ranges.
inline std::pair<ConjectureReport, ConjectureReport> verify_conj34_symbolic(Index pmax,
                                                                             const ScanOptions& opt = {}) {
  if (pmax < 2) throw ArgumentError("conjecture scans start at p = 2; pmax must be >= 2");
  auto table = compute_table(make_bcmv(SymbolicX{}), pmax);
  detail::ScanRecorder r3(CheckName::conj3, pmax, opt);
  detail::ScanRecorder r4(CheckName::conj4, pmax, opt);
  bool go3 = true, go4 = true;
  for (Index p = 2; p <= pmax; ++p) {
    const BigRat P(p);
    if (go3) go3 = r3.record(p, -P, table.value(Quantity::A, p).eval(P));
    if (go4) go4 = r4.record(p, P * BigRat(p + 1) * BigRat(p + 1), table.value(Quantity::C, p).eval(P));
  }
  return {r3.finish(), r4.finish()};
}

}  // namespace latsum
