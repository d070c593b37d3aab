#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latsum/oracle.hpp"
#include "latsum/weights.hpp"

namespace latsum {

/// b_p for p = 1..pmax (stored at index p-1) in O(pmax^2) weight evaluations:
///   b_p = f1(p) + sum_{p'<p} f2(p', p) b_{p'}.
/// The f1(p) term accounts for the singleton chain [p].
template <ScalarMode M>
std::vector<scalar_t<M>> dp_b(const WeightSystem<M>& ws, Index pmax) {
  if (pmax < 1) throw ArgumentError("pmax must be >= 1");
  std::vector<scalar_t<M>> b;
  b.reserve(static_cast<std::size_t>(pmax));
  for (Index p = 1; p <= pmax; ++p) {
    Index at = 0;
    try {
      SumAccumulator<scalar_t<M>> acc;
      acc.add(ws.f1(p));
      for (Index q = 1; q < p; ++q) {
        at = q;
        acc.add(ws.f2(q, p) * b[static_cast<std::size_t>(q - 1)]);
      }
      b.push_back(acc.value());
    } catch (const PoleError& e) {
      throw e.with_context(at ? "b_p at (p', p) = (" + std::to_string(at) + ", " + std::to_string(p) + ")"
                              : "b_p at p = " + std::to_string(p));
    }
  }
  return b;
}

/// d_p for p = 1..pmax given b from dp_b in the same mode:
///   d_p = f1(p) g1(p) + sum_{p'<p} f2(p', p) (d_{p'} + g2(p', p) b_{p'}),
/// since (W V)(c) = f2 (W V)(c') + f2 g2 W(c') when c' is c without its maximum.
template <ScalarMode M>
std::vector<scalar_t<M>> dp_d(const WeightSystem<M>& ws, Index pmax, std::span<const scalar_t<M>> b) {
  if (pmax < 1) throw ArgumentError("pmax must be >= 1");
  if (b.size() < static_cast<std::size_t>(pmax)) throw ArgumentError("b is shorter than pmax");
  std::vector<scalar_t<M>> d;
  d.reserve(static_cast<std::size_t>(pmax));
  for (Index p = 1; p <= pmax; ++p) {
    Index at = 0;
    try {
      SumAccumulator<scalar_t<M>> acc;
      acc.add(ws.f1(p) * ws.g1(p));
      for (Index q = 1; q < p; ++q) {
        at = q;
        const auto k = static_cast<std::size_t>(q - 1);
        acc.add(ws.f2(q, p) * (d[k] + ws.g2(q, p) * b[k]));
      }
      d.push_back(acc.value());
    } catch (const PoleError& e) {
      throw e.with_context(at ? "d_p at (p', p) = (" + std::to_string(at) + ", " + std::to_string(p) + ")"
                              : "d_p at p = " + std::to_string(p));
    }
  }
  return d;
}

/// out_1 = 0, out_p = sum_{p'<p} seq_{p'}.
template <ExactScalar S>
std::vector<S> dp_prefix(std::span<const S> seq) {
  std::vector<S> out;
  out.reserve(seq.size());
  S acc;
  for (const S& s : seq) {
    out.push_back(acc);
    acc = acc + s;
  }
  return out;
}

/// b, d, a, c for p = 1..pmax, all in one scalar mode.
template <ScalarMode M>
struct SumTable {
  M mode;
  Index pmax = 0;
  std::vector<scalar_t<M>> b, d, a, c;

  const scalar_t<M>& value(Quantity q, Index p) const {
    if (p < 1 || p > pmax) throw ArgumentError("p out of table range");
    if (has_value_factor(q) && d.empty()) throw ArgumentError("table was computed without d and c");
    const auto k = static_cast<std::size_t>(p - 1);
    switch (q) {
      case Quantity::A: return a[k];
      case Quantity::B: return b[k];
      case Quantity::C: return c[k];
      case Quantity::D: return d[k];
    }
    throw ArgumentError("bad quantity");
  }
};

struct TableOptions {
  bool with_values = true;  // compute d and c as well as b and a
};

template <ScalarMode M>
SumTable<M> compute_table(const WeightSystem<M>& ws, Index pmax, TableOptions opt = {}) {
  SumTable<M> t{ws.mode(), pmax, {}, {}, {}, {}};
  t.b = dp_b(ws, pmax);
  t.a = dp_prefix<scalar_t<M>>(t.b);
  if (opt.with_values) {
    t.d = dp_d<M>(ws, pmax, t.b);
    t.c = dp_prefix<scalar_t<M>>(t.d);
  }
  return t;
}

}  // namespace latsum
