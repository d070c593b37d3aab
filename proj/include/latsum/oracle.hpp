#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latsum/chain.hpp"
#include "latsum/errors.hpp"
#include "latsum/weights.hpp"

namespace latsum {

/// The four lattice sums. B and D fix the chain maximum at p; A and C range
/// over all nonempty chains inside {1..p-1}.
enum class Quantity { A, B, C, D };

inline std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::A: return "A";
    case Quantity::B: return "B";
    case Quantity::C: return "C";
    case Quantity::D: return "D";
  }
  return "?";
}

inline Quantity parse_quantity(std::string_view s) {
  if (s == "A" || s == "a") return Quantity::A;
  if (s == "B" || s == "b") return Quantity::B;
  if (s == "C" || s == "c") return Quantity::C;
  if (s == "D" || s == "d") return Quantity::D;
  throw ParseError("unknown quantity '" + std::string(s) + "' (expected A, B, C or D)");
}

inline bool is_max_fixed(Quantity q) { return q == Quantity::B || q == Quantity::D; }
inline bool has_value_factor(Quantity q) { return q == Quantity::C || q == Quantity::D; }

/// W([j_1]) = f1(j_1); W([j_1..j_q]) = W([j_1..j_{q-1}]) * f2(j_{q-1}, j_q).
template <ScalarMode M>
scalar_t<M> chain_weight_W(const WeightSystem<M>& ws, const Chain& chain) {
  scalar_t<M> w = ws.f1(chain.front());
  for (std::size_t k = 1; k < chain.size(); ++k) w = w * ws.f2(chain[k - 1], chain[k]);
  return w;
}

/// V([j_1]) = g1(j_1); V([j_1..j_q]) = V([j_1..j_{q-1}]) + g2(j_{q-1}, j_q).
template <ScalarMode M>
scalar_t<M> chain_value_V(const WeightSystem<M>& ws, const Chain& chain) {
  scalar_t<M> v = ws.g1(chain.front());
  for (std::size_t k = 1; k < chain.size(); ++k) v = v + ws.g2(chain[k - 1], chain[k]);
  return v;
}

struct OracleLimits {
  Index max_p = 18;
};

/// Visits every chain summed by `which` at index p, in subset-rank order:
/// bit k of a binary counter over {1..p-1} selects k+1, and B/D append p.
/// Returns the number of chains visited.
template <class Visitor>
std::uint64_t for_each_chain(Index p, Quantity which, Visitor&& visit) {
  if (p < 1) throw ArgumentError("p must be >= 1");
  const auto width = static_cast<unsigned>(p - 1);
  if (width >= 63) throw ArgumentError("p too large to enumerate");
  const std::uint64_t count = std::uint64_t{1} << width;
  const bool fixed_max = is_max_fixed(which);
  std::uint64_t visited = 0;
  std::vector<Index> entries;
  for (std::uint64_t mask = fixed_max ? 0 : 1; mask < count; ++mask) {
    entries.clear();
    for (unsigned k = 0; k < width; ++k)
      if (mask >> k & 1u) entries.push_back(static_cast<Index>(k) + 1);
    if (fixed_max) entries.push_back(p);
    visit(Chain(entries));
    ++visited;
  }
  return visited;
}

/// Sums `which` at index p by enumerating every chain: 2^(p-1) chains for
/// B and D, 2^(p-1) - 1 for A and C.
template <ScalarMode M>
scalar_t<M> brute_quantity(const WeightSystem<M>& ws, Index p, Quantity which, OracleLimits limits = {}) {
  if (p < 1) throw ArgumentError("p must be >= 1");
  if (p > limits.max_p) throw LimitError(p, limits.max_p);
  scalar_t<M> total;
  for_each_chain(p, which, [&](const Chain& c) {
    scalar_t<M> w = chain_weight_W(ws, c);
    if (has_value_factor(which)) w = w * chain_value_V(ws, c);
    total = total + w;
  });
  return total;
}

/// Same sums through the BCMV closed formulas N and G instead of any weight
/// system; independent of f1, f2, g1, g2.
template <ScalarMode M>
scalar_t<M> bcmv_direct_quantity(const M& mode, Index p, Quantity which, OracleLimits limits = {}) {
  if (p < 1) throw ArgumentError("p must be >= 1");
  if (p > limits.max_p) throw LimitError(p, limits.max_p);
  scalar_t<M> total;
  for_each_chain(p, which, [&](const Chain& c) {
    scalar_t<M> w = bcmv_product_N(mode, c);
    if (has_value_factor(which)) w = w * bcmv_direct_G(mode, c);
    total = total + w;
  });
  return total;
}

}  // namespace latsum
