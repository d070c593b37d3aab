#pragma once

#include <array>
#include <string>
#include <vector>

#include "latsum/closedform.hpp"
#include "latsum/dp.hpp"
#include "latsum/oracle.hpp"

namespace latsum {

struct Mismatch {
  Index p;
  Quantity quantity;
  std::string route;  // "weights" (oracle through f1..g2) or "direct" (N and G formulas)
  AnyScalar expected;
  AnyScalar got;       // the DP value
};

struct CrosscheckReport {
  Index pmax = 0;
  Index compared = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

inline constexpr std::array<Quantity, 4> kAllQuantities{Quantity::A, Quantity::B, Quantity::C, Quantity::D};

/// Compares the quadratic DP against brute enumeration for A, B, C, D at
/// every p <= pmax. With `direct` set (BCMV only) the enumeration is also
/// run on the closed N and G formulas, which share nothing with f1..g2, so
/// an error in a weight function cannot cancel out. In fixed-x mode the
/// direct route is evaluated symbolically and then substituted, which
/// removes the 0/0 the raw formulas have at an integer x0.
template <ScalarMode M>
CrosscheckReport crosscheck(const WeightSystem<M>& ws, Index pmax, bool direct, OracleLimits limits = {}) {
  if (pmax < 1) throw ArgumentError("pmax must be >= 1");
  if (pmax > limits.max_p) throw LimitError(pmax, limits.max_p);
  CrosscheckReport out;
  out.pmax = pmax;
  const SumTable<M> table = compute_table(ws, pmax);
  for (Index p = 1; p <= pmax; ++p) {
    for (Quantity q : kAllQuantities) {
      const scalar_t<M>& dp_value = table.value(q, p);
      scalar_t<M> brute = brute_quantity(ws, p, q, limits);
      ++out.compared;
      if (!(brute == dp_value)) out.mismatches.push_back({p, q, "weights", brute, dp_value});
      if (!direct) continue;
      scalar_t<M> via_formulas;
      if constexpr (std::is_same_v<M, FixedX>) {
        via_formulas = bcmv_direct_quantity(SymbolicX{}, p, q, limits).eval(ws.mode().x0);
      } else {
        via_formulas = bcmv_direct_quantity(ws.mode(), p, q, limits);
      }
      ++out.compared;
      if (!(via_formulas == dp_value)) out.mismatches.push_back({p, q, "direct", via_formulas, dp_value});
    }
  }
  return out;
}

}  // namespace latsum
