// A hand-built weight system: f1 = 1, f2 = 1 and g1 = 0, g2 = 1 make W count
// chains and V count steps, so b_p = 2^(p-1) and d_p = (p-1) 2^(p-2).

#include <iostream>

#include "latsum/latsum.hpp"

int main() {
  using namespace latsum;
  const FixedX mode{BigRat(0)};
  WeightSystem<FixedX> counting("counting", mode,
                                {
                                    [](Index) { return BigRat(1); },
                                    [](Index, Index) { return BigRat(1); },
                                    [](Index) { return BigRat(0); },
                                    [](Index, Index) { return BigRat(1); },
                                });

  const auto table = compute_table(counting, 10);
  for (Index p = 1; p <= table.pmax; ++p)
    std::cout << "p=" << p << "  b=" << table.value(Quantity::B, p) << "  d=" << table.value(Quantity::D, p)
              << "  brute d=" << brute_quantity(counting, p, Quantity::D) << '\n';
}
