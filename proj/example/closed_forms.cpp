// Symbolic b_p next to the closed form, then A_p(p) and C_p(p) at x = p.

#include <iostream>

#include "latsum/latsum.hpp"

int main() {
  using namespace latsum;
  const auto table = compute_table(make_bcmv(SymbolicX{}), 8);
  for (Index p = 1; p <= table.pmax; ++p) {
    std::cout << "B_" << p << "(x) = " << table.value(Quantity::B, p).pretty()
              << (table.value(Quantity::B, p) == closed_B(p) ? "   [closed form]" : "   [MISMATCH]") << '\n';
  }
  for (Index p = 2; p <= 12; ++p) {
    const auto at_p = compute_table(make_bcmv(FixedX{BigRat(p)}), p);
    std::cout << "p=" << p << "  A_p(p)=" << at_p.value(Quantity::A, p) << "  C_p(p)=" << at_p.value(Quantity::C, p)
              << "  p(p+1)^2=" << p * (p + 1) * (p + 1) << '\n';
  }
}
