// Small tour of the library: one Kronecker product, one skew expansion,
// and a multiplicity-free check.

#include <iostream>

#include "kron/kron.hpp"

int main() {
  using kron::Partition;

  // s_(5,2) * s_(3,2,2), expanded by counting Kronecker tableaux.
  const auto product = kron::kron_expand_tworow(7, 2, Partition{3, 2, 2});
  std::cout << "s_(5,2) * s_(3,2,2) = " << kron::to_string(product.expansion) << "  ["
            << kron::to_string(product.method) << "]\n";

  // A single coefficient, with the tableau upper bound.
  const auto g = kron::kron_coeff(15, 3, Partition{6, 4, 4, 1}, Partition{5, 4, 3, 3});
  std::cout << "g((12,3),(6,4,4,1),(5,4,3,3)) = " << g.value << " (bound " << *g.upper_bound << ")\n";

  std::cout << "s_(4,4,2,2)/(3,3) = " << kron::to_string(kron::skew_expand(Partition{4, 4, 2, 2}, Partition{3, 3}))
            << "\n";

  const auto v = kron::is_multiplicity_free(8, 2, Partition{4, 4});
  std::cout << "s_(6,2) * s_(4,4) multiplicity free: " << std::boolalpha << v.multiplicity_free << " ("
            << kron::to_string(v.source) << ")\n";
  return g.value == 4 ? 0 : 1;
}
