#pragma once

#include <cstddef>
#include <vector>

#include <lel/algebra.hpp>

namespace lel::testing {

// Brute-force reference enumerator for the count cross-checks: all labeled
// structures (order, involution, ⊕ table) on {0..n-1} with bottom 0 and top
// n-1, with no canonical-form rejection, no search-tree propagation and no
// value filtering; every defining law is re-stated here directly rather
// than calling the library's audits.  Feasible for n ≤ 5.
struct OracleCount {
  std::size_t labeled = 0;                      // labeled structures passing
  std::size_t classes = 0;                      // isomorphism classes
  std::vector<PartialAlgebra> representatives;  // first-found per class
};

// full_effect selects the subclass with unique orthosupplements whose
// induced order coincides with the frame order (the enumerator's "lea").
OracleCount oracle_enumerate(int n, bool full_effect);

// Some bijection matching the designated bounds carries one ⊕ table onto
// the other, definedness pattern included.  Order and involution are
// recoverable from the table on these classes, so this coincides with
// structure isomorphism.
bool oracle_isomorphic(const PartialAlgebra& a, const PartialAlgebra& b);

}  // namespace lel::testing
