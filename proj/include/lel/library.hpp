#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <lel/algebra.hpp>

namespace lel {

// A named reference algebra with its expected classification.  The audits
// are still run in tests; the flags say what they must conclude.
struct LibraryEntry {
  std::string name;
  PartialAlgebra alg;
  bool expect_weak = true;  // passes the weak-structure audit
  bool expect_lea = true;   // passes the full effect-algebra audit
  std::string note;
};

// Reference algebras:
//   two_chain            2-element chain
//   mv_chain_1 .. _10    Łukasiewicz chains, n+1 elements, fraction labels
//   boolean_2/_4/_8      Boolean algebras with that many elements
//   mo_1/_2/_3           horizontal sums MO_k (k complementary middle pairs)
//   diamond              M3 with every atom its own orthosupplement, x⊕x = 1
//   hexagon              benzene-ring weak structure; a has two candidate
//                        orthosupplements, so it fails the effect audit
//   octagon              8-element weak structure with a⊕a′ = c ≠ 1
const std::vector<LibraryEntry>& canonical_library();

// nullptr when no entry has this name.
const LibraryEntry* find_library(std::string_view name);

// The entries whose full effect-algebra audit passes (expect_lea).
std::vector<const LibraryEntry*> canonical_leas();

}  // namespace lel
