#pragma once

// Exhaustive enumeration of small weak lattice effect algebras (and the
// subclass whose ⊕ satisfies the full effect-algebra axioms) up to
// isomorphism, plus countermodel search for formulas over the enumerated
// algebras.
//
// Strategy: enumerate bounded lattice orders with an antitone involution
// ("frames") up to isomorphism, then complete the ⊕ table by backtracking.
// Once the frame is fixed the definedness domain is forced (a⊕b exists iff
// a ≤ b′), the 0-row is forced, and every remaining value is bounded below
// by a∨b, so associativity pruning collapses the search quickly.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lel/algebra.hpp"
#include "lel/formula.hpp"
#include "lel/weak.hpp"

namespace lel {

enum class AlgClass { WeakLea, Lea };

inline constexpr std::uint64_t kNoNodeBudget = UINT64_MAX;

struct EnumerationTask {
  int size = 2;                                // carrier cardinality, >= 2
  AlgClass cls = AlgClass::Lea;
  std::uint64_t node_budget = kNoNodeBudget;   // backtracking nodes, > 0
  double time_limit_secs = 0.0;                // <= 0: no limit
  unsigned shuffle_seed = 0;                   // nonzero: permute the frame
                                               // work order (results invariant)
};

// Feasibility caps on `size`: weak class 6, effect-algebra class 7.
int enumeration_cap(AlgClass cls);

// One canonical representative per isomorphism class, sorted by canonical
// encoding (deterministic regardless of worker count or shuffle seed).
// Generated carriers are labeled "0", "a", "b", ..., "1".
// Throws UsageError (size/cap/budget validation) or BudgetExceeded.
std::vector<PartialAlgebra> enumerate_algebras(const EnumerationTask& task);

// Minimal lexicographic encoding of (order, involution, ⊕ table) over all
// relabelings fixing 0 and 1; equal encodings iff isomorphic.
std::vector<std::uint8_t> iso_encoding(const WeakStructure& w);

// The canonical representative itself, carrier relabeled "0", "a", ..., "1".
// Requires a structure passing the weak audit (throws NotWeakLEAContext).
PartialAlgebra iso_canonical(const PartialAlgebra& alg);

// Rebuilds the structure encoded by iso_encoding.
WeakStructure decode_structure(const std::vector<std::uint8_t>& enc);

struct Countermodel {
  PartialAlgebra algebra;
  std::map<std::string, std::string> valuation;  // atom -> element label
  std::string value;                             // eval result (≠ "1"'s element)
};

// Searches enumerated effect algebras of size 2..max_size (ascending, each
// size in enumeration order) and all valuations of `atoms` (every atom of
// `f` when empty) for a model where f evaluates below 1.  Returns the first
// hit in that deterministic order; nullopt means bounded verification only,
// never validity.
std::optional<Countermodel> find_countermodel(
    const FormulaPtr& f, int max_size, std::vector<std::string> atoms = {},
    std::uint64_t node_budget = kNoNodeBudget, double time_limit_secs = 0.0);

}  // namespace lel
