#pragma once

#include <optional>
#include <string>
#include <vector>

#include <lel/algebra.hpp>
#include <lel/effect.hpp>
#include <lel/order.hpp>
#include <lel/report.hpp>

namespace lel {

// Clauses (i)-(iv) of the partial t-norm definition: unit, commutativity,
// associativity and monotonicity, each with definedness propagation.
Report audit_partial_tnorm(const std::vector<std::string>& labels, const Order& leq, Elem one,
                           const std::vector<Elem>& delta);

// ⊙ of a lattice effect algebra as an n*n table (kUndef where undefined).
std::vector<Elem> odot_table(const Lea& lea);

// The smallest partial t-norm on any bounded lattice: 1Δa = aΔ1 = a and
// nothing else defined.  Witness for "some t-norm exists" questions.
std::vector<Elem> units_only_delta(int n, Elem one);

// For each pair (a,c) the set {b : c ≤ a→b} must be a principal up-set ↑v;
// the companion operation of clause (R) is then a⊛c = v.  Returns nullopt
// when some pair has no such v (no residual exists for this arrow).
std::optional<std::vector<Elem>> residual_star(const Lea& lea, const std::vector<Elem>& arrow);

// Clauses E, MPpt, MTpt, NGpt against the supplied partial t-norm, clause R
// when a companion table is supplied, plus two theorem-facing verdicts:
// "strict" (a→b ≤ a→s b everywhere) and "central" (agreement with a′∨b on
// central pairs iff the arrow is the Sasaki arrow).  The delta clauses
// (i)-(iv) are re-audited and absorbed so the report stands alone.
Report audit_pt_implication(const Lea& lea, const std::vector<Elem>& arrow,
                            const std::vector<Elem>& delta,
                            const std::vector<Elem>* star = nullptr);

// Table-level entry: requires the full effect-algebra structure and throws
// NotWeakLEAContext (with the audit attached) when the table lacks it.
Report audit_pt_implication(const PartialAlgebra& alg, const std::vector<Elem>& arrow,
                            const std::vector<Elem>& delta,
                            const std::vector<Elem>* star = nullptr);

// Exhaustive arrow-table search, capped at carriers of size 3 (3^9 tables;
// larger carriers throw UsageError).  "weak" lists every total arrow that is
// a weak pt-implication for some partial t-norm; "full" is the subset
// admitting a clause-R companion, paired with that companion.
struct PtImplicationSearch {
  std::vector<std::vector<Elem>> weak;
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> full;  // (arrow, star)
};
PtImplicationSearch search_pt_implications(const Lea& lea);

// File layout {"elements","zero","one","delta":[[a,b,v]...]} with the usual
// partial-table semantics (null = explicit undefined, duplicates rejected).
struct DeltaTable {
  Carrier carrier;
  std::vector<Elem> delta;
};
DeltaTable delta_from_json(const Json& j);
Json delta_to_json(const DeltaTable& d);

}  // namespace lel
