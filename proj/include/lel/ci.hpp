#pragma once

#include <optional>
#include <string>
#include <vector>

#include <lel/algebra.hpp>
#include <lel/effect.hpp>
#include <lel/order.hpp>
#include <lel/report.hpp>

namespace lel {

// A carrier with total conjunction ("dot") and implication ("arrow") tables.
// File layout mirrors the algebra format with "dot"/"arrow" in place of
// "oplus"; both tables must list every pair (total operations).
struct CIStructure {
  std::vector<std::string> labels;
  Elem zero = 0;
  Elem one = 0;
  std::vector<Elem> dot;    // row-major n*n
  std::vector<Elem> arrow;  // row-major n*n

  int size() const { return static_cast<int>(labels.size()); }
  Elem dot_of(Elem a, Elem b) const {
    return dot[static_cast<std::size_t>(a) * labels.size() + static_cast<std::size_t>(b)];
  }
  Elem arrow_of(Elem a, Elem b) const {
    return arrow[static_cast<std::size_t>(a) * labels.size() + static_cast<std::size_t>(b)];
  }

  static CIStructure from_json(const Json& j);
  Json to_json() const;
};

// The lattice context the laws are read against: order, meets/joins, and a
// unary complement map.
struct CIContext {
  Order leq;
  LatticeOps lat;
  std::vector<Elem> inv;

  bool le(Elem a, Elem b) const { return leq.le(a, b); }
  Elem meet(Elem a, Elem b) const { return lat.meet_of(leq, a, b); }
  Elem join(Elem a, Elem b) const { return lat.join_of(leq, a, b); }
  Elem invol(Elem a) const { return inv[static_cast<std::size_t>(a)]; }
};

// Order recovery from the arrow table: a ≤ b iff a→b = 1 and a′ = a→0.
// Exact on genuine CI-lattices (CI5).  On failure the report names the step
// ("order": poset/bounds, "lattice") and no context is returned.
struct CIContextRecovery {
  std::optional<CIContext> context;
  Report report;
};
CIContextRecovery recover_ci_context(const CIStructure& ci);

// CI1/CI2 against the context, then CI3–CI6 (theorems: a failure while
// CI1–CI2 pass flags a bug), then whether a→0 is an involution.
Report audit_ci(const CIStructure& ci, const CIContext& ctx);
Report audit_ci(const CIStructure& ci);  // recovers the context first

// The five construction laws cw1–cw5, read against a supplied bounded
// involutive lattice.  Conditional laws report how many tuples satisfied
// their hypotheses.
Report audit_cw(const CIStructure& ci, const CIContext& ctx);
Report audit_cw(const CIStructure& ci);  // recovers the context first

// a⊕b := a′→b when a ≤ b′, undefined otherwise.  Audits cw1–cw5 first and
// throws CwViolation naming the first failed law (or the failed context
// recovery step) with one witness.
PartialAlgebra lea_from_ci(const CIStructure& ci, const CIContext& ctx);
PartialAlgebra lea_from_ci(const CIStructure& ci);

// dot = ⊗, arrow = →s.  The table-level entry runs the full effect audit
// and throws NotALEA when it fails.
CIStructure ci_from_lea(const Lea& lea);
CIStructure ci_from_lea(const PartialAlgebra& alg);

// The context a Lea already carries (order, lattice, orthosupplement).
CIContext lea_ci_context(const Lea& lea);

// The ortholattice reading of a bounded involutive lattice: dot = meet,
// arrow = a′ ∨ b.
CIStructure ortho_ci(std::vector<std::string> labels, Elem zero, Elem one, const CIContext& ctx);

}  // namespace lel
