#pragma once

#include <optional>
#include <vector>

#include <lel/algebra.hpp>
#include <lel/order.hpp>
#include <lel/report.hpp>

namespace lel {

// A bounded involutive lattice together with a partial ⊕ table on the same
// carrier.  The audits decide whether the combination is a weak lattice
// effect algebra (⊕ defined exactly when a ≤ b', plus W1–W3).
struct WeakStructure {
  PartialAlgebra alg;
  Order leq;
  LatticeOps lat;
  std::vector<Elem> inv;

  bool le(Elem a, Elem b) const { return leq.le(a, b); }
  Elem meet(Elem a, Elem b) const { return lat.meet_of(leq, a, b); }
  Elem join(Elem a, Elem b) const { return lat.join_of(leq, a, b); }
  Elem invol(Elem a) const { return inv[static_cast<std::size_t>(a)]; }

  // Total by a ∧ b' ≤ a ≤ a'': a⊗b = (a' ⊕ (a ∧ b'))'.
  Elem sasaki_product(Elem a, Elem b) const;
  // a→s b = a' ⊕ (a ∧ b); total for the same reason.
  Elem sasaki_arrow(Elem a, Elem b) const;
};

// Rebuild order and involution from the definedness pattern of a bare table:
// a ≤ b iff every partner of b is a partner of a, and a' is the largest
// partner of a.  Exact for genuine weak lattice effect algebras.  On failure
// the report explains which recovery step broke; no structure is returned.
struct WeakRecovery {
  std::optional<WeakStructure> structure;
  Report report;  // recovery-stage verdicts only
};

WeakRecovery recover_weak(const PartialAlgebra& alg);

// Literal audit of a structure whose order/involution are already known:
// bounded involutive lattice, definedness-iff, W1, W2, W3.
Report audit_weak_lea(const WeakStructure& w);

// Recovery followed by the literal audit (the table-only entry point).
Report audit_weak_lea(const PartialAlgebra& alg);

// Builds the structure or throws NotWeakLEAContext with the report attached.
WeakStructure make_weak(const PartialAlgebra& alg);

// Derived properties W4–W8.  These are theorems of weak lattice effect
// algebras, so a failure on an audited structure flags an implementation bug.
Report audit_derived_w(const WeakStructure& w);

// The eight equivalent conditions of the residuation-duality theorem,
// each checked literally and independently.
Report rd_profile(const WeakStructure& w);

// True when every RD verdict agrees (the theorem demands unanimity).
bool rd_uniform(const Report& profile);

}  // namespace lel
