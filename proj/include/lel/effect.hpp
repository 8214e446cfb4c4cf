#pragma once

#include <memory>
#include <optional>
#include <vector>

#include <lel/algebra.hpp>
#include <lel/order.hpp>
#include <lel/report.hpp>

namespace lel {

// a ≤ b  iff  some c has a⊕c = b.
Order induced_leq(const PartialAlgebra& alg);

// For each element a, the list of b with a⊕b = 1 (ascending index order).
std::vector<std::vector<Elem>> completions_to_one(const PartialAlgebra& alg);

// Commutativity/associativity/orthosupplement/zero-one axioms plus a lattice
// classification of the induced order.  Never throws; every failure is a
// report entry with witnesses.
Report audit_effect_axioms(const PartialAlgebra& alg);

// Strict derivation of the order bundle from a table.  Errors instead of
// guessing: a broken induced relation raises NotAPartialOrder and an element
// with two completions to 1 raises AmbiguousOrthosupplement.  The involution
// is absent when some element has no completion; lattice tables are absent
// when some pair lacks a bound.
OrderStructure derive_order(const PartialAlgebra& alg);

// Whether the Sasaki product evaluates both defining expressions and
// cross-checks them (catching table corruption) or just one.
enum class SasakiMode { Audit, Fast };

// A validated lattice effect algebra: the table together with its induced
// order, lattice tables and orthosupplement map.  Construction runs the full
// axiom audit and throws NotALEA (with the report attached) on failure.
class Lea {
 public:
  static Lea make(const PartialAlgebra& alg, SasakiMode mode = SasakiMode::Audit);

  const PartialAlgebra& algebra() const { return alg_; }
  int size() const { return alg_.size(); }
  Elem zero() const { return alg_.zero(); }
  Elem one() const { return alg_.one(); }
  const std::string& label(Elem a) const { return alg_.label(a); }

  bool le(Elem a, Elem b) const { return leq_.le(a, b); }
  Elem meet(Elem a, Elem b) const { return lat_.meet_of(leq_, a, b); }
  Elem join(Elem a, Elem b) const { return lat_.join_of(leq_, a, b); }
  Elem inv(Elem a) const { return inv_[static_cast<std::size_t>(a)]; }
  const Order& order() const { return leq_; }
  const LatticeOps& lattice() const { return lat_; }
  const std::vector<Elem>& involution() const { return inv_; }

  bool oplus_defined(Elem a, Elem b) const { return alg_.defined(a, b); }
  std::optional<Elem> oplus(Elem a, Elem b) const {
    return alg_.defined(a, b) ? std::optional<Elem>(alg_.op(a, b)) : std::nullopt;
  }

  // b ⊖ a: the unique c with a⊕c = b; throws NotBelow when a ≤ b fails.
  Elem ominus(Elem b, Elem a) const;

  // a⊙b = (a'⊕b')', undefined exactly when a'⊕b' is.
  std::optional<Elem> odot(Elem a, Elem b) const;

  // a⊗b = (a'⊕(a∧b'))' = a⊖(a∧b'); total.  In audit mode both expressions
  // are computed and compared; a mismatch throws InternalInconsistency.
  Elem sasaki_product(Elem a, Elem b) const;
  // a→s b = (a⊗b')' = a'⊕(a∧b); total.
  Elem sasaki_arrow(Elem a, Elem b) const;

  bool sharp(Elem a) const { return meet(a, inv(a)) == zero(); }
  // a∨b = a⊕(b⊖(a∧b)), with an undefined left side counting as failure.
  bool compatible(Elem a, Elem b) const;

  SasakiMode mode() const { return mode_; }

 private:
  Lea() = default;
  PartialAlgebra alg_;
  Order leq_;
  LatticeOps lat_;
  std::vector<Elem> inv_;
  SasakiMode mode_ = SasakiMode::Audit;
};

struct Centers {
  std::vector<Elem> sharp;              // S(E)
  std::vector<Elem> compatible_center;  // B(E)
  std::vector<Elem> center;             // C(E) = B(E) ∩ S(E)
};

Centers centers(const Lea& lea);

// Build the partial algebra a⊕b = a∨b (defined iff a ≤ b') from a bounded
// involutive lattice whose elements are all sharp.  NotSharp(a) otherwise.
PartialAlgebra ortholattice_embed(const std::vector<std::string>& labels, const Order& leq,
                                  const std::vector<Elem>& inv);

// Exhaustive checks of the two numbered property lists: e1–e13 for ⊕/⊖ and
// e13b,e14–e19 for ⊙ (the source numbering reuses "e13"; the second list is
// shifted to keep ids unique).
Report audit_elaws(const Lea& lea);

// CI1–CI6 with · = Sasaki product and → = Sasaki arrow, plus divisibility,
// strong prelinearity, self-adjointness, residuation and the meet identity
// a∧b = a⊗(a→s b) = b⊗(b→s a) = (a→s(a→s b)')' = (b→s(b→s a)')'.
Report audit_lea_laws(const Lea& lea);

}  // namespace lel
