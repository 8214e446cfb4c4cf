#pragma once

#include <map>
#include <memory>
#include <string>

#include <lel/effect.hpp>
#include <lel/error.hpp>
#include <lel/formula.hpp>

namespace lel {

// A lattice effect algebra (audited at construction) plus an atom valuation.
struct Model {
  std::shared_ptr<const Lea> lea;
  std::map<std::string, Elem> valuation;
};

// Model files: {"algebra": <library name | path | inline object>,
//               "valuation": {"p": "2/3", ...}}.
// A string algebra is tried as a canonical-library name first, then as a
// path relative to base_dir, then relative to the working directory.
Model model_from_json(const Json& j, const std::string& base_dir);
Model load_model(const std::string& path);

// Structural recursion with the direct semantic clause for every connective
// (→ ↦ Sasaki arrow, ∧· ↦ ⊗, ∧ ↦ lattice meet, …); one memo table per call.
// Throws UnboundAtom for atoms outside the valuation.
Elem eval(const FormulaPtr& f, const Model& m);

// V(φ) = 1.
bool is_valid(const FormulaPtr& f, const Model& m);

}  // namespace lel
