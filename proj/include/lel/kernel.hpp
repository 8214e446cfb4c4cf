#pragma once

// Hilbert-style proof checker for the implication calculus.
//
// Schemas (axioms) and rules are stored as pattern formulas whose atoms are
// metavariables ("phi", "psi", "chi").  A derivation step names a schema or
// rule, supplies an explicit substitution, and (for rules) lists the earlier
// steps serving as premises.  Matching is purely syntactic on normalized
// formulas (expansion of defined connectives followed by constant folding),
// so e.g. "T -> p" and "~_|_ -> p" are interchangeable.
//
// Biconditional conventions: an assertion "phi <-> psi" in the source
// calculus abbreviates the two implications.  A schema or rule whose
// conclusion is biconditional therefore carries two conclusion patterns; a
// step invoking it asserts either one.  A biconditional *premise* requires
// both directions, listed as two consecutive premise slots.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lel/error.hpp"
#include "lel/eval.hpp"
#include "lel/formula.hpp"
#include "lel/report.hpp"

namespace lel {

using Subst = std::map<std::string, FormulaPtr>;

// An axiom schema (or derived lemma usable as one): zero premises, one or
// two conclusion patterns.
struct SchemaDef {
  std::string id;
  std::vector<FormulaPtr> conclusions;
  std::vector<std::string> metavars;  // sorted, deduplicated
};

// One way of applying a rule: ordered premise patterns and the conclusion
// pattern(s) they license.  Most rules have a single mode; a rule stated as
// an equivalence in the source calculus (R14) has one mode per direction.
struct RuleMode {
  std::vector<FormulaPtr> premises;
  std::vector<FormulaPtr> conclusions;
};

struct RuleDef {
  std::string id;
  std::vector<RuleMode> modes;
  std::vector<std::string> metavars;
};

// The primitive schemas A1-A5 and rules R1-R10 (R1 split into its two
// directions), plus the derived lemmas A6, R11a/R11b, R12, R13, R14.
const std::vector<SchemaDef>& schema_table();
const std::vector<RuleDef>& rule_table();

const SchemaDef* find_schema(const std::string& id);
const RuleDef* find_rule(const std::string& id);

// Replaces every metavariable atom in `pattern` by its image under `s`.
// Throws MissingMetavariable if a metavariable has no image.
FormulaPtr instantiate(const FormulaPtr& pattern, const Subst& s);

// Instantiates all conclusion patterns of the named schema.
// Throws UnknownRule if `id` is not a schema.
std::vector<FormulaPtr> instantiate_schema(const std::string& id,
                                           const Subst& s);

struct Step {
  FormulaPtr formula;
  std::string by;
  std::vector<int> premises;  // 1-based indices of earlier steps; 0 = hypothesis pool
  Subst subst;
};

struct Derivation {
  FormulaPtr goal;
  std::vector<FormulaPtr> hypotheses;
  std::vector<Step> steps;

  static Derivation from_json(const Json& j);
};

// Validates one step against the hypothesis pool and the formulas asserted
// by earlier steps.  Throws UnknownRule, MissingMetavariable,
// PremiseNotFound, ConclusionMismatch, or UsageError (premises supplied to
// an axiom schema).
void check_step(const Step& step, std::size_t index_1based,
                const std::vector<FormulaPtr>& hypotheses,
                const std::vector<FormulaPtr>& earlier);

// Checks every step and the goal.  Never throws on a bad step: failures
// become report entries.  With no hypotheses an accepted derivation
// certifies theoremhood of the goal; otherwise derivability from the
// hypotheses by the calculus' rules.
Report check_derivation(const Derivation& d);

// A named model, used for corpus-based semantic audits.
struct CorpusModel {
  std::string name;
  Model model;
};

// All valuations of `atoms` into `lea`, one CorpusModel per valuation.
std::vector<CorpusModel> exhaustive_models(std::shared_ptr<const Lea> lea,
                                           const std::string& name,
                                           const std::vector<std::string>& atoms);

// Exhaustive valuations of `atoms` over every canonical library algebra
// that is a lattice effect algebra of size <= max_size.
std::vector<CorpusModel> standard_corpus(const std::vector<std::string>& atoms,
                                         std::size_t max_size = 5);

// Evaluates every step of `d` in every corpus model and reports each step
// that fails to take the value 1 somewhere.  Refuses (UsageError) a
// derivation with hypotheses unless `assume_hypotheses` is set, in which
// case models where some hypothesis is not valid are skipped.
Report soundness_audit(const Derivation& d,
                       const std::vector<CorpusModel>& corpus,
                       bool assume_hypotheses = false);

}  // namespace lel
