#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <lel/error.hpp>

namespace lel {

// Surface connectives.  The core language is Atom/Bottom/Implies; everything
// else is definable and eliminated by expand().
enum class Conn {
  Atom,
  Bottom,
  Top,      // ¬⊥
  Neg,      // φ→⊥
  Implies,
  SConj,    // &.  Sasaki conjunction  ¬(φ→¬ψ)
  SDisj,    // |.  Sasaki disjunction  ¬(¬φ∧·¬ψ)
  Meet,     // &   φ∧·(φ→ψ)
  Join,     // |   ¬(¬φ∧¬ψ)
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  Conn conn;
  std::string atom;   // Conn::Atom only
  FormulaPtr lhs;     // unary operand lives here
  FormulaPtr rhs;

  static FormulaPtr make_atom(std::string name);
  static FormulaPtr bottom();
  static FormulaPtr top();
  static FormulaPtr neg(FormulaPtr f);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr sconj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr sdisj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr meet(FormulaPtr a, FormulaPtr b);
  static FormulaPtr join(FormulaPtr a, FormulaPtr b);
};

bool formulas_equal(const FormulaPtr& a, const FormulaPtr& b);

// ASCII grammar: atoms [a-z][a-zA-Z0-9_]*, "_|_" ⊥, "T" ⊤, "~" ¬, "->" →
// (right-associative, loosest), {"&.", "&"} then {"|.", "|"} in between,
// "~" tightest.  "&"/"|" associate left; "&."/"|." chains and any mixing of
// distinct operators at one precedence level require explicit parentheses.
// Throws ParseError with the byte offset in detail{"position"}.
FormulaPtr parse_formula(std::string_view text);

// Canonical form: every binary connective fully parenthesized.
// parse_formula(print_formula(f)) reproduces f.
std::string print_formula(const FormulaPtr& f);

// Rewrites derived connectives away; result uses Atom/Bottom/Implies only.
// Total and idempotent.
FormulaPtr expand(const FormulaPtr& f);

// Replaces atom-free subformulas by their value, which is the same in every
// effect algebra: ⊥ for 0 and ⊥→⊥ for 1.  Expects core formulas; innermost
// first; idempotent.
FormulaPtr fold_constants(const FormulaPtr& f);

// fold_constants(expand(f)): the normal form the proof kernel matches on.
FormulaPtr normalize(const FormulaPtr& f);

// Sorted, deduplicated atom names.
std::vector<std::string> collect_atoms(const FormulaPtr& f);

}  // namespace lel
