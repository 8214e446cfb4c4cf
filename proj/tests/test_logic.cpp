#include <doctest.h>

#include <lel/effect.hpp>
#include <lel/error.hpp>
#include <lel/eval.hpp>
#include <lel/formula.hpp>
#include <lel/library.hpp>

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "support/paths.hpp"

using namespace lel;

namespace {

std::size_t parse_position(const std::string& text) {
  try {
    parse_formula(text);
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::ParseError);
    return e.detail().at("position").get<std::size_t>();
  }
  FAIL("expected a parse error for: ", text);
  return 0;
}

bool core_only(const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::Atom:
    case Conn::Bottom: return true;
    case Conn::Implies: return core_only(f->lhs) && core_only(f->rhs);
    default: return false;
  }
}

Model chain_model() {
  Model m;
  m.lea = std::make_shared<Lea>(Lea::make(find_library("mv_chain_3")->alg));
  m.valuation = {{"p", 2}, {"q", 1}};  // p = 2/3, q = 1/3
  return m;
}

}  // namespace

TEST_CASE("parsing follows the declared precedence") {
  CHECK(print_formula(parse_formula("p -> q -> r")) == "(p -> (q -> r))");
  CHECK(print_formula(parse_formula("~p -> q & r")) == "(~p -> (q & r))");
  CHECK(print_formula(parse_formula("p & q | r")) == "((p & q) | r)");
  CHECK(print_formula(parse_formula("p | q & r")) == "(p | (q & r))");
  CHECK(print_formula(parse_formula("p & q & r")) == "((p & q) & r)");
  CHECK(print_formula(parse_formula("~~p")) == "~~p");
  CHECK(print_formula(parse_formula("~(p &. q)")) == "~(p &. q)");
  CHECK(print_formula(parse_formula("_|_ -> T")) == "(_|_ -> T)");
  CHECK(print_formula(parse_formula("abc_1 |. zX9")) == "(abc_1 |. zX9)");
  CHECK(print_formula(parse_formula("(p &. q) &. r")) == "((p &. q) &. r)");

  SUBCASE("printing is a parser fixed point") {
    for (const char* text : {"p", "_|_", "T", "~p", "p -> q", "p &. q", "p |. q", "p & q",
                             "p | q", "((a | b) & c) -> ~(d |. e_2)"}) {
      FormulaPtr f = parse_formula(text);
      CHECK(formulas_equal(f, parse_formula(print_formula(f))));
    }
  }
}

TEST_CASE("parse errors carry a byte offset") {
  CHECK(parse_position("p <-> q") == 2);
  CHECK_THROWS_WITH_AS(parse_formula("p <-> q"), doctest::Contains("no biconditional"), Error);

  CHECK(parse_position("p &. q &. r") == 7);
  CHECK_THROWS_WITH_AS(parse_formula("p &. q &. r"), doctest::Contains("non-associative"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_formula("p |. q |. r"), doctest::Contains("non-associative"),
                       Error);

  CHECK_THROWS_WITH_AS(parse_formula("p &. q & r"), doctest::Contains("equal precedence"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_formula("p | q |. r"), doctest::Contains("equal precedence"),
                       Error);

  CHECK_THROWS_WITH_AS(parse_formula("p -> "), doctest::Contains("end of input"), Error);
  CHECK_THROWS_WITH_AS(parse_formula("(p -> q"), doctest::Contains("expected ')'"), Error);
  CHECK_THROWS_WITH_AS(parse_formula("p - q"), doctest::Contains("stray '-'"), Error);
  CHECK_THROWS_WITH_AS(parse_formula("_|p"), doctest::Contains("falsum"), Error);
  CHECK_THROWS_WITH_AS(parse_formula("P"), doctest::Contains("unexpected character"), Error);
  CHECK_THROWS_AS(parse_formula(""), Error);
  CHECK_THROWS_AS(parse_formula("p q"), Error);
}

TEST_CASE("expansion eliminates every derived connective") {
  for (const char* text : {"T", "~p", "p &. q", "p |. q", "p & q", "p | q",
                           "(p | q) -> ~(r & s)"}) {
    FormulaPtr e = expand(parse_formula(text));
    CHECK(core_only(e));
    CHECK(formulas_equal(e, expand(e)));  // idempotent
  }

  CHECK(formulas_equal(expand(parse_formula("T")), parse_formula("_|_ -> _|_")));
  CHECK(formulas_equal(expand(parse_formula("~p")), parse_formula("p -> _|_")));
  CHECK(formulas_equal(expand(parse_formula("p &. q")),
                       parse_formula("(p -> (q -> _|_)) -> _|_")));
  CHECK(formulas_equal(expand(parse_formula("p & q")),
                       parse_formula("(p -> ((p -> q) -> _|_)) -> _|_")));
  // The disjunctions are defined by De Morgan duality.
  CHECK(formulas_equal(expand(parse_formula("p |. q")),
                       expand(parse_formula("~(~p &. ~q)"))));
  CHECK(formulas_equal(expand(parse_formula("p | q")),
                       expand(parse_formula("~(~p & ~q)"))));
}

TEST_CASE("constant folding works on closed subformulas only") {
  CHECK(formulas_equal(normalize(parse_formula("T -> T")), parse_formula("_|_ -> _|_")));
  CHECK(formulas_equal(normalize(parse_formula("~T")), parse_formula("_|_")));
  CHECK(formulas_equal(normalize(parse_formula("~_|_")), parse_formula("_|_ -> _|_")));
  // 1 -> p has no constant value: folding must not touch it.
  CHECK(formulas_equal(normalize(parse_formula("T -> p")),
                       parse_formula("(_|_ -> _|_) -> p")));
  // phi &. T normalizes to the same form as double negation.
  CHECK(formulas_equal(normalize(parse_formula("p &. T")), normalize(parse_formula("~~p"))));
  CHECK_FALSE(formulas_equal(normalize(parse_formula("p &. T")), parse_formula("p")));

  CHECK_THROWS_WITH_AS(fold_constants(parse_formula("p & q")),
                       doctest::Contains("expanded"), Error);
}

TEST_CASE("atom collection is sorted and deduplicated") {
  CHECK(collect_atoms(parse_formula("q -> (p & z_1)")) ==
        std::vector<std::string>{"p", "q", "z_1"});
  CHECK(collect_atoms(parse_formula("(p -> p) & p")) == std::vector<std::string>{"p"});
  CHECK(collect_atoms(parse_formula("T -> _|_")).empty());
}

TEST_CASE("evaluation on the four-element chain") {
  Model m = chain_model();

  CHECK(eval(parse_formula("p"), m) == 2);
  CHECK(eval(parse_formula("T"), m) == 3);
  CHECK(eval(parse_formula("_|_"), m) == 0);
  CHECK(eval(parse_formula("~p"), m) == 1);
  // Sasaki arrow on the chain: min(1, 1 - 2/3 + 1/3) = 2/3.
  CHECK(eval(parse_formula("p -> q"), m) == 2);
  // Lattice meet through the Sasaki conjunction: 2/3 and 1/3 meet at 1/3.
  CHECK(eval(parse_formula("p & q"), m) == 1);
  // Sasaki conjunction is the Lukasiewicz product: max(0, 2/3 + 1/3 - 1) = 0.
  CHECK(eval(parse_formula("p &. q"), m) == 0);
  CHECK(eval(parse_formula("p | q"), m) == 2);

  CHECK(is_valid(parse_formula("p -> p"), m));
  CHECK_FALSE(is_valid(parse_formula("p"), m));

  CHECK_THROWS_AS(eval(parse_formula("r"), m), Error);
  try {
    eval(parse_formula("p -> r"), m);
    FAIL("expected an unbound-atom error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnboundAtom);
    CHECK(e.detail().at("atom") == "r");
  }
}

TEST_CASE("direct semantic clauses agree with expansion everywhere") {
  // The direct clause for & is the lattice meet; agreement with the unfolded
  // Sasaki form is the a AND b = a*(a->b) lemma, checked here over every
  // two-atom valuation of two structurally different algebras.
  std::vector<FormulaPtr> formulas;
  for (const char* text : {"~p", "T", "p -> q", "p &. q", "p |. q", "p & q", "p | q",
                           "(p | q) &. ~(p & q)", "~(p |. (q & p))"})
    formulas.push_back(parse_formula(text));

  for (const char* name : {"diamond", "mo_2", "mv_chain_3", "boolean_4"}) {
    CAPTURE(name);
    Model m;
    m.lea = std::make_shared<Lea>(Lea::make(find_library(name)->alg));
    const int n = m.lea->size();
    for (Elem p = 0; p < n; ++p)
      for (Elem q = 0; q < n; ++q) {
        m.valuation = {{"p", p}, {"q", q}};
        for (const FormulaPtr& f : formulas) CHECK(eval(f, m) == eval(expand(f), m));
      }
  }
}

TEST_CASE("model files resolve algebras three ways") {
  Json inline_model;
  inline_model["algebra"] = find_library("mv_chain_3")->alg.to_json();
  inline_model["valuation"] = Json{{"p", "2/3"}, {"q", "1/3"}};
  Model m = model_from_json(inline_model, ".");
  CHECK(eval(parse_formula("p -> q"), m) == 2);

  Json named_model;
  named_model["algebra"] = "boolean_4";
  named_model["valuation"] = Json{{"p", "a"}};
  Model named = model_from_json(named_model, ".");
  CHECK(named.lea->size() == 4);
  CHECK(is_valid(parse_formula("p | ~p"), named));

  SUBCASE("a path-resolved algebra is still audited") {
    Json path_model;
    path_model["algebra"] = "hexagon.json";
    path_model["valuation"] = Json::object();
    try {
      model_from_json(path_model, std::string(LEL_DATA_DIR));
      FAIL("expected the effect-algebra audit to reject the hexagon");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotALEA);
    }
  }

  SUBCASE("unknown algebra references are reported") {
    Json bad;
    bad["algebra"] = "no_such_algebra";
    bad["valuation"] = Json::object();
    CHECK_THROWS_WITH_AS(model_from_json(bad, "."), doctest::Contains("neither"), Error);
  }

  SUBCASE("valuation labels must name elements") {
    Json bad;
    bad["algebra"] = "mv_chain_3";
    bad["valuation"] = Json{{"p", "7/8"}};
    CHECK_THROWS_WITH_AS(model_from_json(bad, "."), doctest::Contains("valuation"), Error);
  }
}
