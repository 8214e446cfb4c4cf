#include <doctest.h>

#include <lel/error.hpp>
#include <lel/eval.hpp>
#include <lel/formula.hpp>
#include <lel/kernel.hpp>
#include <lel/library.hpp>

#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "support/paths.hpp"

using namespace lel;

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return Json::parse(in);
}

Derivation load_derivation(const std::string& name) {
  return Derivation::from_json(read_json(name));
}

const Check* find_check(const Report& rep, const std::string& id) {
  for (const Check& c : rep.checks)
    if (c.id == id) return &c;
  return nullptr;
}

FormulaPtr random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 9);
  switch (pick(rng)) {
    case 0: return Formula::make_atom("p");
    case 1: return Formula::make_atom("q");
    case 2: return Formula::make_atom("r");
    case 3: return Formula::bottom();
    case 4: return Formula::neg(random_formula(rng, depth - 1));
    case 5:
      return Formula::implies(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 6:
      return Formula::sconj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 7:
      return Formula::sdisj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 8:
      return Formula::meet(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default:
      return Formula::join(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("the schema and rule tables carry the expected shapes") {
  struct SchemaShape {
    const char* id;
    std::size_t conclusions;
  };
  for (const SchemaShape& s : std::vector<SchemaShape>{
           {"A1", 1}, {"A2", 2}, {"A3", 1}, {"A4", 1}, {"A5", 1}, {"A6", 2}}) {
    CAPTURE(s.id);
    const SchemaDef* def = find_schema(s.id);
    REQUIRE(def != nullptr);
    CHECK(def->conclusions.size() == s.conclusions);
  }

  struct RuleShape {
    const char* id;
    std::size_t modes;
    std::size_t premises;     // of the first mode
    std::size_t conclusions;  // of the first mode
  };
  for (const RuleShape& r : std::vector<RuleShape>{{"R1a", 1, 1, 1},
                                                   {"R1b", 1, 1, 1},
                                                   {"R2", 1, 2, 1},
                                                   {"R3", 1, 1, 1},
                                                   {"R4", 1, 1, 2},
                                                   {"R5", 1, 1, 1},
                                                   {"R6", 1, 1, 1},
                                                   {"R7", 1, 2, 2},
                                                   {"R8", 1, 2, 1},
                                                   {"R9", 1, 3, 1},
                                                   {"R10", 1, 2, 2},
                                                   {"R11a", 1, 1, 2},
                                                   {"R11b", 1, 2, 1},
                                                   {"R12", 1, 2, 1},
                                                   {"R13", 1, 1, 1},
                                                   {"R14", 2, 1, 1}}) {
    CAPTURE(r.id);
    const RuleDef* def = find_rule(r.id);
    REQUIRE(def != nullptr);
    CHECK(def->modes.size() == r.modes);
    CHECK(def->modes.front().premises.size() == r.premises);
    CHECK(def->modes.front().conclusions.size() == r.conclusions);
  }

  CHECK(find_schema("R12") == nullptr);
  CHECK(find_rule("A1") == nullptr);
  CHECK(find_schema("A6")->metavars == std::vector<std::string>{"phi"});
  CHECK(find_rule("R2")->metavars == std::vector<std::string>{"chi", "phi", "psi"});
}

TEST_CASE("instantiation substitutes metavariables or refuses") {
  Subst s{{"phi", parse_formula("p & q")}};
  std::vector<FormulaPtr> inst = instantiate_schema("A1", s);
  REQUIRE(inst.size() == 1);
  CHECK(formulas_equal(inst[0], parse_formula("(p & q) -> (p & q)")));

  CHECK_THROWS_AS(instantiate_schema("A1", Subst{}), Error);
  try {
    instantiate_schema("A2", Subst{});
    FAIL("expected a missing-metavariable error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingMetavariable);
    CHECK(e.detail().at("metavariable") == "phi");
  }

  try {
    instantiate_schema("R2", s);  // a rule, not a schema
    FAIL("expected an unknown-rule error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownRule);
  }
}

TEST_CASE("step checking distinguishes the failure modes") {
  const std::vector<FormulaPtr> no_hyps;
  const std::vector<FormulaPtr> no_earlier;
  Subst phi_p{{"phi", parse_formula("p")}};

  SUBCASE("axiom schemas take no premises") {
    Step step{parse_formula("p -> p"), "A1", {0}, phi_p};
    try {
      check_step(step, 1, {parse_formula("p")}, no_earlier);
      FAIL("expected a usage error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::UsageError);
    }
  }

  SUBCASE("a wrong instance is a conclusion mismatch, with instances listed") {
    Step step{parse_formula("p -> q"), "A1", {}, phi_p};
    try {
      check_step(step, 1, no_hyps, no_earlier);
      FAIL("expected a conclusion mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ConclusionMismatch);
      CHECK(e.detail().at("instances") == Json::array({"(p -> p)"}));
    }
  }

  SUBCASE("unknown rule names are rejected") {
    Step step{parse_formula("p"), "R99", {}, phi_p};
    try {
      check_step(step, 1, no_hyps, no_earlier);
      FAIL("expected an unknown-rule error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::UnknownRule);
    }
  }

  SUBCASE("premise arity is enforced") {
    Step step{parse_formula("T -> p"), "R1a", {}, phi_p};
    try {
      check_step(step, 1, no_hyps, no_earlier);
      FAIL("expected a premise error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PremiseNotFound);
      CHECK(e.detail().at("required") == 1);
      CHECK(e.detail().at("listed") == 0);
    }
  }

  SUBCASE("premise index 0 searches the hypothesis pool") {
    Step step{parse_formula("T -> p"), "R1a", {0}, phi_p};
    CHECK_NOTHROW(check_step(step, 1, {parse_formula("p")}, no_earlier));
    try {
      check_step(step, 1, {parse_formula("q")}, no_earlier);
      FAIL("expected a premise error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PremiseNotFound);
      CHECK(e.detail().at("expected") == "p");
    }
  }

  SUBCASE("forward references are refused") {
    Step step{parse_formula("T -> p"), "R1a", {1}, phi_p};
    try {
      check_step(step, 1, no_hyps, no_earlier);
      FAIL("expected a premise error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PremiseNotFound);
      CHECK(e.message().find("earlier step") != std::string::npos);
    }
  }

  SUBCASE("a cited step must match the instantiated premise") {
    Step step{parse_formula("T -> p"), "R1a", {1}, phi_p};
    try {
      check_step(step, 2, no_hyps, {parse_formula("q")});
      FAIL("expected a premise error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PremiseNotFound);
      CHECK(e.detail().at("expected") == "p");
      CHECK(e.detail().at("found") == "q");
    }
  }

  SUBCASE("normalization bridges spelling differences") {
    // ~_|_ -> p and T -> p normalize identically.
    Step step{parse_formula("~_|_ -> p"), "R1a", {0}, phi_p};
    CHECK_NOTHROW(check_step(step, 1, {parse_formula("p")}, no_earlier));
  }

  SUBCASE("a biconditional premise occupies two consecutive slots") {
    Subst s{{"phi", parse_formula("p")},
            {"psi", parse_formula("q")},
            {"chi", parse_formula("r")}};
    Step step{parse_formula("(p &. r) -> (q &. r)"), "R7", {0, 0}, s};
    const std::vector<FormulaPtr> both{parse_formula("p -> q"), parse_formula("q -> p")};
    CHECK_NOTHROW(check_step(step, 1, both, no_earlier));

    const std::vector<FormulaPtr> one_direction{parse_formula("p -> q")};
    try {
      check_step(step, 1, one_direction, no_earlier);
      FAIL("expected a premise error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PremiseNotFound);
      CHECK(e.detail().at("premise") == 2);
      CHECK(e.detail().at("expected") == "(q -> p)");
    }
  }
}

TEST_CASE("shipped derivations are accepted") {
  for (const char* name : {"a6_fwd", "a6_bwd", "r11a", "r11b", "r12", "r13", "r14_fwd",
                           "r14_bwd"}) {
    CAPTURE(name);
    Derivation d =
        load_derivation(testing::data_file(std::string("derivations/") + name + ".json"));
    Report rep = check_derivation(d);
    CHECK(rep.pass());
    if (d.hypotheses.empty())
      CHECK(rep.summary == "accepted: the goal is a theorem");
    else
      CHECK(rep.summary == "accepted: the goal is derivable from the hypotheses");
  }
}

TEST_CASE("each mutant is rejected exactly at the mutated step") {
  struct Mutant {
    const char* file;
    const char* failing;
    bool goal_fails;
  };
  for (const Mutant& m : std::vector<Mutant>{
           {"a6_fwd_step2_subst", "step-2", false},
           {"a6_bwd_swapped_premises", "step-3", false},
           {"r11a_hypothesis", "step-2", false},
           {"r11b_wrong_rule", "step-1", false},
           {"r12_step3_formula", "step-3", true},
           {"r13_wrong_rule", "step-3", false},
           {"r14_fwd_subst", "step-2", false},
           {"r14_bwd_subst_swap", "step-1", false}}) {
    CAPTURE(m.file);
    Derivation d = load_derivation(
        testing::fixture_file(std::string("mutants/") + m.file + ".json"));
    Report rep = check_derivation(d);
    CHECK_FALSE(rep.pass());
    CHECK(rep.summary == "rejected");
    for (const Check& c : rep.checks) {
      CAPTURE(c.id);
      if (c.id == m.failing || (m.goal_fails && c.id == "goal"))
        CHECK_FALSE(c.pass);
      else
        CHECK(c.pass);
    }
  }
}

TEST_CASE("inserting an unrelated valid step does not break acceptance") {
  Json j = read_json(testing::data_file("derivations/r12.json"));
  Json inserted = Json{{"formula", "z -> T"}, {"by", "A3"}, {"subst", {{"phi", "z"}}}};
  Json steps = Json::array();
  steps.push_back(inserted);
  for (Json step : j["steps"]) {
    if (step.contains("premises"))
      for (Json& idx : step["premises"])
        if (idx.get<int>() > 0) idx = idx.get<int>() + 1;
    steps.push_back(step);
  }
  j["steps"] = steps;

  Report rep = check_derivation(Derivation::from_json(j));
  CHECK(rep.pass());
}

TEST_CASE("derivation files are validated structurally") {
  CHECK_THROWS_WITH_AS(Derivation::from_json(Json::array()), doctest::Contains("JSON object"),
                       Error);
  CHECK_THROWS_WITH_AS(Derivation::from_json(Json{{"steps", Json::array()}}),
                       doctest::Contains("goal"), Error);
  Json bad{{"goal", "p"}, {"steps", Json::array({Json{{"formula", "p"}}})}};
  CHECK_THROWS_WITH_AS(Derivation::from_json(bad), doctest::Contains("by"), Error);
  Json bad_premise{{"goal", "p"},
                   {"steps", Json::array({Json{{"formula", "p"},
                                               {"by", "R1b"},
                                               {"premises", Json::array({-1})}}})}};
  CHECK_THROWS_AS(Derivation::from_json(bad_premise), Error);
}

TEST_CASE("corpus construction enumerates valuations exhaustively") {
  auto lea = std::make_shared<Lea>(Lea::make(find_library("mv_chain_2")->alg));
  std::vector<CorpusModel> models = exhaustive_models(lea, "e", {"p", "q"});
  REQUIRE(models.size() == 9);
  std::set<std::pair<Elem, Elem>> seen;
  for (const CorpusModel& cm : models)
    seen.emplace(cm.model.valuation.at("p"), cm.model.valuation.at("q"));
  CHECK(seen.size() == 9);

  // Every effect algebra of size <= 5 in the library, all three-atom
  // valuations: 8+8+27+64+125+8+64+64+125.
  CHECK(standard_corpus({"p", "q", "r"}).size() == 493);
  CHECK(standard_corpus({"p"}, 3).size() == 2 + 2 + 3 + 2);
}

TEST_CASE("the soundness audit evaluates steps across the corpus") {
  std::vector<CorpusModel> corpus = standard_corpus({"p", "q"}, 4);

  SUBCASE("theorem derivations pass outright") {
    Derivation d = load_derivation(testing::data_file("derivations/a6_fwd.json"));
    Report rep = soundness_audit(d, corpus);
    CHECK(rep.pass());
    CHECK(rep.summary == "every step evaluates to 1 in every corpus model");
    CHECK(rep.meta.at("models_used") == corpus.size());
    CHECK(rep.meta.at("derivation_accepted") == true);
  }

  SUBCASE("hypotheses require explicit opt-in") {
    Derivation d = load_derivation(testing::data_file("derivations/r12.json"));
    CHECK_THROWS_AS(soundness_audit(d, corpus), Error);
    Report rep = soundness_audit(d, corpus, /*assume_hypotheses=*/true);
    CHECK(rep.pass());
    // Models where some hypothesis fails are skipped, so fewer are used.
    CHECK(rep.meta.at("models_used").get<std::size_t>() < corpus.size());
    CHECK(rep.meta.at("models_used").get<std::size_t>() > 0);
  }

  SUBCASE("an invalid step formula is caught with a concrete model") {
    Derivation d;
    d.goal = parse_formula("p -> q");
    d.steps.push_back(Step{parse_formula("p -> q"), "A1", {}, {}});
    Report rep = soundness_audit(d, corpus);
    CHECK_FALSE(rep.pass());
    CHECK(rep.summary == "some step takes a value below 1 in a corpus model");
    const Check* step1 = find_check(rep, "step-1");
    REQUIRE(step1 != nullptr);
    REQUIRE_FALSE(step1->pass);
    CHECK(step1->witnesses.at(0).contains("model"));
    CHECK(step1->witnesses.at(0).contains("valuation"));
  }
}

TEST_CASE("axiom instances are valid in every corpus model") {
  std::vector<CorpusModel> corpus = standard_corpus({"p", "q", "r"}, 4);
  std::mt19937 rng(20260823);
  std::size_t violations = 0;
  for (const SchemaDef* def :
       {find_schema("A1"), find_schema("A2"), find_schema("A3"), find_schema("A4"),
        find_schema("A5"), find_schema("A6")}) {
    REQUIRE(def != nullptr);
    for (int trial = 0; trial < 60; ++trial) {
      Subst s;
      for (const std::string& mv : def->metavars) s[mv] = random_formula(rng, 2);
      for (const FormulaPtr& pattern : def->conclusions) {
        FormulaPtr inst = instantiate(pattern, s);
        for (const CorpusModel& cm : corpus)
          if (!is_valid(inst, cm.model)) ++violations;
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("rules preserve validity model by model") {
  std::vector<CorpusModel> corpus = standard_corpus({"p", "q", "r"}, 4);
  std::mt19937 rng(987123);
  for (const char* rid :
       {"R1a", "R1b", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10"}) {
    CAPTURE(rid);
    const RuleDef* rule = find_rule(rid);
    REQUIRE(rule != nullptr);
    std::size_t fired = 0;
    std::size_t violations = 0;
    for (int trial = 0; trial < 120; ++trial) {
      Subst s;
      for (const std::string& mv : rule->metavars) s[mv] = random_formula(rng, 2);
      for (const RuleMode& mode : rule->modes) {
        std::vector<FormulaPtr> premises;
        premises.reserve(mode.premises.size());
        for (const FormulaPtr& p : mode.premises) premises.push_back(instantiate(p, s));
        std::vector<FormulaPtr> conclusions;
        conclusions.reserve(mode.conclusions.size());
        for (const FormulaPtr& c : mode.conclusions) conclusions.push_back(instantiate(c, s));
        for (const CorpusModel& cm : corpus) {
          bool premises_valid = true;
          for (const FormulaPtr& p : premises)
            if (!is_valid(p, cm.model)) {
              premises_valid = false;
              break;
            }
          if (!premises_valid) continue;
          ++fired;
          for (const FormulaPtr& c : conclusions)
            if (!is_valid(c, cm.model)) ++violations;
        }
      }
    }
    CHECK(violations == 0);
    CHECK(fired > 0);
  }
}
