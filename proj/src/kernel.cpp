#include "lel/kernel.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "lel/library.hpp"

namespace lel {

namespace {

void collect_metavars(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->conn == Conn::Atom) {
    out.insert(f->atom);
    return;
  }
  collect_metavars(f->lhs, out);
  collect_metavars(f->rhs, out);
}

SchemaDef make_schema(const char* id, std::vector<const char*> conclusions) {
  SchemaDef d;
  d.id = id;
  std::set<std::string> mv;
  for (const char* text : conclusions) {
    FormulaPtr p = parse_formula(text);
    collect_metavars(p, mv);
    d.conclusions.push_back(std::move(p));
  }
  d.metavars.assign(mv.begin(), mv.end());
  return d;
}

RuleMode make_mode(std::vector<const char*> premises,
                   std::vector<const char*> conclusions,
                   std::set<std::string>& mv) {
  RuleMode m;
  for (const char* text : premises) {
    FormulaPtr p = parse_formula(text);
    collect_metavars(p, mv);
    m.premises.push_back(std::move(p));
  }
  for (const char* text : conclusions) {
    FormulaPtr p = parse_formula(text);
    collect_metavars(p, mv);
    m.conclusions.push_back(std::move(p));
  }
  return m;
}

RuleDef make_rule(const char* id, std::vector<const char*> premises,
                  std::vector<const char*> conclusions) {
  RuleDef d;
  d.id = id;
  std::set<std::string> mv;
  d.modes.push_back(make_mode(std::move(premises), std::move(conclusions), mv));
  d.metavars.assign(mv.begin(), mv.end());
  return d;
}

RuleDef make_rule2(const char* id, std::vector<const char*> premises_a,
                   std::vector<const char*> conclusions_a,
                   std::vector<const char*> premises_b,
                   std::vector<const char*> conclusions_b) {
  RuleDef d;
  d.id = id;
  std::set<std::string> mv;
  d.modes.push_back(make_mode(std::move(premises_a), std::move(conclusions_a), mv));
  d.modes.push_back(make_mode(std::move(premises_b), std::move(conclusions_b), mv));
  d.metavars.assign(mv.begin(), mv.end());
  return d;
}

std::vector<SchemaDef> build_schema_table() {
  std::vector<SchemaDef> t;
  t.push_back(make_schema("A1", {"phi -> phi"}));
  t.push_back(make_schema("A2", {"phi -> ~~phi", "~~phi -> phi"}));
  t.push_back(make_schema("A3", {"phi -> T"}));
  t.push_back(make_schema("A4", {"(phi & psi) -> phi"}));
  t.push_back(make_schema("A5", {"(phi & psi) -> psi"}));
  // Derived lemma: phi <-> phi &. T.
  t.push_back(make_schema("A6", {"phi -> (phi &. T)", "(phi &. T) -> phi"}));
  return t;
}

std::vector<RuleDef> build_rule_table() {
  std::vector<RuleDef> t;
  t.push_back(make_rule("R1a", {"phi"}, {"T -> phi"}));
  t.push_back(make_rule("R1b", {"T -> phi"}, {"phi"}));
  t.push_back(make_rule("R2", {"phi -> psi", "psi -> chi"}, {"phi -> chi"}));
  t.push_back(make_rule("R3", {"phi -> psi"}, {"~psi -> ~phi"}));
  t.push_back(make_rule("R4", {"phi -> psi"},
                        {"(~phi -> psi) -> (~psi -> phi)",
                         "(~psi -> phi) -> (~phi -> psi)"}));
  t.push_back(make_rule("R5", {"phi -> psi"}, {"phi -> (~phi -> psi)"}));
  t.push_back(
      make_rule("R6", {"phi -> psi"}, {"(chi &. phi) -> (chi &. psi)"}));
  t.push_back(make_rule("R7", {"phi -> psi", "psi -> phi"},
                        {"(phi &. chi) -> (psi &. chi)",
                         "(psi &. chi) -> (phi &. chi)"}));
  t.push_back(
      make_rule("R8", {"phi -> psi", "phi -> chi"}, {"phi -> (psi & chi)"}));
  t.push_back(make_rule("R9",
                        {"phi -> ~psi", "phi -> ~chi", "(~phi -> psi) -> ~chi"},
                        {"(~phi -> chi) -> ~psi"}));
  t.push_back(make_rule("R10", {"~psi -> chi", "~phi -> (psi &. chi)"},
                        {"(phi &. (psi &. chi)) -> ((phi &. psi) &. chi)",
                         "((phi &. psi) &. chi) -> (phi &. (psi &. chi))"}));
  // Derived rules.
  t.push_back(make_rule("R11a", {"phi"}, {"phi -> T", "T -> phi"}));
  t.push_back(make_rule("R11b", {"phi -> T", "T -> phi"}, {"phi"}));
  t.push_back(make_rule("R12", {"phi", "phi -> psi"}, {"psi"}));
  t.push_back(make_rule("R13", {"phi"}, {"psi -> phi"}));
  // Stated as an equivalence of assertions; each direction is a mode.
  t.push_back(make_rule2("R14", {"phi -> psi"}, {"phi -> (phi & psi)"},
                         {"phi -> (phi & psi)"}, {"phi -> psi"}));
  return t;
}

FormulaPtr rebuild(Conn c, FormulaPtr l, FormulaPtr r) {
  switch (c) {
    case Conn::Implies:
      return Formula::implies(std::move(l), std::move(r));
    case Conn::SConj:
      return Formula::sconj(std::move(l), std::move(r));
    case Conn::SDisj:
      return Formula::sdisj(std::move(l), std::move(r));
    case Conn::Meet:
      return Formula::meet(std::move(l), std::move(r));
    case Conn::Join:
      return Formula::join(std::move(l), std::move(r));
    default:
      throw Error(Errc::InternalInconsistency,
                  "rebuild called with a non-binary connective");
  }
}

}  // namespace

const std::vector<SchemaDef>& schema_table() {
  static const std::vector<SchemaDef> t = build_schema_table();
  return t;
}

const std::vector<RuleDef>& rule_table() {
  static const std::vector<RuleDef> t = build_rule_table();
  return t;
}

const SchemaDef* find_schema(const std::string& id) {
  for (const SchemaDef& s : schema_table())
    if (s.id == id) return &s;
  return nullptr;
}

const RuleDef* find_rule(const std::string& id) {
  for (const RuleDef& r : rule_table())
    if (r.id == id) return &r;
  return nullptr;
}

FormulaPtr instantiate(const FormulaPtr& pattern, const Subst& s) {
  switch (pattern->conn) {
    case Conn::Atom: {
      auto it = s.find(pattern->atom);
      if (it == s.end())
        throw Error(Errc::MissingMetavariable,
                    "substitution does not bind metavariable \"" +
                        pattern->atom + "\"",
                    Json{{"metavariable", pattern->atom}});
      return it->second;
    }
    case Conn::Bottom:
    case Conn::Top:
      return pattern;
    case Conn::Neg:
      return Formula::neg(instantiate(pattern->lhs, s));
    default:
      return rebuild(pattern->conn, instantiate(pattern->lhs, s),
                     instantiate(pattern->rhs, s));
  }
}

std::vector<FormulaPtr> instantiate_schema(const std::string& id,
                                           const Subst& s) {
  const SchemaDef* sch = find_schema(id);
  if (!sch)
    throw Error(Errc::UnknownRule, "\"" + id + "\" names no axiom schema",
                Json{{"by", id}});
  std::vector<FormulaPtr> out;
  for (const FormulaPtr& c : sch->conclusions) out.push_back(instantiate(c, s));
  return out;
}

namespace {

// Does `asserted` (already normalized) match some conclusion pattern of
// `mode` under `s`?
bool conclusion_matches(const RuleMode& mode, const Subst& s,
                        const FormulaPtr& asserted) {
  for (const FormulaPtr& c : mode.conclusions)
    if (formulas_equal(normalize(instantiate(c, s)), asserted)) return true;
  return false;
}

Json conclusion_instances(const RuleMode& mode, const Subst& s) {
  Json a = Json::array();
  for (const FormulaPtr& c : mode.conclusions)
    a.push_back(print_formula(instantiate(c, s)));
  return a;
}

}  // namespace

void check_step(const Step& step, std::size_t index_1based,
                const std::vector<FormulaPtr>& hypotheses,
                const std::vector<FormulaPtr>& earlier) {
  const FormulaPtr asserted = normalize(step.formula);

  if (const SchemaDef* sch = find_schema(step.by)) {
    if (!step.premises.empty())
      throw Error(Errc::UsageError,
                  "\"" + step.by + "\" is an axiom schema and takes no premises",
                  Json{{"by", step.by}});
    Json instances = Json::array();
    for (const FormulaPtr& c : sch->conclusions) {
      FormulaPtr inst = instantiate(c, step.subst);
      if (formulas_equal(normalize(inst), asserted)) return;
      instances.push_back(print_formula(inst));
    }
    throw Error(Errc::ConclusionMismatch,
                "step formula matches no instance of \"" + step.by + "\"",
                Json{{"by", step.by},
                     {"formula", print_formula(step.formula)},
                     {"instances", instances}});
  }

  const RuleDef* rule = find_rule(step.by);
  if (!rule)
    throw Error(Errc::UnknownRule,
                "\"" + step.by + "\" names no axiom schema or rule",
                Json{{"by", step.by}});

  // Try each mode; keep the failure from the mode that got furthest
  // (conclusion matched > conclusion mismatched) for the final message.
  std::optional<Error> best;
  int best_rank = -1;
  for (const RuleMode& mode : rule->modes) {
    if (!conclusion_matches(mode, step.subst, asserted)) {
      if (best_rank < 0) {
        best_rank = 0;
        best = Error(Errc::ConclusionMismatch,
                     "step formula matches no conclusion of \"" + step.by + "\"",
                     Json{{"by", step.by},
                          {"formula", print_formula(step.formula)},
                          {"instances",
                           conclusion_instances(rule->modes.front(), step.subst)}});
      }
      continue;
    }
    if (step.premises.size() != mode.premises.size()) {
      if (best_rank < 1) {
        best_rank = 1;
        best = Error(
            Errc::PremiseNotFound,
            "\"" + step.by + "\" takes " +
                std::to_string(mode.premises.size()) + " premise(s); " +
                std::to_string(step.premises.size()) + " listed",
            Json{{"by", step.by},
                 {"required", mode.premises.size()},
                 {"listed", step.premises.size()}});
      }
      continue;
    }
    bool premises_ok = true;
    for (std::size_t i = 0; i < mode.premises.size(); ++i) {
      const FormulaPtr want_raw = instantiate(mode.premises[i], step.subst);
      const FormulaPtr want = normalize(want_raw);
      const int idx = step.premises[i];
      std::optional<Error> err;
      if (idx == 0) {
        bool found = false;
        for (const FormulaPtr& h : hypotheses)
          if (formulas_equal(normalize(h), want)) {
            found = true;
            break;
          }
        if (!found)
          err = Error(Errc::PremiseNotFound,
                      "no hypothesis matches premise " + std::to_string(i + 1) +
                          " of \"" + step.by + "\"",
                      Json{{"by", step.by},
                           {"premise", i + 1},
                           {"expected", print_formula(want_raw)}});
      } else if (idx < 0 || static_cast<std::size_t>(idx) >= index_1based) {
        err = Error(Errc::PremiseNotFound,
                    "premise index " + std::to_string(idx) +
                        " does not reference an earlier step",
                    Json{{"by", step.by}, {"premise", i + 1}, {"index", idx}});
      } else {
        const FormulaPtr& cited = earlier[static_cast<std::size_t>(idx) - 1];
        if (!formulas_equal(normalize(cited), want))
          err = Error(Errc::PremiseNotFound,
                      "step " + std::to_string(idx) +
                          " does not match premise " + std::to_string(i + 1) +
                          " of \"" + step.by + "\"",
                      Json{{"by", step.by},
                           {"premise", i + 1},
                           {"index", idx},
                           {"expected", print_formula(want_raw)},
                           {"found", print_formula(cited)}});
      }
      if (err) {
        premises_ok = false;
        if (best_rank < 2) {
          best_rank = 2;
          best = std::move(*err);
        }
        break;
      }
    }
    if (premises_ok) return;
  }
  throw *best;
}

Derivation Derivation::from_json(const Json& j) {
  if (!j.is_object())
    throw Error(Errc::ParseError, "derivation file must be a JSON object");

  auto parse_named = [](const Json& v, const std::string& what) -> FormulaPtr {
    if (!v.is_string())
      throw Error(Errc::ParseError, what + " must be a formula string");
    try {
      return parse_formula(v.get<std::string>());
    } catch (const Error& e) {
      Json detail = e.detail();
      if (!detail.is_object()) detail = Json::object();
      detail["in"] = what;
      throw Error(e.code(), what + ": " + e.message(), detail);
    }
  };

  Derivation d;
  if (!j.contains("goal"))
    throw Error(Errc::ParseError, "derivation file lacks \"goal\"");
  d.goal = parse_named(j.at("goal"), "goal");

  if (j.contains("hypotheses")) {
    const Json& hs = j.at("hypotheses");
    if (!hs.is_array())
      throw Error(Errc::ParseError, "\"hypotheses\" must be an array");
    for (std::size_t i = 0; i < hs.size(); ++i)
      d.hypotheses.push_back(
          parse_named(hs[i], "hypothesis " + std::to_string(i + 1)));
  }

  if (!j.contains("steps") || !j.at("steps").is_array())
    throw Error(Errc::ParseError,
                "derivation file lacks a \"steps\" array");
  const Json& steps = j.at("steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Json& sj = steps[i];
    const std::string where = "step " + std::to_string(i + 1);
    if (!sj.is_object())
      throw Error(Errc::ParseError, where + " must be an object");
    Step s;
    if (!sj.contains("formula"))
      throw Error(Errc::ParseError, where + " lacks \"formula\"");
    s.formula = parse_named(sj.at("formula"), where + " formula");
    if (!sj.contains("by") || !sj.at("by").is_string())
      throw Error(Errc::ParseError, where + " lacks a \"by\" rule name");
    s.by = sj.at("by").get<std::string>();
    if (sj.contains("premises")) {
      const Json& ps = sj.at("premises");
      if (!ps.is_array())
        throw Error(Errc::ParseError, where + ": \"premises\" must be an array");
      for (const Json& p : ps) {
        if (!p.is_number_integer() || p.get<int>() < 0)
          throw Error(Errc::ParseError,
                      where + ": premise indices must be non-negative integers");
        s.premises.push_back(p.get<int>());
      }
    }
    if (sj.contains("subst")) {
      const Json& sub = sj.at("subst");
      if (!sub.is_object())
        throw Error(Errc::ParseError, where + ": \"subst\" must be an object");
      for (auto it = sub.begin(); it != sub.end(); ++it)
        s.subst[it.key()] = parse_named(
            it.value(), where + " substitution for \"" + it.key() + "\"");
    }
    d.steps.push_back(std::move(s));
  }
  return d;
}

Report check_derivation(const Derivation& d) {
  Report rep;
  rep.subject = "derivation";
  rep.meta["goal"] = print_formula(d.goal);
  Json hyps = Json::array();
  for (const FormulaPtr& h : d.hypotheses) hyps.push_back(print_formula(h));
  rep.meta["hypotheses"] = hyps;
  rep.meta["steps"] = d.steps.size();
  rep.meta["certifies"] =
      d.hypotheses.empty() ? "theoremhood" : "derivability from hypotheses";

  std::vector<FormulaPtr> earlier;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    Check& c = rep.add("step-" + std::to_string(i + 1));
    try {
      check_step(d.steps[i], i + 1, d.hypotheses, earlier);
      c.info = Json{{"by", d.steps[i].by},
                    {"formula", print_formula(d.steps[i].formula)}};
    } catch (const Error& e) {
      c.fail(e.to_json());
    }
    // A rejected step still enters the pool: later steps get their own
    // verdict on their own merits, and overall acceptance already requires
    // every step to pass.
    earlier.push_back(d.steps[i].formula);
  }

  Check& goal = rep.add("goal");
  if (d.steps.empty()) {
    goal.fail(Json{{"reason", "derivation has no steps"}});
  } else if (!formulas_equal(normalize(d.goal),
                             normalize(d.steps.back().formula))) {
    goal.fail(Json{{"reason", "goal differs from the final step"},
                   {"goal", print_formula(d.goal)},
                   {"final", print_formula(d.steps.back().formula)}});
  }

  if (rep.pass())
    rep.summary = d.hypotheses.empty()
                      ? "accepted: the goal is a theorem"
                      : "accepted: the goal is derivable from the hypotheses";
  else
    rep.summary = "rejected";
  return rep;
}

std::vector<CorpusModel> exhaustive_models(
    std::shared_ptr<const Lea> lea, const std::string& name,
    const std::vector<std::string>& atoms) {
  const std::size_t n = static_cast<std::size_t>(lea->size());
  const std::size_t k = atoms.size();
  std::vector<CorpusModel> out;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    CorpusModel cm;
    cm.model.lea = lea;
    std::string label = name;
    if (k > 0) label += "[";
    for (std::size_t i = 0; i < k; ++i) {
      cm.model.valuation[atoms[i]] = static_cast<Elem>(idx[i]);
      label += atoms[i] + "=" + lea->label(static_cast<Elem>(idx[i]));
      label += (i + 1 < k) ? "," : "]";
    }
    cm.name = std::move(label);
    out.push_back(std::move(cm));
    std::size_t i = 0;
    while (i < k && ++idx[i] == n) {
      idx[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return out;
}

std::vector<CorpusModel> standard_corpus(const std::vector<std::string>& atoms,
                                         std::size_t max_size) {
  std::vector<CorpusModel> out;
  for (const LibraryEntry* e : canonical_leas()) {
    if (static_cast<std::size_t>(e->alg.size()) > max_size) continue;
    auto lea = std::make_shared<const Lea>(Lea::make(e->alg));
    auto models = exhaustive_models(lea, e->name, atoms);
    out.insert(out.end(), std::make_move_iterator(models.begin()),
               std::make_move_iterator(models.end()));
  }
  return out;
}

Report soundness_audit(const Derivation& d,
                       const std::vector<CorpusModel>& corpus,
                       bool assume_hypotheses) {
  if (!d.hypotheses.empty() && !assume_hypotheses)
    throw Error(Errc::UsageError,
                "derivation has hypotheses; their steps are only "
                "hypothesis-relative, pass --assume-hypotheses to audit "
                "models satisfying them",
                Json{{"hypotheses", d.hypotheses.size()}});

  Report rep;
  rep.subject = "soundness";
  rep.meta["goal"] = print_formula(d.goal);
  rep.meta["steps"] = d.steps.size();
  rep.meta["models"] = corpus.size();
  rep.meta["derivation_accepted"] = check_derivation(d).pass();
  rep.meta["assume_hypotheses"] = assume_hypotheses;

  for (std::size_t i = 0; i < d.steps.size(); ++i)
    rep.add("step-" + std::to_string(i + 1));

  std::size_t used = 0;
  for (const CorpusModel& cm : corpus) {
    if (assume_hypotheses && !d.hypotheses.empty()) {
      bool all = true;
      for (const FormulaPtr& h : d.hypotheses)
        if (!is_valid(h, cm.model)) {
          all = false;
          break;
        }
      if (!all) continue;
    }
    ++used;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      const Elem v = eval(d.steps[i].formula, cm.model);
      Check& c = rep.checks[i];
      c.info = Json{{"formula", print_formula(d.steps[i].formula)}};
      if (v != cm.model.lea->one()) {
        Json valuation = Json::object();
        for (const auto& [atom, e] : cm.model.valuation)
          valuation[atom] = cm.model.lea->label(e);
        c.fail(Json{{"model", cm.name},
                    {"valuation", valuation},
                    {"value", cm.model.lea->label(v)}});
      }
    }
  }
  rep.meta["models_used"] = used;

  if (rep.pass())
    rep.summary = "every step evaluates to 1 in every corpus model";
  else
    rep.summary = "some step takes a value below 1 in a corpus model";
  return rep;
}

}  // namespace lel
