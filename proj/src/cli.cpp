#include "lel/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lel/ci.hpp"
#include "lel/effect.hpp"
#include "lel/enumerate.hpp"
#include "lel/eval.hpp"
#include "lel/io.hpp"
#include "lel/kernel.hpp"
#include "lel/library.hpp"
#include "lel/weak.hpp"

namespace lel {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::UsageError:
    case Errc::BudgetExceeded:
      return kUsage;
    default:
      return kFail;
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void emit_report(std::ostream& out, std::ostream& err, const std::string& head,
                 const Report& rep) {
  emit(out, rep.to_json());
  err << head << ": " << (rep.pass() ? "PASS" : "FAIL") << " - " << rep.summary
      << "\n";
}

int cmd_audit(const std::string& path, const std::string& cls,
              const std::string& sasaki, std::ostream& out, std::ostream& err) {
  const std::string head = "audit " + path + " [" + cls + "]";
  if (cls == "ci") {
    CIStructure ci = CIStructure::from_json(read_json_file(path));
    Report rep = audit_ci(ci);
    rep.meta["input"] = path;
    rep.meta["class"] = cls;
    emit_report(out, err, head, rep);
    return rep.pass() ? kPass : kFail;
  }

  PartialAlgebra alg = PartialAlgebra::from_json(read_json_file(path));
  if (cls == "weak-lea") {
    Report rep = audit_weak_lea(alg);
    rep.meta["input"] = path;
    rep.meta["class"] = cls;
    emit_report(out, err, head, rep);
    return rep.pass() ? kPass : kFail;
  }

  Report rep = audit_effect_axioms(alg);
  if (rep.pass()) {
    const SasakiMode mode =
        sasaki == "fast" ? SasakiMode::Fast : SasakiMode::Audit;
    Lea lea = Lea::make(alg, mode);
    rep.absorb(audit_elaws(lea));
    rep.absorb(audit_lea_laws(lea));
    rep.summary = rep.pass()
                      ? "lattice effect algebra; all derived law suites hold"
                      : "lattice effect algebra with derived-law failures "
                        "(implementation bug)";
  }
  rep.meta["input"] = path;
  rep.meta["class"] = cls;
  emit_report(out, err, head, rep);
  return rep.pass() ? kPass : kFail;
}

int cmd_rd_profile(const std::string& path, std::ostream& out,
                   std::ostream& err) {
  PartialAlgebra alg = PartialAlgebra::from_json(read_json_file(path));
  WeakStructure w = make_weak(alg);
  Report rep = rd_profile(w);
  rep.meta["input"] = path;
  emit_report(out, err, "rd-profile " + path, rep);
  return rep.pass() ? kPass : kFail;
}

int cmd_eval(const std::string& model_path, const std::string& formula_text,
             bool verdict, std::ostream& out, std::ostream& err) {
  Model m = load_model(model_path);
  FormulaPtr f = parse_formula(formula_text);
  const Elem v = eval(f, m);
  const bool ok = v == m.lea->one();
  Json j;
  j["model"] = model_path;
  j["formula"] = print_formula(f);
  j["value"] = m.lea->label(v);
  j["valid"] = ok;
  emit(out, j);
  err << (verdict ? "valid " : "eval ") << model_path << ": "
      << print_formula(f) << " = " << m.lea->label(v)
      << (ok ? " (valid)" : " (not valid)") << "\n";
  if (!verdict) return kPass;
  return ok ? kPass : kFail;
}

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  Derivation d = Derivation::from_json(read_json_file(path));
  Report rep = check_derivation(d);
  rep.meta["input"] = path;
  emit_report(out, err, "check " + path, rep);
  return rep.pass() ? kPass : kFail;
}

int cmd_soundness(const std::string& path,
                  const std::vector<std::string>& corpus_names,
                  bool assume_hypotheses, std::ostream& out,
                  std::ostream& err) {
  Derivation d = Derivation::from_json(read_json_file(path));

  std::set<std::string> atom_set;
  auto gather = [&atom_set](const FormulaPtr& f) {
    for (auto& a : collect_atoms(f)) atom_set.insert(a);
  };
  gather(d.goal);
  for (const auto& h : d.hypotheses) gather(h);
  for (const auto& s : d.steps) gather(s.formula);
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());

  std::vector<CorpusModel> corpus;
  if (corpus_names.empty()) {
    corpus = standard_corpus(atoms);
  } else {
    for (const std::string& name : corpus_names) {
      const LibraryEntry* entry = find_library(name);
      if (!entry)
        throw Error(Errc::UsageError,
                    "\"" + name + "\" names no library algebra",
                    Json{{"name", name}});
      auto lea = std::make_shared<const Lea>(Lea::make(entry->alg));
      auto models = exhaustive_models(lea, name, atoms);
      corpus.insert(corpus.end(), std::make_move_iterator(models.begin()),
                    std::make_move_iterator(models.end()));
    }
  }

  Report rep = soundness_audit(d, corpus, assume_hypotheses);
  rep.meta["input"] = path;
  emit_report(out, err, "soundness " + path, rep);
  const bool accepted = rep.meta.value("derivation_accepted", false);
  return (rep.pass() && accepted) ? kPass : kFail;
}

int cmd_enumerate(const EnumerationTask& task, const std::string& cls_name,
                  const std::string& out_dir, std::ostream& out,
                  std::ostream& err) {
  std::vector<PartialAlgebra> algs = enumerate_algebras(task);

  Json j;
  j["class"] = cls_name;
  j["size"] = task.size;
  j["count"] = algs.size();
  if (out_dir.empty()) {
    Json arr = Json::array();
    for (const PartialAlgebra& a : algs) arr.push_back(a.to_json());
    j["algebras"] = arr;
  } else {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    Json files = Json::array();
    for (std::size_t i = 0; i < algs.size(); ++i) {
      char idx[8];
      std::snprintf(idx, sizeof idx, "%03zu", i + 1);
      const fs::path p = fs::path(out_dir) /
                         (cls_name + "_" + std::to_string(task.size) + "_" +
                          idx + ".json");
      std::ofstream file(p);
      if (!file)
        throw Error(Errc::UsageError, "cannot write " + p.string(),
                    Json{{"path", p.string()}});
      file << algs[i].to_json().dump(2) << "\n";
      files.push_back(p.string());
    }
    j["files"] = files;
  }
  emit(out, j);
  err << "enumerate [" << cls_name << ", size " << task.size << "]: "
      << algs.size() << " isomorphism class(es)\n";
  return kPass;
}

int cmd_countermodel(const std::string& formula_text, int max_size,
                     std::uint64_t node_budget, double time_limit,
                     std::ostream& out, std::ostream& err) {
  FormulaPtr f = parse_formula(formula_text);
  auto cm = find_countermodel(f, max_size, {}, node_budget, time_limit);
  Json j;
  j["formula"] = print_formula(f);
  j["max_size"] = max_size;
  if (cm) {
    Json c;
    c["algebra"] = cm->algebra.to_json();
    c["valuation"] = Json(cm->valuation);
    c["value"] = cm->value;
    j["countermodel"] = c;
    emit(out, j);
    err << "countermodel: found in a " << cm->algebra.size()
        << "-element algebra (value " << cm->value << ")\n";
    return kFail;
  }
  j["countermodel"] = nullptr;
  j["note"] = "no countermodel up to the size bound; this is bounded "
              "verification, not a validity proof";
  emit(out, j);
  err << "countermodel: none up to size " << max_size
      << " (bounded verification only)\n";
  return kPass;
}

int cmd_library(const std::string& name, std::ostream& out, std::ostream& err) {
  if (name.empty()) {
    Json arr = Json::array();
    for (const LibraryEntry& e : canonical_library()) {
      Json j;
      j["name"] = e.name;
      j["size"] = e.alg.size();
      j["weak_lea"] = e.expect_weak;
      j["lea"] = e.expect_lea;
      if (!e.note.empty()) j["note"] = e.note;
      arr.push_back(j);
    }
    emit(out, arr);
    err << "library: " << arr.size() << " algebras\n";
    return kPass;
  }
  const LibraryEntry* entry = find_library(name);
  if (!entry)
    throw Error(Errc::UsageError, "\"" + name + "\" names no library algebra",
                Json{{"name", name}});
  emit(out, entry->alg.to_json());
  err << "library " << name << ": " << entry->alg.size() << " elements";
  if (!entry->note.empty()) err << " - " << entry->note;
  err << "\n";
  return kPass;
}

int cmd_convert(const std::string& direction, const std::string& path,
                std::ostream& out, std::ostream& err) {
  if (direction == "lea-to-ci") {
    PartialAlgebra alg = PartialAlgebra::from_json(read_json_file(path));
    CIStructure ci = ci_from_lea(alg);
    emit(out, ci.to_json());
    err << "convert " << path << ": effect-algebra table -> product/arrow "
        << "tables\n";
    return kPass;
  }
  CIStructure ci = CIStructure::from_json(read_json_file(path));
  PartialAlgebra alg = lea_from_ci(ci);
  emit(out, alg.to_json());
  err << "convert " << path << ": product/arrow tables -> effect-algebra "
      << "table\n";
  return kPass;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = kPass;

  CLI::App app{"finite lattice effect algebras: audits, Sasaki semantics, "
               "proof checking, model search"};
  app.require_subcommand(1);

  // audit
  std::string audit_path, audit_class = "lea", audit_sasaki = "audit";
  CLI::App* audit = app.add_subcommand(
      "audit", "classify a table file and report every law verdict");
  audit->add_option("algebra", audit_path, "algebra (or CI-structure) file")
      ->required();
  audit->add_option("--class", audit_class, "audit class (default lea)")
      ->check(CLI::IsMember({"lea", "weak-lea", "ci"}));
  audit->add_option("--sasaki-mode", audit_sasaki,
                    "cross-check both Sasaki expressions or evaluate one")
      ->check(CLI::IsMember({"audit", "fast"}));
  audit->callback(
      [&] { code = cmd_audit(audit_path, audit_class, audit_sasaki, out, err); });

  // rd-profile
  std::string rd_path;
  CLI::App* rd = app.add_subcommand(
      "rd-profile", "evaluate the eight equivalent-for-effect-algebras "
                    "conditions on a weak structure");
  rd->add_option("algebra", rd_path, "algebra file")->required();
  rd->callback([&] { code = cmd_rd_profile(rd_path, out, err); });

  // eval / valid
  std::string eval_model, eval_formula;
  CLI::App* ev = app.add_subcommand("eval", "evaluate a formula in a model");
  ev->add_option("model", eval_model, "model file")->required();
  ev->add_option("formula", eval_formula, "formula text")->required();
  ev->callback([&] { code = cmd_eval(eval_model, eval_formula, false, out, err); });

  std::string valid_model, valid_formula;
  CLI::App* va = app.add_subcommand(
      "valid", "evaluate a formula and fail unless the value is 1");
  va->add_option("model", valid_model, "model file")->required();
  va->add_option("formula", valid_formula, "formula text")->required();
  va->callback(
      [&] { code = cmd_eval(valid_model, valid_formula, true, out, err); });

  // check
  std::string check_path;
  CLI::App* ch = app.add_subcommand("check", "verify a derivation file");
  ch->add_option("derivation", check_path, "derivation file")->required();
  ch->callback([&] { code = cmd_check(check_path, out, err); });

  // soundness
  std::string sound_path;
  std::vector<std::string> sound_corpus;
  bool sound_assume = false;
  CLI::App* so = app.add_subcommand(
      "soundness", "evaluate every step of a derivation over a model corpus");
  so->add_option("derivation", sound_path, "derivation file")->required();
  so->add_option("--corpus", sound_corpus,
                 "library algebra names (default: all effect algebras of "
                 "size <= 5)");
  so->add_flag("--assume-hypotheses", sound_assume,
               "restrict the corpus to models where every hypothesis is valid");
  so->callback([&] {
    code = cmd_soundness(sound_path, sound_corpus, sound_assume, out, err);
  });

  // enumerate
  EnumerationTask task;
  std::string enum_class, enum_out;
  CLI::App* en = app.add_subcommand(
      "enumerate", "list all algebras of a size up to isomorphism");
  en->add_option("--class", enum_class, "weak-lea or lea")
      ->required()
      ->check(CLI::IsMember({"lea", "weak-lea"}));
  en->add_option("--size", task.size, "carrier cardinality")->required();
  en->add_option("--out", enum_out, "directory for one file per algebra");
  en->add_option("--node-budget", task.node_budget, "search node cap");
  en->add_option("--time-limit-secs", task.time_limit_secs, "wall-clock cap");
  en->add_option("--shuffle-seed", task.shuffle_seed,
                 "permute internal work order (results unchanged)");
  en->callback([&] {
    task.cls = enum_class == "weak-lea" ? AlgClass::WeakLea : AlgClass::Lea;
    code = cmd_enumerate(task, enum_class, enum_out, out, err);
  });

  // countermodel
  std::string cm_formula;
  int cm_max_size = 0;
  std::uint64_t cm_budget = kNoNodeBudget;
  double cm_time = 0.0;
  CLI::App* cm = app.add_subcommand(
      "countermodel", "search enumerated effect algebras for a refutation");
  cm->add_option("formula", cm_formula, "formula text")->required();
  cm->add_option("--max-size", cm_max_size, "largest carrier to try")
      ->required();
  cm->add_option("--node-budget", cm_budget, "search node cap");
  cm->add_option("--time-limit-secs", cm_time, "wall-clock cap");
  cm->callback([&] {
    code = cmd_countermodel(cm_formula, cm_max_size, cm_budget, cm_time, out, err);
  });

  // library
  std::string lib_name;
  CLI::App* li = app.add_subcommand(
      "library", "list the reference algebras, or print one as JSON");
  li->add_option("name", lib_name, "algebra name");
  li->callback([&] { code = cmd_library(lib_name, out, err); });

  // convert
  std::string conv_dir, conv_path;
  CLI::App* co = app.add_subcommand(
      "convert", "translate between ⊕ tables and product/arrow tables");
  co->add_option("--direction", conv_dir, "lea-to-ci or ci-to-lea")
      ->required()
      ->check(CLI::IsMember({"lea-to-ci", "ci-to-lea"}));
  co->add_option("input", conv_path, "input file")->required();
  co->callback([&] { code = cmd_convert(conv_dir, conv_path, out, err); });

  std::vector<const char*> argv;
  argv.push_back("lel");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return CliResult{rc == 0 ? kPass : kUsage, out.str(), err.str()};
  } catch (const Error& e) {
    emit(out, e.to_json());
    err << e.what() << "\n";
    return CliResult{exit_for(e), out.str(), err.str()};
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return CliResult{kFail, out.str(), err.str()};
  }
  return CliResult{code, out.str(), err.str()};
}

}  // namespace lel
