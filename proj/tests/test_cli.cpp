// End-to-end command-line driver tests.  Every case calls run_cli in-process
// and asserts on the triple (exit code, JSON on stdout, summary on stderr).
// Exit-code contract: 0 verdict-pass, 1 verdict-fail, 2 usage/parse error.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include <lel/algebra.hpp>
#include <lel/cli.hpp>
#include <lel/library.hpp>

#include "support/paths.hpp"

using namespace lel;
namespace fs = std::filesystem;

namespace {

CliResult run(std::initializer_list<std::string> args) {
  return run_cli(std::vector<std::string>(args));
}

Json out_json(const CliResult& r) {
  REQUIRE(!r.out.empty());
  Json j = Json::parse(r.out, nullptr, /*allow_exceptions=*/false);
  REQUIRE(!j.is_discarded());
  return j;
}

const Json& find_check(const Json& rep, const std::string& id) {
  for (const Json& c : rep.at("checks"))
    if (c.at("id") == id) return c;
  static const Json missing;
  FAIL("no check with id ", id);
  return missing;
}

// A scratch directory, wiped at construction so reruns start clean.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& leaf)
      : path(fs::temp_directory_path() / leaf) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  REQUIRE(f.good());
  f << text;
}

}  // namespace

TEST_CASE("argument errors and help exit with the documented codes") {
  CHECK(run({}).code == 2);                       // a subcommand is required
  CHECK(run({"frobnicate"}).code == 2);           // unknown subcommand
  CHECK(run({"audit"}).code == 2);                // missing required positional
  CHECK(run({"enumerate", "--class", "lea"}).code == 2);  // missing --size
  CHECK(run({"enumerate", "--class", "chain", "--size", "3"}).code == 2);
  CHECK(run({"convert", "--direction", "sideways", "x.json"}).code == 2);

  CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("audit") != std::string::npos);
  CHECK(help.out.find("countermodel") != std::string::npos);

  CliResult missing = run({"audit", "/no/such/file.json"});
  CHECK(missing.code == 2);
  Json j = out_json(missing);
  CHECK(j.at("error") == "ParseError");
  CHECK(j.at("message") == "cannot open file");
  CHECK(missing.err.find("cannot open file") != std::string::npos);
}

TEST_CASE("audit separates the weak and full verdicts on the hexagon") {
  const std::string hex = testing::data_file("hexagon.json");

  CliResult weak = run({"audit", hex, "--class", "weak-lea"});
  CHECK(weak.code == 0);
  Json wj = out_json(weak);
  CHECK(wj.at("pass") == true);
  CHECK(wj.at("summary") == "weak lattice effect algebra");
  CHECK(wj.at("meta").at("class") == "weak-lea");
  CHECK(wj.at("meta").at("input") == hex);
  CHECK(weak.err.find(": PASS - ") != std::string::npos);

  CliResult full = run({"audit", hex});  // --class defaults to lea
  CHECK(full.code == 1);
  Json fj = out_json(full);
  CHECK(fj.at("pass") == false);
  const Json& e3 = find_check(fj, "E3");
  CHECK(e3.at("pass") == false);
  bool saw_a = false;
  for (const Json& w : e3.at("witnesses"))
    if (w.at("element") == "a") {
      saw_a = true;
      CHECK(w.at("kind") == "uniqueness");
      CHECK(w.at("completions") == Json::array({"b", "a'"}));
    }
  CHECK(saw_a);
  CHECK(full.err.find(": FAIL - ") != std::string::npos);
}

TEST_CASE("audit reports the octagon's missing orthosupplement") {
  const std::string oct = testing::data_file("octagon.json");

  CHECK(run({"audit", oct, "--class", "weak-lea"}).code == 0);

  CliResult full = run({"audit", oct, "--class", "lea"});
  CHECK(full.code == 1);
  Json j = out_json(full);
  const Json& e3 = find_check(j, "E3");
  CHECK(e3.at("pass") == false);
  bool saw_a = false;
  for (const Json& w : e3.at("witnesses"))
    if (w.at("kind") == "existence" && w.at("element") == "a") {
      saw_a = true;
      CHECK(w.at("partner") == "a'");
      CHECK(w.at("sum") == "c");
    }
  CHECK(saw_a);
}

TEST_CASE("audit handles CI structures and the Sasaki cross-check mode") {
  TempDir tmp("lel_cli_audit");

  CliResult dump = run({"library", "mv_chain_2"});
  REQUIRE(dump.code == 0);
  const std::string mv2 = tmp.file("mv2.json");
  write_file(mv2, dump.out);

  CliResult conv = run({"convert", "--direction", "lea-to-ci", mv2});
  REQUIRE(conv.code == 0);
  const std::string ci = tmp.file("mv2_ci.json");
  write_file(ci, conv.out);

  CliResult ci_audit = run({"audit", ci, "--class", "ci"});
  CHECK(ci_audit.code == 0);
  Json cj = out_json(ci_audit);
  CHECK(cj.at("pass") == true);
  CHECK(cj.at("summary") == "involutive CI-lattice");

  // A product/arrow file is not an effect-algebra table.
  CHECK(run({"audit", ci}).code == 2);

  // The Sasaki mode only changes internal evaluation, never the report.
  CliResult slow = run({"audit", mv2, "--sasaki-mode", "audit"});
  CliResult fast = run({"audit", mv2, "--sasaki-mode", "fast"});
  CHECK(slow.code == 0);
  CHECK(fast.code == 0);
  CHECK(slow.out == fast.out);
}

TEST_CASE("rd-profile is uniform on effect algebras and on the hexagon") {
  TempDir tmp("lel_cli_rd");
  const std::string mv2 = tmp.file("mv2.json");
  write_file(mv2, run({"library", "mv_chain_2"}).out);

  CliResult pass = run({"rd-profile", mv2});
  CHECK(pass.code == 0);
  Json pj = out_json(pass);
  CHECK(pj.at("summary") == "all eight conditions hold (uniform)");
  CHECK(pj.at("meta").at("uniform") == true);
  CHECK(pj.at("checks").size() == 8);

  CliResult fail = run({"rd-profile", testing::data_file("hexagon.json")});
  CHECK(fail.code == 1);
  Json fj = out_json(fail);
  CHECK(fj.at("summary") == "all eight conditions fail (uniform)");
  CHECK(fj.at("meta").at("uniform") == true);
}

TEST_CASE("eval reports values, valid turns them into a verdict") {
  TempDir tmp("lel_cli_eval");
  const std::string model = tmp.file("model.json");
  write_file(model, R"({"algebra": "mv_chain_3",
                        "valuation": {"p": "2/3", "q": "1/3"}})");

  CliResult ev = run({"eval", model, "p -> q"});
  CHECK(ev.code == 0);  // eval never fails on a mere non-valid value
  Json j = out_json(ev);
  CHECK(j.at("formula") == "(p -> q)");
  CHECK(j.at("value") == "2/3");
  CHECK(j.at("valid") == false);
  CHECK(ev.err.find("= 2/3 (not valid)") != std::string::npos);

  CHECK(run({"valid", model, "p -> q"}).code == 1);

  CliResult ok = run({"valid", model, "p -> p"});
  CHECK(ok.code == 0);
  CHECK(out_json(ok).at("value") == "1");
  CHECK(ok.err.find("(valid)") != std::string::npos);

  CliResult bad = run({"eval", model, "p <-> q"});
  CHECK(bad.code == 2);
  Json bj = out_json(bad);
  CHECK(bj.at("error") == "ParseError");
  CHECK(bj.at("detail").at("position") == 2);

  // An atom the valuation does not bind is a verdict-level failure (1),
  // not a usage error: the inputs parsed fine.
  CliResult unbound = run({"eval", model, "r -> r"});
  CHECK(unbound.code == 1);
  CHECK(out_json(unbound).at("error") == "UnboundAtom");
}

TEST_CASE("check accepts the shipped derivations and rejects a mutant") {
  CliResult good = run({"check", testing::data_file("derivations/r12.json")});
  CHECK(good.code == 0);
  Json gj = out_json(good);
  CHECK(gj.at("pass") == true);
  CHECK(good.err.find(": PASS - accepted") != std::string::npos);

  CHECK(run({"check", testing::data_file("derivations/a6_fwd.json")}).code == 0);

  CliResult bad =
      run({"check", testing::fixture_file("mutants/r12_step3_formula.json")});
  CHECK(bad.code == 1);
  Json bj = out_json(bad);
  CHECK(bj.at("pass") == false);
  CHECK(find_check(bj, "step-3").at("pass") == false);

  TempDir tmp("lel_cli_check");
  const std::string broken = tmp.file("broken.json");
  write_file(broken, R"({"steps": []})");
  CHECK(run({"check", broken}).code == 2);
}

TEST_CASE("soundness audits over default, named, and hypothesis corpora") {
  const std::string a6 = testing::data_file("derivations/a6_fwd.json");
  CliResult base = run({"soundness", a6});
  CHECK(base.code == 0);
  Json bj = out_json(base);
  CHECK(bj.at("meta").at("derivation_accepted") == true);
  CHECK(bj.at("meta").at("models_used") == bj.at("meta").at("models"));

  // A hypothesis-relative derivation demands the explicit flag.
  const std::string r12 = testing::data_file("derivations/r12.json");
  CliResult noflag = run({"soundness", r12});
  CHECK(noflag.code == 2);
  CHECK(out_json(noflag).at("error") == "UsageError");

  CliResult flagged = run({"soundness", r12, "--assume-hypotheses"});
  CHECK(flagged.code == 0);
  Json fj = out_json(flagged);
  CHECK(fj.at("meta").at("assume_hypotheses") == true);

  CliResult named = run({"soundness", r12, "--assume-hypotheses", "--corpus",
                         "mv_chain_2", "--corpus", "boolean_4"});
  CHECK(named.code == 0);
  Json nj = out_json(named);
  CHECK(nj.at("meta").at("models_used") <= nj.at("meta").at("models"));

  CHECK(run({"soundness", a6, "--corpus", "nope"}).code == 2);
}

TEST_CASE("enumerate prints deterministic counts and writes class files") {
  CliResult r3 = run({"enumerate", "--class", "lea", "--size", "3"});
  CHECK(r3.code == 0);
  Json j3 = out_json(r3);
  CHECK(j3.at("class") == "lea");
  CHECK(j3.at("size") == 3);
  CHECK(j3.at("count") == 1);
  REQUIRE(j3.at("algebras").size() == 1);
  CHECK(j3.at("algebras")[0].at("elements").size() == 3);
  CHECK(r3.err.find("1 isomorphism class") != std::string::npos);

  // Reruns and shuffled work orders emit byte-identical output.
  CHECK(run({"enumerate", "--class", "lea", "--size", "3"}).out == r3.out);
  CHECK(run({"enumerate", "--class", "lea", "--size", "3", "--shuffle-seed",
             "7"}).out == r3.out);

  Json w4 = out_json(run({"enumerate", "--class", "weak-lea", "--size", "4"}));
  CHECK(w4.at("count") == 7);

  TempDir tmp("lel_cli_enum");
  CliResult files = run({"enumerate", "--class", "lea", "--size", "4", "--out",
                         tmp.path.string()});
  CHECK(files.code == 0);
  Json fj = out_json(files);
  CHECK(!fj.contains("algebras"));
  REQUIRE(fj.at("files").size() == 3);
  CHECK(fs::path(fj.at("files")[0].get<std::string>()).filename() ==
        "lea_4_001.json");
  for (const Json& name : fj.at("files")) {
    std::ifstream in(name.get<std::string>());
    REQUIRE(in.good());
    Json alg_json = Json::parse(in);
    PartialAlgebra alg = PartialAlgebra::from_json(alg_json);
    CHECK(alg.size() == 4);
  }

  CHECK(run({"enumerate", "--class", "lea", "--size", "9"}).code == 2);
  CliResult starved = run({"enumerate", "--class", "weak-lea", "--size", "5",
                           "--node-budget", "1"});
  CHECK(starved.code == 2);
  CHECK(out_json(starved).at("error") == "BudgetExceeded");
}

TEST_CASE("countermodel finds refutations and reports bounded verification") {
  CliResult none = run({"countermodel", "p -> p", "--max-size", "4"});
  CHECK(none.code == 0);
  Json nj = out_json(none);
  CHECK(nj.at("countermodel").is_null());
  CHECK(nj.at("note").get<std::string>().find("bounded") != std::string::npos);
  CHECK(none.err.find("none up to size 4") != std::string::npos);

  CliResult atom = run({"countermodel", "p", "--max-size", "3"});
  CHECK(atom.code == 1);
  Json aj = out_json(atom);
  CHECK(aj.at("countermodel").at("valuation").at("p") == "0");
  CHECK(aj.at("countermodel").at("value") == "0");
  CHECK(aj.at("countermodel").at("algebra").at("elements").size() == 2);
  CHECK(atom.err.find("found in a 2-element algebra") != std::string::npos);

  CliResult dist = run({"countermodel",
                        "(p & (q | r)) -> ((p & q) | (p & r))",
                        "--max-size", "5"});
  CHECK(dist.code == 1);
  CHECK(out_json(dist).at("countermodel").at("algebra").at("elements").size()
        == 5);

  CHECK(run({"countermodel", "p &", "--max-size", "3"}).code == 2);
  CHECK(run({"countermodel", "p", "--max-size", "12"}).code == 2);
}

TEST_CASE("library lists the catalogue and dumps single algebras") {
  CliResult list = run({"library"});
  CHECK(list.code == 0);
  Json arr = out_json(list);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 20);
  CHECK(arr[0].at("name") == "two_chain");
  bool saw_hex = false;
  for (const Json& e : arr)
    if (e.at("name") == "hexagon") {
      saw_hex = true;
      CHECK(e.at("size") == 6);
      CHECK(e.at("weak_lea") == true);
      CHECK(e.at("lea") == false);
      CHECK(!e.at("note").get<std::string>().empty());
    }
  CHECK(saw_hex);
  CHECK(list.err == "library: 20 algebras\n");

  CliResult one = run({"library", "mo_2"});
  CHECK(one.code == 0);
  PartialAlgebra alg = PartialAlgebra::from_json(out_json(one));
  CHECK(alg.same_table(find_library("mo_2")->alg));
  CHECK(one.err.find("library mo_2: 6 elements") != std::string::npos);

  CHECK(run({"library", "nope"}).code == 2);
}

TEST_CASE("convert round-trips tables and flags construction-law failures") {
  TempDir tmp("lel_cli_convert");
  const std::string mv2 = tmp.file("mv2.json");
  write_file(mv2, run({"library", "mv_chain_2"}).out);

  CliResult to_ci = run({"convert", "--direction", "lea-to-ci", mv2});
  CHECK(to_ci.code == 0);
  Json cj = out_json(to_ci);
  CHECK(cj.contains("dot"));
  CHECK(cj.contains("arrow"));
  const std::string ci = tmp.file("mv2_ci.json");
  write_file(ci, to_ci.out);

  CliResult back = run({"convert", "--direction", "ci-to-lea", ci});
  CHECK(back.code == 0);
  PartialAlgebra round = PartialAlgebra::from_json(out_json(back));
  CHECK(round.same_table(find_library("mv_chain_2")->alg));

  // A mutated product/arrow file trips the construction-law audit: that is
  // a verdict about the input, so the exit code is 1, not a usage error.
  CliResult bad = run({"convert", "--direction", "ci-to-lea",
                       testing::fixture_file("cw2_violation.json")});
  CHECK(bad.code == 1);
  Json bj = out_json(bad);
  CHECK(bj.at("error") == "CwViolation");
  CHECK(bj.at("detail").at("law") == "cw2");

  // Converting a weak-only structure fails the effect-algebra precondition.
  CliResult hex = run({"convert", "--direction", "lea-to-ci",
                       testing::data_file("hexagon.json")});
  CHECK(hex.code == 1);
  CHECK(out_json(hex).at("error") == "NotALEA");
}
