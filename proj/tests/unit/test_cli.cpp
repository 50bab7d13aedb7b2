#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "parsmash/errors.hpp"

using namespace parsmash;
using namespace parsmash::cli;

namespace {

std::string example(const std::string& name) { return std::string(PARSMASH_EXAMPLES_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json run(const std::string& command, const std::string& file, int expect_code, Options o = {}) {
  Outcome out = execute(command, example(file), o, Format::json);
  CHECK(out.code == expect_code);
  return json::parse(out.output);
}

bool has_witness(const json& report, const std::string& witness) {
  for (const auto& c : report["checks"])
    if (c.value("witness", "") == witness) return true;
  return false;
}

}  // namespace

TEST_CASE("hpar on Z2 with coefficients B") {
  json r = run("hpar", "z2_hpar.json", exit_ok);
  CHECK(r["task"] == "hpar");
  CHECK(r["dimensions"]["H"][0] == 2);
}

TEST_CASE("validate rejects the non-associative example with the exact witness") {
  json r = run("validate", "non_associative.json", exit_check_failed);
  CHECK(has_witness(r, "(uu)u = 0, u(uu) = xyδ_g"));
}

TEST_CASE("kpar on the trivial group") {
  json r = run("kpar", "trivial_kpar.json", exit_ok);
  CHECK(r["dimensions"]["B"] == 1);
  CHECK(r["dimensions"]["Kpar"] == 1);
  CHECK(r["dimensions"]["IG"] == 0);
}

TEST_CASE("run executes the task list in order") {
  Outcome out = execute("run", example("kk_partial_z2.json"), {}, Format::json);
  CHECK(out.code == exit_ok);
  json r = json::parse(out.output);
  REQUIRE(r["reports"].is_array());
  std::vector<std::string> tasks;
  for (const auto& rep : r["reports"]) tasks.push_back(rep["task"]);
  CHECK(tasks == std::vector<std::string>{"validate", "smash", "hochschild", "spectral-check"});
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* file : {"kk_partial_z2.json", "z2_hpar.json", "dual_numbers_sign_z2.json", "boolean_lattice.json"}) {
    CAPTURE(file);
    Outcome a = execute("run", example(file), {}, Format::json);
    Outcome b = execute("run", example(file), {}, Format::json);
    CHECK(a.output == b.output);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("smash output re-ingests as an algebra block") {
  json r = run("smash", "kk_partial_z2.json", exit_ok);
  json doc = {{"field", "Q"}, {"group", {{"type", "cyclic"}, {"n", 1}}}, {"algebra", r["data"]["algebra"]}};
  ProblemReader in(doc, std::nullopt);
  AlgebraPtr a = in.algebra();
  CHECK(a->dim() == 3);
  CHECK(associativity_check(*a).ok());
  CHECK(json(encode(*a)) == r["data"]["algebra"]);
}

TEST_CASE("input errors carry a JSON pointer and exit 2") {
  Options o;
  Outcome bad = execute_document("kpar", R"({"field":"Q","group":{"type":"cyclic","n":"x"}})", o, Format::json);
  CHECK(bad.code == exit_input_error);
  json e = json::parse(bad.output);
  CHECK(e["error"]["path"] == "/group/n");

  Outcome notjson = execute_document("kpar", "{", o, Format::json);
  CHECK(notjson.code == exit_input_error);

  Outcome field = execute_document("kpar", R"({"field":"F4","group":{"type":"cyclic","n":2}})", o, Format::json);
  CHECK(field.code == exit_input_error);

  Outcome missing = execute("kpar", example("does_not_exist.json"), o, Format::json);
  CHECK(missing.code == exit_input_error);

  Outcome unit = execute_document(
      "validate",
      R"({"field":"Q","group":{"type":"cyclic","n":1},
          "algebra":{"dim":2,"unit":[0,1],"structure":[[[1,0],[0,1]],[[0,1],[1,0]]]}})",
      o, Format::json);
  CHECK(unit.code == exit_check_failed);
}

TEST_CASE("budget overrun is an input-side error") {
  Options o;
  o.budget = 1;
  o.max_degree = 3;
  Outcome out = execute("hochschild", example("dual_numbers_f2.json"), o, Format::json);
  CHECK(out.code == exit_input_error);
  CHECK(json::parse(out.output)["error"]["code"] == "BudgetExceeded");
}

TEST_CASE("field override and TSV output") {
  Options o;
  o.field = "F2";
  Outcome out = execute("hpar", example("z2_hpar.json"), o, Format::tsv);
  CHECK(out.code == exit_ok);
  CHECK(out.output.find("hpar") != std::string::npos);
  CHECK(out.output.find('\t') != std::string::npos);
}

TEST_CASE("digest covers the options") {
  json doc = json::parse(slurp(example("z2_hpar.json")));
  Options a, b;
  b.field = "F2";
  CHECK(inputs_digest(doc, a) != inputs_digest(doc, b));
  CHECK(inputs_digest(doc, a) == inputs_digest(doc, a));
  CHECK(inputs_digest(doc, a).size() == 64);
}

TEST_CASE("orthogonalize") {
  json r = run("orthogonalize", "boolean_lattice.json", exit_ok);
  for (const auto& c : r["checks"]) CHECK(c["status"] == "pass");
}
