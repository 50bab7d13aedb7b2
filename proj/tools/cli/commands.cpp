#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "parsmash/errors.hpp"

namespace parsmash::cli {

namespace {

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json j = {{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    out.push_back(std::move(j));
  }
  return out;
}

void append(std::vector<Check>& out, const std::vector<Check>& more, const std::string& prefix = {}) {
  for (const auto& c : more) out.push_back({prefix + c.name, c.status, c.witness});
}

Check construction_failure(const std::string& what, const Error& e) {
  return fail(what, e.code() + (e.witness().empty() ? "" : ": " + e.witness()));
}

Check downgrade(Check c, CheckMode mode) {
  if (mode == CheckMode::warn && c.status == Status::fail) c.status = Status::warn;
  return c;
}

std::size_t param(const json& params, const char* key, std::size_t fallback) {
  if (!params.contains(key)) return fallback;
  if (!params[key].is_number_integer() || params[key].get<int64_t>() < 0)
    throw InputError("expected a non-negative integer", std::string("/tasks/") + key);
  return params[key].get<std::size_t>();
}

bool flag(const json& params, const char* key, bool fallback) {
  if (!params.contains(key)) return fallback;
  if (!params[key].is_boolean()) throw InputError("expected true or false", std::string("/tasks/") + key);
  return params[key].get<bool>();
}

/// The module or bimodule spec: task parameter first, then the document.
json object_spec(const ProblemReader& in, const json& params, const char* key, const char* fallback) {
  if (params.contains(key)) return params[key];
  if (in.has(key)) return in.doc()[key];
  return fallback;
}

json dims(const std::vector<std::size_t>& v) { return json(v); }

// ------------------------------------------------------------------ tasks

Report validate(const ProblemReader& in, const Options& opt) {
  Report r;
  std::optional<FiniteGroup> g;
  AlgebraPtr a;
  if (in.has("group")) {
    try {
      g = in.group();
      r.checks.push_back(pass("group axioms"));
      r.dimensions["group_order"] = g->order();
    } catch (const ValidationError& e) {
      r.checks.push_back(construction_failure("group axioms", e));
    }
  }
  if (in.has("algebra")) {
    try {
      a = in.algebra();
      r.checks.push_back(associativity_check(*a));
      r.dimensions["algebra"] = a->dim();
    } catch (const ValidationError& e) {
      r.checks.push_back(construction_failure("algebra axioms", e));
    }
  }
  if (in.has("partial_action") && g && a) {
    try {
      PartialAction pa = in.partial_action(a, *g);
      append(r.checks, partial_action_checks(pa), "partial action: ");
      SmashAlgebra s = smash_product(pa);
      append(r.checks, smash_checks(s), "smash product: ");
      r.dimensions["smash"] = s.algebra->dim();
    } catch (const ValidationError& e) {
      r.checks.push_back(construction_failure("partial action axioms", e));
    }
    RawWitness w = raw_smash_witness(in.raw_action(a, *g), in.probe(a, *g));
    r.checks.push_back(verdict("smash product associative", w.associative, w.witness));
  }
  if (g) {
    KparOptions ko;
    Kpar k = build_kpar(in.field(), *g, ko);
    append(r.checks, kpar_checks(k), "K_par G: ");
    r.dimensions["kpar"] = k.dim();
    if (in.has("module")) {
      try {
        AlgModule m = in.kpar_module(k, in.doc()["module"], "/module");
        append(r.checks, module_checks(m), "module: ");
        r.dimensions["module"] = m.dim();
      } catch (const ValidationError& e) {
        r.checks.push_back(construction_failure("module axioms", e));
      }
    }
  }
  if (in.has("bimodule") && g && a && in.has("partial_action")) {
    try {
      SmashContext c = make_smash_context(in.partial_action(a, *g));
      Bimodule m = in.bimodule(c.s(), in.doc()["bimodule"], "/bimodule");
      append(r.checks, bimodule_checks(m), "bimodule: ");
      r.dimensions["bimodule"] = m.dim();
    } catch (const ValidationError& e) {
      r.checks.push_back(construction_failure("bimodule axioms", e));
    }
  }
  if (in.has("semilattice")) {
    try {
      Semilattice s = in.semilattice();
      r.checks.push_back(pass("semilattice closed under union"));
      r.dimensions["semilattice"] = s.size();
    } catch (const ValidationError& e) {
      r.checks.push_back(construction_failure("semilattice closed under union", e));
    }
  }
  for (auto& c : r.checks) c = downgrade(std::move(c), opt.mode);
  return r;
}

Report smash(const ProblemReader& in) {
  Report r;
  FiniteGroup g = in.group();
  AlgebraPtr a = in.algebra();
  PartialAction pa = in.partial_action(a, g);
  SmashAlgebra s = smash_product(pa);
  r.checks = smash_checks(s);
  r.dimensions = {{"algebra", a->dim()}, {"smash", s.algebra->dim()}};
  json index = json::array();
  for (const auto& [h, k] : s.index) index.push_back({h, k});
  r.data = {{"algebra", encode(*s.algebra)}, {"phi0", encode(s.phi0)}, {"index", std::move(index)}};
  return r;
}

Report kpar(const ProblemReader& in) {
  Report r;
  Kpar k = build_kpar(in.field(), in.group());
  r.checks = kpar_checks(k);
  Subspace ig = ig_subspace(k);
  r.dimensions = {{"B", k.b_dim()}, {"Kpar", k.dim()}, {"IG", ig.dim()}};
  json pairs = json::array();
  for (const auto& [h, mask] : k.pairs) pairs.push_back({h, mask});
  r.data = {{"B", encode(*k.b)},
            {"Kpar", encode(*k.algebra())},
            {"epsilon", encode(epsilon_matrix(k))},
            {"IG_basis", encode(Matrix::from_rows(k.dim(), ig.basis()))},
            {"pairs", std::move(pairs)}};
  return r;
}

Report hpar_task(const ProblemReader& in, const json& params, const Options& opt) {
  Report r;
  Kpar k = build_kpar(in.field(), in.group());
  AlgModule m = in.kpar_module(k, object_spec(in, params, "module", "B"), "/module");
  HparOptions ho;
  ho.max_degree = opt.max_degree.value_or(param(params, "max_degree", 3));
  ho.mode = opt.mode;
  ho.independence_check = flag(params, "independence_check", false);
  if (opt.budget) ho.resolution.max_free_dim = *opt.budget;
  CohomologyReport rep = hpar(k, m, ho);
  std::vector<std::size_t> h;
  for (const auto& d : rep.degrees) h.push_back(d.dim);
  r.dimensions = {{"H", dims(h)},
                  {"module", m.dim()},
                  {"resolution_ranks", dims(rep.resolution_ranks)},
                  {"invariants", rep.invariants_dim},
                  {"derivations", rep.der_dim},
                  {"inner_derivations", rep.inner_dim}};
  r.checks = rep.checks;
  return r;
}

Report hochschild_task(const ProblemReader& in, const json& params, const Options& opt) {
  Report r;
  AlgebraPtr a = in.algebra();
  Bimodule m;
  const json spec = object_spec(in, params, "bimodule", "regular");
  const bool over_a = params.contains("over") && params["over"] == "A";
  if (in.has("partial_action") && !over_a) {
    FiniteGroup g = in.group();
    SmashContext c = make_smash_context(in.partial_action(a, g));
    m = in.bimodule(c.s(), spec, "/bimodule");
    r.dimensions["algebra"] = c.s()->dim();
  } else {
    m = in.bimodule(a, spec, "/bimodule");
    r.dimensions["algebra"] = a->dim();
  }
  HochschildOptions ho;
  ho.max_degree = opt.max_degree.value_or(param(params, "max_degree", 2));
  ho.normalized = flag(params, "normalized", true);
  if (opt.budget) ho.max_cochain_dim = *opt.budget;
  HochschildComplex hc = hochschild(m, ho);
  r.dimensions["H"] = dims(hc.dims);
  r.dimensions["cochain_dims"] = dims(hc.cochain_dims);
  r.dimensions["bimodule"] = m.dim();
  r.checks = hochschild_checks(hc);
  return r;
}

Report spectral_task(const ProblemReader& in, const json& params, const Options& opt) {
  Report r;
  FiniteGroup g = in.group();
  AlgebraPtr a = in.algebra();
  SmashContext c = make_smash_context(in.partial_action(a, g));
  Bimodule m = in.bimodule(c.s(), object_spec(in, params, "bimodule", "regular"), "/bimodule");
  SpectralBounds b;
  const std::size_t top = opt.max_degree.value_or(param(params, "max_degree", 2));
  b.total_degree = b.a_degree = b.partial_degree = top;
  if (opt.budget) b.max_cochain_dim = *opt.budget;
  b.mode = opt.mode;
  SpectralReport s = spectral_low_degree(c, m, b);
  json e2 = json::array();
  for (const auto& row : s.e2) {
    json jr = json::array();
    for (const auto& e : row) jr.push_back(e ? json(*e) : json(nullptr));
    e2.push_back(std::move(jr));
  }
  r.dimensions = {{"F", s.f_dim}, {"H_total", dims(s.total)}, {"H_A", dims(s.a_side)}, {"E2", std::move(e2)},
                  {"bimodule", m.dim()}};
  FactorizationReport f = factorization_check(c, m);
  r.checks = s.checks;
  for (const auto& ch : f.checks) r.checks.push_back(downgrade(ch, opt.mode));
  r.notes = s.notes;
  return r;
}

Report orthogonalize(const ProblemReader& in) {
  Report r;
  const Field& f = in.field();
  Semilattice s = in.semilattice();
  AlgebraPtr a = semilattice_algebra(f, s);
  auto w = orthogonal_idempotent_basis(f, s);
  Check orth = pass("w_i w_j = delta_ij w_i");
  for (std::size_t i = 0; i < w.size() && orth.ok(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) {
      Vector p = a->multiply(w[i], w[j]);
      if (i == j ? p != w[i] : !is_zero(p)) {
        orth = fail(orth.name, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
        break;
      }
    }
  r.checks.push_back(orth);
  r.checks.push_back(verdict("orthogonal idempotents span", Subspace::span(f, a->dim(), w).dim() == a->dim()));
  json masks = json::array();
  for (auto m : s.masks()) masks.push_back(m);
  r.dimensions = {{"semilattice", s.size()}};
  r.data = {{"masks", std::move(masks)}, {"orthogonal_basis", encode(Matrix::from_rows(a->dim(), w))}};
  auto gens = in.semilattice_generators(a->dim());
  if (!gens.empty()) {
    Vector u = principal_generator(f, s, gens);
    Check fixes = pass("u r_i = r_i");
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (a->multiply(u, gens[i]) != gens[i]) {
        fixes = fail(fixes.name, "generator " + std::to_string(i));
        break;
      }
    r.checks.push_back(fixes);
    r.checks.push_back(verdict("u^2 = u", a->multiply(u, u) == u));
    Subspace ideal = ideal_closure(*a, gens);
    r.checks.push_back(verdict("u lies in the ideal", ideal.contains(u)));
    r.data["principal_generator"] = encode(u);
    r.dimensions["ideal"] = ideal.dim();
  }
  return r;
}

std::string hex(const unsigned char* p, unsigned n) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < n; ++i) {
    out += digits[p[i] >> 4];
    out += digits[p[i] & 15];
  }
  return out;
}

json error_json(const std::string& command, const std::string& code, const std::string& message,
                const std::string& where) {
  json e = {{"code", code}, {"message", message}};
  if (!where.empty()) e["path"] = where;
  return {{"task", command}, {"error", std::move(e)}};
}

}  // namespace

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = {"validate", "smash", "kpar", "hpar",
                                                 "hochschild", "spectral-check", "orthogonalize"};
  return names;
}

Report run_task(const std::string& task, const ProblemReader& in, const json& params, const Options& options) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  if (task == "validate") r = validate(in, options);
  else if (task == "smash") r = smash(in);
  else if (task == "kpar") r = kpar(in);
  else if (task == "hpar") r = hpar_task(in, params, options);
  else if (task == "hochschild") r = hochschild_task(in, params, options);
  else if (task == "spectral-check") r = spectral_task(in, params, options);
  else if (task == "orthogonalize") r = orthogonalize(in);
  else throw InputError("unknown task \"" + task + "\"", "/tasks");
  r.task = task;
  if (options.timings)
    r.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string inputs_digest(const json& doc, const Options& options) {
  json opts = json::object();
  if (options.field) opts["field"] = *options.field;
  if (options.max_degree) opts["max_degree"] = *options.max_degree;
  if (options.budget) opts["budget"] = *options.budget;
  opts["checks"] = options.mode == CheckMode::strict ? "strict" : "warn";
  const std::string text = json{{"problem", doc}, {"options", opts}}.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  return hex(md, len);
}

json to_json(const Report& r) {
  json out = {{"task", r.task}, {"dimensions", r.dimensions}, {"checks", checks_json(r.checks)}};
  if (!r.data.is_null()) out["data"] = r.data;
  if (!r.notes.empty()) out["notes"] = r.notes;
  if (r.micros) out["timings"] = {{"total_us", *r.micros}};
  return out;
}

std::string to_tsv(const std::vector<Report>& reports) {
  std::ostringstream out;
  out << "task\tkind\tkey\tindex\tvalue\n";
  for (const auto& r : reports) {
    for (auto it = r.dimensions.begin(); it != r.dimensions.end(); ++it) {
      const json& v = it.value();
      if (!v.is_array()) {
        out << r.task << "\tdim\t" << it.key() << "\t\t" << v.dump() << "\n";
        continue;
      }
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_array()) {
          out << r.task << "\tdim\t" << it.key() << "\t" << i << "\t" << v[i].dump() << "\n";
          continue;
        }
        for (std::size_t j = 0; j < v[i].size(); ++j)
          out << r.task << "\tdim\t" << it.key() << "\t" << i << "," << j << "\t"
              << (v[i][j].is_null() ? "unavailable" : v[i][j].dump()) << "\n";
      }
    }
    for (const auto& c : r.checks) out << r.task << "\tcheck\t" << c.name << "\t\t" << to_string(c.status) << "\n";
  }
  return out.str();
}

bool reports_ok(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!all_ok(r.checks)) return false;
  return true;
}

std::optional<std::size_t> budget_from_env() {
  const char* v = std::getenv("PARSMASH_BUDGET");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw InputError("PARSMASH_BUDGET must be a positive integer", "PARSMASH_BUDGET");
  return static_cast<std::size_t>(n);
}

Outcome execute_document(const std::string& command, const std::string& text, const Options& options, Format format) {
  Outcome o;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    o.code = exit_input_error;
    o.output = error_json(command, "InputError", e.what(), "").dump(2) + "\n";
    return o;
  }
  std::vector<Report> reports;
  try {
    ProblemReader in(doc, options.field);
    if (command == "run") {
      if (!doc.contains("tasks") || !doc["tasks"].is_array()) throw InputError("missing \"tasks\" array", "/tasks");
      for (std::size_t i = 0; i < doc["tasks"].size(); ++i) {
        const json& t = doc["tasks"][i];
        if (!t.is_object() || !t.contains("task") || !t["task"].is_string())
          throw InputError("each task needs a \"task\" name", "/tasks/" + std::to_string(i));
        reports.push_back(run_task(t["task"].get<std::string>(), in, t, options));
      }
    } else {
      json params = json::object();
      if (doc.contains("tasks") && doc["tasks"].is_array())
        for (const auto& t : doc["tasks"])
          if (t.is_object() && t.value("task", "") == command) {
            params = t;
            break;
          }
      reports.push_back(run_task(command, in, params, options));
    }
  } catch (const InputError& e) {
    o.code = exit_input_error;
    o.output = error_json(command, e.code(), e.what(), e.witness()).dump(2) + "\n";
    return o;
  } catch (const Error& e) {
    // shape mismatches, budget overruns and axiom failures outside validate
    o.code = e.code() == "BudgetExceeded" || e.code() == "DimensionMismatch" ? exit_input_error : exit_check_failed;
    o.output = error_json(command, e.code(), e.what(), e.witness()).dump(2) + "\n";
    return o;
  }
  o.code = reports_ok(reports) ? exit_ok : exit_check_failed;
  if (format == Format::tsv) {
    o.output = to_tsv(reports);
    return o;
  }
  const std::string digest = inputs_digest(doc, options);
  json out;
  if (command == "run") {
    out = {{"inputs_digest", digest}, {"reports", json::array()}};
    for (const auto& r : reports) out["reports"].push_back(to_json(r));
  } else {
    out = to_json(reports[0]);
    out["inputs_digest"] = digest;
  }
  o.output = out.dump(2) + "\n";
  return o;
}

Outcome execute(const std::string& command, const std::string& input_path, const Options& options, Format format) {
  std::ifstream f(input_path);
  if (!f) {
    Outcome o;
    o.code = exit_input_error;
    o.output = error_json(command, "InputError", "cannot read " + input_path, "").dump(2) + "\n";
    return o;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return execute_document(command, ss.str(), options, format);
}

}  // namespace parsmash::cli
