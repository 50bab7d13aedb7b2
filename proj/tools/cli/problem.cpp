#include "problem.hpp"

#include "parsmash/errors.hpp"

namespace parsmash::cli {

namespace {

std::string key_path(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

std::size_t count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<int64_t>() < 0) throw InputError("expected a non-negative integer", path);
  return v.get<std::size_t>();
}

const json& array_of(const json& v, std::size_t n, const std::string& path) {
  if (!v.is_array()) throw InputError("expected an array", path);
  if (v.size() != n) throw InputError("expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()), path);
  return v;
}

Field read_field(const json& doc, const std::optional<std::string>& override) {
  if (override) return Field::parse(*override);
  if (!doc.contains("field")) return Field::rationals();
  if (!doc["field"].is_string()) throw InputError("field must be a string such as \"Q\" or \"F2\"", "/field");
  try {
    return Field::parse(doc["field"].get<std::string>());
  } catch (const InputError& e) {
    throw InputError(e.what(), "/field");
  }
}

}  // namespace

ProblemReader::ProblemReader(json doc, std::optional<std::string> field_override)
    : doc_(std::move(doc)), field_(read_field(doc_, field_override)) {
  if (!doc_.is_object()) throw InputError("the problem must be a JSON object", "");
}

const json& ProblemReader::at(const json& obj, const char* key, const std::string& path) const {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing \"") + key + "\"", path);
  return obj[key];
}

Scalar ProblemReader::scalar(const json& v, const std::string& path) const {
  try {
    if (v.is_number_integer()) return field_.from_int(v.get<int64_t>());
    if (v.is_string()) return field_.parse_scalar(v.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(e.what(), path);
  }
  throw InputError("expected an integer or a string \"p/q\"", path);
}

Vector ProblemReader::vector(const json& v, std::size_t n, const std::string& path) const {
  array_of(v, n, path);
  Vector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar(v[i], key_path(path, i)));
  return out;
}

Matrix ProblemReader::matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& path) const {
  array_of(v, rows, path);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector row = vector(v[r], cols, key_path(path, r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

std::vector<SparseMatrix> ProblemReader::matrix_family(const json& v, std::size_t n, std::size_t dim,
                                                       const std::string& path) const {
  array_of(v, n, path);
  std::vector<SparseMatrix> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(SparseMatrix::from_dense(matrix(v[i], dim, dim, key_path(path, i))));
  return out;
}

FiniteGroup ProblemReader::group() const {
  const json& g = at(doc_, "group", "");
  const std::string path = "/group";
  if (g.contains("table")) {
    const json& t = g["table"];
    if (!t.is_array()) throw InputError("expected an array of rows", path + "/table");
    std::vector<std::vector<std::size_t>> table;
    for (std::size_t r = 0; r < t.size(); ++r) {
      array_of(t[r], t.size(), key_path(path + "/table", r));
      std::vector<std::size_t> row;
      for (std::size_t c = 0; c < t.size(); ++c) row.push_back(count(t[r][c], key_path(key_path(path + "/table", r), c)));
      table.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    if (g.contains("labels")) labels = g["labels"].get<std::vector<std::string>>();
    return make_group(table, std::move(labels));
  }
  const json& type = at(g, "type", path);
  const std::size_t n = count(at(g, "n", path), path + "/n");
  const std::string name = type.is_string() ? type.get<std::string>() : "";
  if (name == "cyclic") return standard_group(GroupFamily::cyclic, n);
  if (name == "dihedral") return standard_group(GroupFamily::dihedral, n);
  if (name == "symmetric") return standard_group(GroupFamily::symmetric, n);
  throw InputError("group type must be cyclic, dihedral or symmetric", path + "/type");
}

AlgebraPtr ProblemReader::algebra() const {
  const json& a = at(doc_, "algebra", "");
  const std::string path = "/algebra";
  const std::size_t d = count(at(a, "dim", path), path + "/dim");
  Vector unit = vector(at(a, "unit", path), d, path + "/unit");
  const json& st = array_of(at(a, "structure", path), d, path + "/structure");
  std::vector<std::vector<Vector>> structure(d);
  for (std::size_t i = 0; i < d; ++i) {
    array_of(st[i], d, key_path(path + "/structure", i));
    for (std::size_t j = 0; j < d; ++j)
      structure[i].push_back(vector(st[i][j], d, key_path(key_path(path + "/structure", i), j)));
  }
  AlgebraOptions opts;
  if (a.contains("labels")) {
    array_of(a["labels"], d, path + "/labels");
    opts.labels = a["labels"].get<std::vector<std::string>>();
  }
  if (a.contains("generators")) {
    const json& gens = a["generators"];
    if (!gens.is_array()) throw InputError("expected an array of vectors", path + "/generators");
    for (std::size_t i = 0; i < gens.size(); ++i)
      opts.generators.push_back(vector(gens[i], d, key_path(path + "/generators", i)));
  }
  return make_algebra(field_, d, structure, unit, std::move(opts));
}

bool ProblemReader::action_has_domains() const {
  return doc_.contains("partial_action") && doc_["partial_action"].contains("domains");
}

PartialAction ProblemReader::partial_action(const AlgebraPtr& a, const FiniteGroup& g) const {
  const json& pa = at(doc_, "partial_action", "");
  const std::string path = "/partial_action";
  const std::size_t d = a->dim();
  PartialActionOptions opts;
  if (pa.contains("condition")) {
    const std::string c = pa["condition"].is_string() ? pa["condition"].get<std::string>() : "";
    if (c == "containment") opts.condition = DomainCondition::containment;
    else if (c != "equality") throw InputError("condition must be equality or containment", path + "/condition");
  }
  auto entry = [&](const char* key, std::size_t h) -> const json* {
    const json& block = pa.at(key);
    const std::string k = std::to_string(h);
    return block.contains(k) ? &block[k] : nullptr;
  };
  std::vector<SparseMatrix> alpha;
  if (!pa.contains("alpha") || !pa["alpha"].is_object()) throw InputError("missing \"alpha\" object", path);
  for (std::size_t h = 0; h < g.order(); ++h) {
    const json* m = entry("alpha", h);
    if (!m && h == 0) {
      alpha.push_back(SparseMatrix::identity(field_, d));
      continue;
    }
    if (!m) throw InputError("missing alpha for element " + std::to_string(h), path + "/alpha");
    alpha.push_back(SparseMatrix::from_dense(matrix(*m, d, d, path + "/alpha/" + std::to_string(h))));
  }
  if (pa.contains("domains")) {
    std::vector<Subspace> domains;
    for (std::size_t h = 0; h < g.order(); ++h) {
      const json* v = entry("domains", h);
      if (!v && h == 0) {
        domains.push_back(Subspace::whole(field_, d));
        continue;
      }
      if (!v || !v->is_array()) throw InputError("missing domain basis", path + "/domains/" + std::to_string(h));
      std::vector<Vector> basis;
      for (std::size_t i = 0; i < v->size(); ++i)
        basis.push_back(vector((*v)[i], d, path + "/domains/" + std::to_string(h) + "/" + std::to_string(i)));
      domains.push_back(Subspace::span(field_, d, basis));
    }
    return partial_action_from_domains(g, a, domains, alpha, opts);
  }
  if (!pa.contains("u") || !pa["u"].is_object()) throw InputError("missing \"u\" object", path);
  std::vector<Vector> u;
  for (std::size_t h = 0; h < g.order(); ++h) {
    const json* v = entry("u", h);
    if (!v && h == 0) {
      u.push_back(a->unit());
      continue;
    }
    if (!v) throw InputError("missing u for element " + std::to_string(h), path + "/u");
    u.push_back(vector(*v, d, path + "/u/" + std::to_string(h)));
  }
  return make_partial_action(g, a, std::move(u), std::move(alpha), opts);
}

RawPartialAction ProblemReader::raw_action(const AlgebraPtr& a, const FiniteGroup& g) const {
  const json& pa = at(doc_, "partial_action", "");
  const std::string path = "/partial_action";
  const std::size_t d = a->dim();
  RawPartialAction r{g, a, {}, {}};
  for (std::size_t h = 0; h < g.order(); ++h) {
    const std::string k = std::to_string(h);
    if (pa.contains("alpha") && pa["alpha"].contains(k))
      r.alpha.push_back(SparseMatrix::from_dense(matrix(pa["alpha"][k], d, d, path + "/alpha/" + k)));
    else if (h == 0)
      r.alpha.push_back(SparseMatrix::identity(field_, d));
    else
      throw InputError("missing alpha for element " + k, path + "/alpha");
    if (pa.contains("domains") && pa["domains"].contains(k)) {
      std::vector<Vector> basis;
      const json& v = pa["domains"][k];
      for (std::size_t i = 0; i < v.size(); ++i) basis.push_back(vector(v[i], d, path + "/domains/" + k + "/" + std::to_string(i)));
      r.domains.push_back(Subspace::span(field_, d, basis));
    } else if (pa.contains("u") && pa["u"].contains(k)) {
      Vector u = vector(pa["u"][k], d, path + "/u/" + k);
      std::vector<Vector> cols;
      for (std::size_t i = 0; i < d; ++i) cols.push_back(a->multiply(a->basis_element(i), u));
      r.domains.push_back(Subspace::span(field_, d, cols));
    } else if (h == 0) {
      r.domains.push_back(Subspace::whole(field_, d));
    } else {
      throw InputError("missing domain for element " + k, path);
    }
  }
  return r;
}

std::optional<RawElement> ProblemReader::probe(const AlgebraPtr& a, const FiniteGroup& g) const {
  if (!doc_.contains("probe")) return std::nullopt;
  const json& p = doc_["probe"];
  if (!p.is_object()) throw InputError("probe must map group indices to vectors", "/probe");
  RawElement e(g.order(), Vector(a->dim()));
  for (auto it = p.begin(); it != p.end(); ++it) {
    std::size_t h = 0;
    try {
      h = std::stoul(it.key());
    } catch (const std::exception&) {
      throw InputError("probe keys are group indices", "/probe/" + it.key());
    }
    if (h >= g.order()) throw InputError("group index out of range", "/probe/" + it.key());
    e[h] = vector(it.value(), a->dim(), "/probe/" + it.key());
  }
  return e;
}

AlgModule ProblemReader::kpar_module(const Kpar& k, const json& spec, const std::string& path) const {
  if (spec.is_string()) {
    const std::string s = spec.get<std::string>();
    if (s == "B") return b_module(k);
    if (s == "regular") return regular_module(k.algebra());
    if (s == "IG") return ig_module(k);
    if (s == "Dg") return dg_module(k);
    throw InputError("module literal must be B, regular, IG or Dg", path);
  }
  if (spec.is_object() && spec.contains("random_quotient"))
    return random_quotient_module(k, count(spec["random_quotient"], path + "/random_quotient"));
  const std::size_t dim = count(at(spec, "dim", path), path + "/dim");
  if (spec.contains("pi")) {
    const json& pi = spec["pi"];
    std::vector<SparseMatrix> ops;
    for (std::size_t h = 0; h < k.group.order(); ++h) {
      const std::string key = std::to_string(h);
      if (!pi.contains(key)) {
        if (h == 0) {
          ops.push_back(SparseMatrix::identity(field_, dim));
          continue;
        }
        throw InputError("missing operator for element " + key, path + "/pi");
      }
      ops.push_back(SparseMatrix::from_dense(matrix(pi[key], dim, dim, path + "/pi/" + key)));
    }
    return partial_rep_to_module(k, ops);
  }
  return make_module(k.algebra(), dim, matrix_family(at(spec, "action", path), k.dim(), dim, path + "/action"));
}

Bimodule ProblemReader::bimodule(const AlgebraPtr& s, const json& spec, const std::string& path) const {
  if (spec.is_string()) {
    const std::string name = spec.get<std::string>();
    if (name == "regular") return regular_bimodule(s);
    if (name == "dual") return dual_bimodule(regular_bimodule(s));
    if (name == "zero")
      return Bimodule(s, s, 0, std::vector<SparseMatrix>(s->dim(), SparseMatrix(0, 0)),
                      std::vector<SparseMatrix>(s->dim(), SparseMatrix(0, 0)));
    throw InputError("bimodule literal must be regular, dual or zero", path);
  }
  const std::size_t dim = count(at(spec, "dim", path), path + "/dim");
  return make_bimodule(s, s, dim, matrix_family(at(spec, "left", path), s->dim(), dim, path + "/left"),
                       matrix_family(at(spec, "right", path), s->dim(), dim, path + "/right"));
}

Semilattice ProblemReader::semilattice() const {
  const json& s = at(doc_, "semilattice", "");
  const std::string path = "/semilattice";
  const std::size_t ground = count(at(s, "ground", path), path + "/ground");
  if (s.contains("boolean") && s["boolean"].is_boolean() && s["boolean"].get<bool>()) return boolean_semilattice(ground);
  const json& masks = at(s, "masks", path);
  if (!masks.is_array()) throw InputError("expected an array of masks", path + "/masks");
  std::vector<uint64_t> ms;
  for (std::size_t i = 0; i < masks.size(); ++i) ms.push_back(count(masks[i], key_path(path + "/masks", i)));
  return make_semilattice(ground, std::move(ms));
}

std::vector<Vector> ProblemReader::semilattice_generators(std::size_t dim) const {
  std::vector<Vector> out;
  if (!doc_.contains("generators")) return out;
  const json& g = doc_["generators"];
  if (!g.is_array()) throw InputError("expected an array of vectors", "/generators");
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(vector(g[i], dim, key_path("/generators", i)));
  return out;
}

json encode(const Scalar& s) {
  if (s.is_small() && s.small_den() == 1) return s.small_num();
  return s.to_string();
}

json encode(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

json encode(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(encode(m.row(r)));
  return out;
}

json encode(const SparseMatrix& m) { return encode(m.to_dense()); }

json encode(const Algebra& a) {
  json st = json::array();
  for (const auto& row : a.structure()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(encode(v));
    st.push_back(std::move(r));
  }
  return {{"dim", a.dim()}, {"unit", encode(a.unit())}, {"structure", std::move(st)}, {"labels", a.labels()}};
}

json encode(const FiniteGroup& g) { return {{"table", g.table()}, {"labels", g.labels()}}; }

}  // namespace parsmash::cli
