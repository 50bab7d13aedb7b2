#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "parsmash/cohomology.hpp"
#include "parsmash/semilattice.hpp"
#include "parsmash/spectral.hpp"

namespace parsmash::cli {

using json = nlohmann::json;

// Reads the domain objects of one problem document. Every malformed value
// raises InputError carrying its JSON pointer.
class ProblemReader {
 public:
  ProblemReader(json doc, std::optional<std::string> field_override);

  const json& doc() const { return doc_; }
  const Field& field() const { return field_; }
  bool has(const char* key) const { return doc_.contains(key); }

  Scalar scalar(const json& v, const std::string& path) const;
  Vector vector(const json& v, std::size_t n, const std::string& path) const;
  /// Rows of a rows x cols matrix.
  Matrix matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& path) const;

  FiniteGroup group() const;
  AlgebraPtr algebra() const;

  // Partial action block; per-element entries are keyed by group index.
  bool action_has_domains() const;
  PartialAction partial_action(const AlgebraPtr& a, const FiniteGroup& g) const;
  RawPartialAction raw_action(const AlgebraPtr& a, const FiniteGroup& g) const;
  std::optional<RawElement> probe(const AlgebraPtr& a, const FiniteGroup& g) const;

  /// "B", "regular", "IG", "Dg", {"random_quotient": seed}, {"dim", "pi"} or {"dim", "action"}.
  AlgModule kpar_module(const Kpar& k, const json& spec, const std::string& path) const;
  /// "regular", "zero", "dual" or {"dim", "left", "right"}.
  Bimodule bimodule(const AlgebraPtr& s, const json& spec, const std::string& path) const;

  Semilattice semilattice() const;
  std::vector<Vector> semilattice_generators(std::size_t dim) const;

 private:
  const json& at(const json& obj, const char* key, const std::string& path) const;
  std::vector<SparseMatrix> matrix_family(const json& v, std::size_t count, std::size_t dim,
                                          const std::string& path) const;

  json doc_;
  Field field_;
};

json encode(const Scalar& s);
json encode(const Vector& v);
json encode(const Matrix& m);
json encode(const SparseMatrix& m);
/// Re-ingestible algebra block.
json encode(const Algebra& a);
json encode(const FiniteGroup& g);

}  // namespace parsmash::cli
