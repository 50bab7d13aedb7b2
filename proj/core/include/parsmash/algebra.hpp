#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parsmash/check.hpp"
#include "parsmash/linalg.hpp"

namespace parsmash {

// Finite-dimensional associative unital algebra given by structure
// constants. Products of basis elements are stored sparsely; left and right
// multiplication operators of every basis element are precomputed.
class Algebra {
 public:
  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Vector& unit() const noexcept { return unit_; }
  /// e_i * e_j
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector basis_element(std::size_t i) const { return unit_vector(field_, dim_, i); }

  /// Operator x -> e_i x (resp. x e_i) on the regular representation.
  const SparseMatrix& left_basis(std::size_t i) const { return left_[i]; }
  const SparseMatrix& right_basis(std::size_t i) const { return right_[i]; }
  SparseMatrix left_mult(const Vector& a) const;
  SparseMatrix right_mult(const Vector& a) const;

  /// Elements generating the algebra; module axioms are checked on these.
  const std::vector<Vector>& generators() const noexcept { return generators_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Human-readable element, e.g. "x + 2*xy".
  std::string format(const Vector& v) const;

  /// Dense structure constants [i][j] -> coordinates of e_i e_j.
  std::vector<std::vector<Vector>> structure() const;
  bool is_commutative() const;

 private:
  friend class AlgebraBuilder;
  Field field_ = Field::rationals();
  std::size_t dim_ = 0;
  std::vector<SparseVec> table_;
  Vector unit_;
  std::vector<SparseMatrix> left_, right_;
  std::vector<Vector> generators_;
  std::vector<std::string> labels_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraOptions {
  std::vector<std::string> labels;
  /// Empty means all basis elements.
  std::vector<Vector> generators;
  /// Validate associativity on every basis triple.
  bool check_associativity = true;
};

/// Errors: NotAssociative (witness i,j,k), UnitLaw (witness i),
/// NotGenerating when declared generators fail to generate.
AlgebraPtr make_algebra(const Field& field, std::size_t dim, const std::vector<std::vector<Vector>>& structure,
                        const Vector& unit, AlgebraOptions options = {});
AlgebraPtr make_algebra_sparse(const Field& field, std::size_t dim, std::vector<SparseVec> table,
                               const Vector& unit, AlgebraOptions options = {});

/// Associativity over all basis triples; witness "(i,j,k)" on failure.
Check associativity_check(const Algebra& a);
/// u^2 = u and u x = x u for every basis x.
Check central_idempotent_check(const Algebra& a, const Vector& u);

// ------------------------------------------------------------------ modules

// Left module: action[i] is the matrix of e_i acting on K^dim.
class AlgModule {
 public:
  AlgModule() = default;
  AlgModule(AlgebraPtr algebra, std::size_t dim, std::vector<SparseMatrix> action)
      : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {}

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  std::size_t dim() const noexcept { return dim_; }
  const SparseMatrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<SparseMatrix>& actions() const noexcept { return action_; }
  /// Matrix of an arbitrary algebra element.
  SparseMatrix act_matrix(const Vector& a) const;
  Vector act(const Vector& a, const Vector& v) const;
  Vector act_basis(std::size_t i, const Vector& v) const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_ = 0;
  std::vector<SparseMatrix> action_;
};

/// Errors: DimensionMismatch, UnitLaw, ActionNotMultiplicative (witness
/// generator and basis index).
AlgModule make_module(AlgebraPtr algebra, std::size_t dim, std::vector<SparseMatrix> action);
std::vector<Check> module_checks(const AlgModule& m);

AlgModule regular_module(const AlgebraPtr& a);
AlgModule zero_module(const AlgebraPtr& a);
/// Module structure on a subspace closed under the action, in its canonical basis.
AlgModule submodule(const AlgModule& m, const Subspace& s);
/// Quotient M / S in the basis of non-pivot coordinates of S.
AlgModule quotient_module(const AlgModule& m, const Subspace& s);
/// Coordinates of the image of v in quotient_module(m, s).
Vector quotient_projection(const Subspace& s, const Vector& v);
/// Restriction of scalars along an algebra map f: A' -> A (matrix dim A x dim A').
AlgModule restrict_scalars(const AlgModule& m, const AlgebraPtr& source, const SparseMatrix& f);

/// Smallest submodule containing the vectors.
Subspace spin(const AlgModule& m, const std::vector<Vector>& vectors);
/// Greedy generating set: scan the canonical basis of `within` (default: all
/// of M) and keep every vector not yet in the submodule spanned so far.
std::vector<Vector> greedy_generators(const AlgModule& m, const std::optional<Subspace>& within = std::nullopt);

enum class HomMethod { automatic, direct, presentation };

// Space of module maps, each stored as a target-dim x source-dim matrix.
// The basis is canonical (reduced echelon form of the row-major entries).
struct HomSpace {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<Matrix> basis;
  std::size_t dim() const noexcept { return basis.size(); }
};

HomSpace hom_space(const AlgModule& m, const AlgModule& n, HomMethod method = HomMethod::automatic);
/// Dimension only, computed through a presentation of m.
std::size_t hom_dimension(const AlgModule& m, const AlgModule& n);
bool is_module_map(const AlgModule& m, const AlgModule& n, const Matrix& f);

// ---------------------------------------------------------------- bimodules

// Left A1-module and right A2-module on the same space with commuting
// actions. right[j] is the matrix of v -> v e_j.
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(AlgebraPtr left_alg, AlgebraPtr right_alg, std::size_t dim, std::vector<SparseMatrix> left,
           std::vector<SparseMatrix> right)
      : left_alg_(std::move(left_alg)),
        right_alg_(std::move(right_alg)),
        dim_(dim),
        left_(std::move(left)),
        right_(std::move(right)) {}

  const AlgebraPtr& left_algebra() const noexcept { return left_alg_; }
  const AlgebraPtr& right_algebra() const noexcept { return right_alg_; }
  const Field& field() const { return left_alg_->field(); }
  std::size_t dim() const noexcept { return dim_; }
  const SparseMatrix& left(std::size_t i) const { return left_[i]; }
  const SparseMatrix& right(std::size_t j) const { return right_[j]; }
  const std::vector<SparseMatrix>& lefts() const noexcept { return left_; }
  const std::vector<SparseMatrix>& rights() const noexcept { return right_; }
  SparseMatrix left_matrix(const Vector& a) const;
  SparseMatrix right_matrix(const Vector& b) const;

 private:
  AlgebraPtr left_alg_, right_alg_;
  std::size_t dim_ = 0;
  std::vector<SparseMatrix> left_, right_;
};

/// Errors name the violated law: UnitLaw, ActionNotMultiplicative,
/// ActionsDoNotCommute.
Bimodule make_bimodule(AlgebraPtr left_alg, AlgebraPtr right_alg, std::size_t dim, std::vector<SparseMatrix> left,
                       std::vector<SparseMatrix> right);
std::vector<Check> bimodule_checks(const Bimodule& m);
Bimodule regular_bimodule(const AlgebraPtr& a);
/// Pull back both actions along algebra maps into the original algebras.
Bimodule restrict_bimodule(const Bimodule& m, const AlgebraPtr& left_src, const SparseMatrix& f_left,
                           const AlgebraPtr& right_src, const SparseMatrix& f_right);
/// Bimodule maps, each a target-dim x source-dim matrix; canonical basis.
HomSpace bimodule_hom_space(const Bimodule& m, const Bimodule& n);
/// {m : a m = m a for every a}, for a bimodule over a single algebra.
Subspace centralizer(const Bimodule& m);

}  // namespace parsmash
