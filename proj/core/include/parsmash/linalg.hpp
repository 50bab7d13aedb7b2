#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "parsmash/field.hpp"

namespace parsmash {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Field& field, const Vector& a, const Vector& b);
Vector sub(const Field& field, const Vector& a, const Vector& b);
Vector scale(const Field& field, const Scalar& c, const Vector& v);
/// a += c * b
void axpy(const Field& field, Vector& a, const Scalar& c, const Vector& b);

// Dense row-major matrix. This is the representation handed across module
// boundaries; heavy kernels run on SparseMatrix and produce identical results.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const noexcept { return data_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
Vector apply(const Field& field, const Matrix& a, const Vector& v);
Matrix add(const Field& field, const Matrix& a, const Matrix& b);
Matrix sub(const Field& field, const Matrix& a, const Matrix& b);
Matrix scale(const Field& field, const Scalar& c, const Matrix& a);
Matrix transpose(const Matrix& a);
/// Concatenates row blocks with equal column counts.
Matrix vstack(const std::vector<Matrix>& blocks);

struct SparseEntry {
  uint32_t index;
  Scalar value;
  friend bool operator==(const SparseEntry& a, const SparseEntry& b) {
    return a.index == b.index && a.value == b.value;
  }
};
/// Entries sorted by index, no explicit zeros.
using SparseVec = std::vector<SparseEntry>;

SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, std::size_t n);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(const Field& field, std::size_t n);
  static SparseMatrix from_dense(const Matrix& m);
  static SparseMatrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const SparseVec& row(std::size_t r) const { return data_[r]; }
  SparseVec& row(std::size_t r) { return data_[r]; }
  std::size_t nonzeros() const;
  Matrix to_dense() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> data_;
};

SparseMatrix multiply(const Field& field, const SparseMatrix& a, const SparseMatrix& b);
Vector apply(const Field& field, const SparseMatrix& a, const Vector& v);
SparseMatrix add(const Field& field, const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix sub(const Field& field, const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix transpose(const SparseMatrix& a);
/// sum_i coeffs[i] * mats[i]; all matrices share a shape.
SparseMatrix linear_combination(const Field& field, std::span<const Scalar> coeffs,
                                std::span<const SparseMatrix> mats);

// Incrementally built row-echelon basis of a subspace of K^n. Every stored
// row has a leading 1 and zeros at all pivot columns that existed when it was
// inserted. reduced_rows() returns the unique reduced row echelon form, so
// the insertion order never affects it.
class EchelonForm {
 public:
  EchelonForm(Field field, std::size_t ambient);

  const Field& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Returns true when v was independent of the stored rows.
  bool insert(const Vector& v);
  bool insert(const SparseVec& v);
  bool contains(const Vector& v) const;
  /// Residual of v after elimination against the stored rows.
  Vector reduce(const Vector& v) const;

  /// Reduced row echelon rows sorted by pivot column.
  std::vector<SparseVec> reduced_rows() const;
  std::vector<std::size_t> pivots() const;

 private:
  bool insert_scattered(std::vector<Scalar>& work, std::size_t first);
  void reduce_scattered(std::vector<Scalar>& work, std::size_t first) const;

  Field field_;
  std::size_t ambient_;
  std::vector<SparseVec> rows_;
  std::vector<int64_t> pivot_row_;  // column -> stored row, -1 if none
};

// A subspace held by its canonical (reduced row echelon) basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field field, std::size_t ambient);
  static Subspace span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(const Field& field, std::size_t ambient);

  const Field& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  /// Coordinates of v in basis(); v must lie in the subspace.
  Vector coordinates(const Vector& v) const;
  /// Throws ValidationError when v is outside.
  Vector checked_coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Field field_ = Field::rationals();
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  std::vector<SparseVec> rows;  // nonzero rows of the reduced echelon form
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Field& field, const SparseMatrix& m);
std::size_t rank(const Field& field, const Matrix& m);
std::size_t rank(const Field& field, const SparseMatrix& m);
/// Canonical basis (reduced echelon form) of the null space of m.
std::vector<Vector> kernel_basis(const Field& field, const Matrix& m);
std::vector<Vector> kernel_basis(const Field& field, const SparseMatrix& m);
/// Particular solution of m x = b with free variables set to zero, or nullopt
/// when the system is inconsistent. Throws DimensionError on shape mismatch.
std::optional<Vector> solve(const Field& field, const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Field& field, const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
/// dim(a) - dim(b); throws ValidationError unless b is contained in a.
std::size_t quotient_dimension(const Subspace& a, const Subspace& b);
bool is_subspace_of(const Subspace& inner, const Subspace& outer);

/// Image of a linear map restricted to a subspace, as a subspace of the target.
Subspace image(const Field& field, const SparseMatrix& map, const Subspace& domain);
Subspace column_space(const Field& field, const SparseMatrix& m);

}  // namespace parsmash
