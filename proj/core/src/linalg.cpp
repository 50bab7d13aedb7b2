#include "parsmash/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "parsmash/errors.hpp"

namespace parsmash {

// ---------------------------------------------------------------- vectors

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Field& field, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector add");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = field.add(a[i], b[i]);
  return r;
}

Vector sub(const Field& field, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sub");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = field.sub(a[i], b[i]);
  return r;
}

Vector scale(const Field& field, const Scalar& c, const Vector& v) {
  Vector r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = field.mul(c, v[i]);
  return r;
}

void axpy(const Field& field, Vector& a, const Scalar& c, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("axpy");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) field.add_mul(a[i], c, b[i]);
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("Matrix::from_rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("Matrix::from_columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const { return parsmash::is_zero(data_); }

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix multiply");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) field.add_mul(r(i, j), aik, b(k, j));
    }
  return r;
}

Vector apply(const Field& field, const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix apply");
  Vector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!v[k].is_zero() && !a(i, k).is_zero()) field.add_mul(r[i], a(i, k), v[k]);
  return r;
}

Matrix add(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix add");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = field.add(a(i, j), b(i, j));
  return r;
}

Matrix sub(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sub");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = field.sub(a(i, j), b(i, j));
  return r;
}

Matrix scale(const Field& field, const Scalar& c, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) r(i, j) = field.mul(c, a(i, j));
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionError("vstack");
    rows += b.rows();
  }
  Matrix r(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) r(off + i, j) = b(i, j);
    off += b.rows();
  }
  return r;
}

// ----------------------------------------------------------- SparseMatrix

SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back({static_cast<uint32_t>(i), v[i]});
  return s;
}

Vector to_dense(const SparseVec& v, std::size_t n) {
  Vector d(n);
  for (const auto& e : v) d.at(e.index) = e.value;
  return d;
}

SparseMatrix SparseMatrix::identity(const Field& field, std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({static_cast<uint32_t>(i), field.one()});
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
  SparseMatrix m(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!d(i, j).is_zero()) m.data_[i].push_back({static_cast<uint32_t>(j), d(i, j)});
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  SparseMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("SparseMatrix::from_columns");
    for (std::size_t r = 0; r < rows; ++r)
      if (!cols[c][r].is_zero()) m.data_[r].push_back({static_cast<uint32_t>(c), cols[c][r]});
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Matrix SparseMatrix::to_dense() const {
  Matrix d(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) d(i, e.index) = e.value;
  return d;
}

namespace {

// Dense scratch row with a touched-index list, reused across rows.
struct Accumulator {
  std::vector<Scalar> values;
  std::vector<uint8_t> used;
  std::vector<uint32_t> touched;

  explicit Accumulator(std::size_t n) : values(n), used(n, 0) {}

  Scalar& at(uint32_t i) {
    if (!used[i]) {
      used[i] = 1;
      touched.push_back(i);
    }
    return values[i];
  }

  SparseVec drain() {
    std::sort(touched.begin(), touched.end());
    SparseVec out;
    out.reserve(touched.size());
    for (uint32_t i : touched) {
      if (!values[i].is_zero()) out.push_back({i, std::move(values[i])});
      values[i] = Scalar();
      used[i] = 0;
    }
    touched.clear();
    return out;
  }
};

}  // namespace

SparseMatrix multiply(const Field& field, const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("sparse multiply");
  SparseMatrix r(a.rows(), b.cols());
  Accumulator acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (const auto& ea : a.row(i))
      for (const auto& eb : b.row(ea.index)) field.add_mul(acc.at(eb.index), ea.value, eb.value);
    r.row(i) = acc.drain();
  }
  return r;
}

Vector apply(const Field& field, const SparseMatrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionError("sparse apply");
  Vector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& e : a.row(i))
      if (!v[e.index].is_zero()) field.add_mul(r[i], e.value, v[e.index]);
  return r;
}

namespace {

SparseMatrix combine(const Field& field, const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sparse add");
  SparseMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto& ra = a.row(i);
    const auto& rb = b.row(i);
    SparseVec out;
    std::size_t x = 0, y = 0;
    while (x < ra.size() || y < rb.size()) {
      if (y == rb.size() || (x < ra.size() && ra[x].index < rb[y].index)) {
        out.push_back(ra[x++]);
      } else if (x == ra.size() || rb[y].index < ra[x].index) {
        out.push_back({rb[y].index, subtract ? field.neg(rb[y].value) : rb[y].value});
        ++y;
      } else {
        Scalar s = subtract ? field.sub(ra[x].value, rb[y].value) : field.add(ra[x].value, rb[y].value);
        if (!s.is_zero()) out.push_back({ra[x].index, std::move(s)});
        ++x;
        ++y;
      }
    }
    r.row(i) = std::move(out);
  }
  return r;
}

}  // namespace

SparseMatrix add(const Field& field, const SparseMatrix& a, const SparseMatrix& b) {
  return combine(field, a, b, false);
}

SparseMatrix sub(const Field& field, const SparseMatrix& a, const SparseMatrix& b) {
  return combine(field, a, b, true);
}

SparseMatrix transpose(const SparseMatrix& a) {
  SparseMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& e : a.row(i)) r.row(e.index).push_back({static_cast<uint32_t>(i), e.value});
  return r;
}

SparseMatrix linear_combination(const Field& field, std::span<const Scalar> coeffs,
                                std::span<const SparseMatrix> mats) {
  if (coeffs.size() != mats.size()) throw DimensionError("linear_combination");
  if (mats.empty()) return {};
  const std::size_t rows = mats[0].rows(), cols = mats[0].cols();
  SparseMatrix r(rows, cols);
  Accumulator acc(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < mats.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      for (const auto& e : mats[k].row(i)) field.add_mul(acc.at(e.index), coeffs[k], e.value);
    }
    r.row(i) = acc.drain();
  }
  return r;
}

// ------------------------------------------------------------ EchelonForm

EchelonForm::EchelonForm(Field field, std::size_t ambient)
    : field_(field), ambient_(ambient), pivot_row_(ambient, -1) {}

void EchelonForm::reduce_scattered(std::vector<Scalar>& work, std::size_t first) const {
  for (std::size_t c = first; c < ambient_; ++c) {
    if (work[c].is_zero()) continue;
    int64_t r = pivot_row_[c];
    if (r < 0) continue;
    Scalar coef = work[c];
    for (const auto& e : rows_[static_cast<std::size_t>(r)]) field_.sub_mul(work[e.index], coef, e.value);
  }
}

bool EchelonForm::insert_scattered(std::vector<Scalar>& work, std::size_t first) {
  reduce_scattered(work, first);
  std::size_t lead = first;
  while (lead < ambient_ && work[lead].is_zero()) ++lead;
  if (lead == ambient_) return false;
  Scalar inv = field_.inv(work[lead]);
  SparseVec row;
  for (std::size_t c = lead; c < ambient_; ++c)
    if (!work[c].is_zero()) row.push_back({static_cast<uint32_t>(c), field_.mul(work[c], inv)});
  pivot_row_[lead] = static_cast<int64_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool EchelonForm::insert(const Vector& v) {
  if (v.size() != ambient_) throw DimensionError("EchelonForm::insert");
  std::vector<Scalar> work(v);
  return insert_scattered(work, 0);
}

bool EchelonForm::insert(const SparseVec& v) {
  if (v.empty()) return false;
  std::vector<Scalar> work(ambient_);
  for (const auto& e : v) {
    if (e.index >= ambient_) throw DimensionError("EchelonForm::insert");
    work[e.index] = e.value;
  }
  return insert_scattered(work, v.front().index);
}

Vector EchelonForm::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("EchelonForm::reduce");
  std::vector<Scalar> work(v);
  reduce_scattered(work, 0);
  return work;
}

bool EchelonForm::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::vector<std::size_t> EchelonForm::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_) p.push_back(r.front().index);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<SparseVec> EchelonForm::reduced_rows() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().index > rows_[b].front().index; });
  std::vector<SparseVec> reduced(rows_.size());
  std::vector<Scalar> work(ambient_);
  for (std::size_t idx : order) {
    const SparseVec& row = rows_[idx];
    const std::size_t lead = row.front().index;
    for (const auto& e : row) work[e.index] = e.value;
    for (std::size_t c = lead + 1; c < ambient_; ++c) {
      if (work[c].is_zero()) continue;
      int64_t r = pivot_row_[c];
      if (r < 0) continue;
      Scalar coef = work[c];
      for (const auto& e : reduced[static_cast<std::size_t>(r)]) field_.sub_mul(work[e.index], coef, e.value);
    }
    SparseVec out;
    for (std::size_t c = lead; c < ambient_; ++c)
      if (!work[c].is_zero()) {
        out.push_back({static_cast<uint32_t>(c), std::move(work[c])});
        work[c] = Scalar();
      }
    reduced[idx] = std::move(out);
  }
  std::vector<SparseVec> sorted;
  sorted.reserve(rows_.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) sorted.push_back(std::move(reduced[*it]));
  return sorted;
}

// --------------------------------------------------------------- Subspace

Subspace::Subspace(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

Subspace Subspace::span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors) {
  EchelonForm ech(field, ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionError("Subspace::span: vector of length " +
                                                  std::to_string(v.size()) + " in K^" + std::to_string(ambient));
    ech.insert(v);
  }
  Subspace s(field, ambient);
  for (const auto& r : ech.reduced_rows()) {
    s.pivots_.push_back(r.front().index);
    s.basis_.push_back(to_dense(r, ambient));
  }
  return s;
}

Subspace Subspace::whole(const Field& field, std::size_t ambient) {
  Subspace s(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(field, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(basis_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v.at(pivots_[i]);
  return c;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("Subspace::contains");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(field_, r, field_.neg(c), basis_[i]);
  }
  return is_zero(r);
}

Vector Subspace::checked_coordinates(const Vector& v) const {
  if (!contains(v)) throw ValidationError("NotInSubspace", "vector lies outside the subspace");
  return coordinates(v);
}

// ------------------------------------------------------------- algorithms

RrefResult rref(const Field& field, const SparseMatrix& m) {
  EchelonForm ech(field, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  RrefResult r;
  r.rows = ech.reduced_rows();
  for (const auto& row : r.rows) r.pivots.push_back(row.front().index);
  return r;
}

std::size_t rank(const Field& field, const SparseMatrix& m) {
  EchelonForm ech(field, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  return ech.rank();
}

std::size_t rank(const Field& field, const Matrix& m) { return rank(field, SparseMatrix::from_dense(m)); }

std::vector<Vector> kernel_basis(const Field& field, const SparseMatrix& m) {
  const std::size_t n = m.cols();
  RrefResult r = rref(field, m);
  std::vector<int64_t> pivot_row(n, -1);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) pivot_row[r.pivots[i]] = static_cast<int64_t>(i);
  std::vector<std::size_t> free_cols;
  std::vector<int64_t> free_slot(n, -1);
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_row[c] < 0) {
      free_slot[c] = static_cast<int64_t>(free_cols.size());
      free_cols.push_back(c);
    }
  std::vector<Vector> raw(free_cols.size(), Vector(n));
  for (std::size_t k = 0; k < free_cols.size(); ++k) raw[k][free_cols[k]] = field.one();
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    for (const auto& e : r.rows[i]) {
      int64_t slot = free_slot[e.index];
      if (slot >= 0) raw[static_cast<std::size_t>(slot)][r.pivots[i]] = field.neg(e.value);
    }
  return Subspace::span(field, n, raw).basis();
}

std::vector<Vector> kernel_basis(const Field& field, const Matrix& m) {
  return kernel_basis(field, SparseMatrix::from_dense(m));
}

std::optional<Vector> solve(const Field& field, const Matrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw DimensionError("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                         std::to_string(m.rows()));
  const std::size_t n = m.cols();
  EchelonForm ech(field, n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector row = m.row(i);
    row.push_back(b[i]);
    ech.insert(row);
  }
  Vector x(n);
  for (const auto& row : ech.reduced_rows()) {
    const std::size_t p = row.front().index;
    if (p == n) return std::nullopt;
    if (row.back().index == n) x[p] = row.back().value;
  }
  return x;
}

std::optional<Matrix> inverse(const Field& field, const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  EchelonForm ech(field, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(2 * n);
    for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j);
    row[n + i] = field.one();
    ech.insert(row);
  }
  auto rows = ech.reduced_rows();
  if (rows.size() != n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].front().index != i) return std::nullopt;
    for (const auto& e : rows[i])
      if (e.index >= n) inv(i, e.index - n) = e.value;
  }
  return inv;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("subspace_sum");
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient(), all);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("subspace_intersection");
  const Field& f = a.field();
  const std::size_t n = a.ambient();
  // columns a_i and -b_j; kernel vectors (x, y) give sum x_i a_i in both spaces
  std::vector<Vector> cols = a.basis();
  for (const auto& v : b.basis()) cols.push_back(scale(f, f.neg(f.one()), v));
  if (cols.empty()) return Subspace(f, n);
  auto ker = kernel_basis(f, SparseMatrix::from_columns(n, cols));
  std::vector<Vector> out;
  for (const auto& k : ker) {
    Vector v(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!k[i].is_zero()) axpy(f, v, k[i], a.basis()[i]);
    out.push_back(std::move(v));
  }
  return Subspace::span(f, n, out);
}

bool is_subspace_of(const Subspace& inner, const Subspace& outer) {
  if (inner.ambient() != outer.ambient()) throw DimensionError("is_subspace_of");
  return std::all_of(inner.basis().begin(), inner.basis().end(),
                     [&](const Vector& v) { return outer.contains(v); });
}

std::size_t quotient_dimension(const Subspace& a, const Subspace& b) {
  if (!is_subspace_of(b, a))
    throw ValidationError("NotASubspace", "quotient requested for a space that is not contained in the other");
  return a.dim() - b.dim();
}

Subspace image(const Field& field, const SparseMatrix& map, const Subspace& domain) {
  std::vector<Vector> imgs;
  imgs.reserve(domain.dim());
  for (const auto& v : domain.basis()) imgs.push_back(apply(field, map, v));
  return Subspace::span(field, map.rows(), imgs);
}

Subspace column_space(const Field& field, const SparseMatrix& m) {
  return Subspace::span(field, m.rows(), [&] {
    std::vector<Vector> cols(m.cols(), Vector(m.rows()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const auto& e : m.row(i)) cols[e.index][i] = e.value;
    return cols;
  }());
}

}  // namespace parsmash
