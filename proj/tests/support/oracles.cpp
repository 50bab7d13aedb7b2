#include "oracles.hpp"

namespace oracle {

std::size_t rank(const Field& f, Rows rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Scalar inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar k = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(k, rows[r][j]));
    }
    ++r;
  }
  return r;
}

Rows rows_of(const SparseMatrix& m) {
  Rows out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_dense(m.row(r), m.cols()));
  return out;
}

Rows columns_of(const Matrix& m) {
  Rows out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

bool in_span(const Field& f, const Rows& rows, const Vector& v) {
  Rows with = rows;
  with.push_back(v);
  return rank(f, rows) == rank(f, with);
}

std::size_t kpar_dim_by_enumeration(std::size_t order) {
  std::size_t count = 0;
  for (uint64_t t = 0; t < (uint64_t{1} << order); ++t) {
    if (!(t & 1)) continue;
    for (std::size_t g = 0; g < order; ++g)
      if (t >> g & 1) ++count;
  }
  return count;
}

namespace {

Scalar entry(const SparseMatrix& m, std::size_t r, std::size_t c) {
  for (const auto& e : m.row(r))
    if (e.index == c) return e.value;
  return Scalar();
}

// Row of the linear system in the unknown F (rows n x cols m, row-major) for
// entry (r, c) of F A - B F.
Vector commutation_row(const Field& f, const SparseMatrix& a, const SparseMatrix& b, std::size_t n, std::size_t m,
                       std::size_t r, std::size_t c) {
  Vector row(n * m);
  for (std::size_t k = 0; k < m; ++k) row[r * m + k] = f.add(row[r * m + k], entry(a, k, c));
  for (std::size_t k = 0; k < n; ++k) row[k * m + c] = f.sub(row[k * m + c], entry(b, r, k));
  return row;
}

}  // namespace

std::size_t hom_dim(const AlgModule& m, const AlgModule& n) {
  const Field& f = m.field();
  Rows sys;
  for (std::size_t i = 0; i < m.algebra()->dim(); ++i)
    for (std::size_t r = 0; r < n.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c)
        sys.push_back(commutation_row(f, m.action(i), n.action(i), n.dim(), m.dim(), r, c));
  return n.dim() * m.dim() - rank(f, sys);
}

DerDims partial_derivations(const Kpar& k, const AlgModule& m) {
  const Field& f = k.field();
  const Algebra& L = *k.algebra();
  const std::size_t d = L.dim(), md = m.dim(), n = d * md;
  // unknown (x, j) = coordinate j of delta(e_x)
  Rows sys;
  auto emit = [&](const std::vector<Vector>& rows) {
    for (const auto& r : rows) sys.push_back(r);
  };
  for (std::size_t a = 0; a < d; ++a) {
    Vector ea = L.basis_element(a);
    for (std::size_t b = 0; b < d; ++b) {
      Vector eb = L.basis_element(b);
      Vector ab = L.multiply(ea, eb);
      Vector aeb = L.multiply(ea, embed_b(k, epsilon(k, eb)));
      const SparseMatrix& act = m.action(a);
      // component j: delta(ab)_j - sum_l act[j][l] delta(b)_l - delta(a eps(b))_j
      std::vector<Vector> rows(md, Vector(n));
      for (std::size_t j = 0; j < md; ++j) {
        Vector& row = rows[j];
        for (std::size_t i = 0; i < d; ++i) {
          if (!ab[i].is_zero()) row[i * md + j] = f.add(row[i * md + j], ab[i]);
          if (!aeb[i].is_zero()) row[i * md + j] = f.sub(row[i * md + j], aeb[i]);
        }
        for (const auto& e : act.row(j)) row[b * md + e.index] = f.sub(row[b * md + e.index], e.value);
      }
      emit(rows);
    }
  }
  for (std::size_t t = 0; t < k.b_dim(); ++t) {
    Vector bt = embed_b(k, unit_vector(f, k.b_dim(), t));
    SparseMatrix bact = m.act_matrix(bt);
    for (std::size_t x = 0; x < d; ++x) {
      Vector bx = L.multiply(bt, L.basis_element(x));
      std::vector<Vector> rows(md, Vector(n));
      for (std::size_t j = 0; j < md; ++j) {
        Vector& row = rows[j];
        for (std::size_t i = 0; i < d; ++i)
          if (!bx[i].is_zero()) row[i * md + j] = f.add(row[i * md + j], bx[i]);
        for (const auto& e : bact.row(j)) row[x * md + e.index] = f.sub(row[x * md + e.index], e.value);
      }
      emit(rows);
    }
  }
  DerDims out;
  out.der = n - rank(f, sys);
  Rows inner;
  for (std::size_t j = 0; j < md; ++j) {
    Vector v = unit_vector(f, md, j);
    Vector row(n);
    for (std::size_t x = 0; x < d; ++x) {
      Vector ex = L.basis_element(x);
      Vector val = sub(f, m.act(ex, v), m.act(embed_b(k, epsilon(k, ex)), v));
      for (std::size_t i = 0; i < md; ++i) row[x * md + i] = val[i];
    }
    inner.push_back(row);
  }
  out.inner = rank(f, inner);
  return out;
}

std::size_t center_dim(const Bimodule& m) {
  const Field& f = m.field();
  Rows sys;
  for (std::size_t i = 0; i < m.left_algebra()->dim(); ++i)
    for (const auto& r : rows_of(sub(f, m.left(i), m.right(i)))) sys.push_back(r);
  return m.dim() - rank(f, sys);
}

LowHochschild hochschild_low(const Bimodule& m) {
  const Field& f = m.field();
  const Algebra& A = *m.left_algebra();
  const std::size_t d = A.dim(), md = m.dim(), n = d * md;
  Rows sys;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vector ab = A.multiply(A.basis_element(a), A.basis_element(b));
      // D(ab) - a D(b) - D(a) b = 0
      for (std::size_t j = 0; j < md; ++j) {
        Vector row(n);
        for (std::size_t i = 0; i < d; ++i)
          if (!ab[i].is_zero()) row[i * md + j] = f.add(row[i * md + j], ab[i]);
        for (const auto& e : m.left(a).row(j)) row[b * md + e.index] = f.sub(row[b * md + e.index], e.value);
        for (const auto& e : m.right(b).row(j)) row[a * md + e.index] = f.sub(row[a * md + e.index], e.value);
        sys.push_back(std::move(row));
      }
    }
  Rows inner;
  for (std::size_t j = 0; j < md; ++j) {
    Vector v = unit_vector(f, md, j), row(n);
    for (std::size_t x = 0; x < d; ++x) {
      Vector val = sub(f, apply(f, m.left(x), v), apply(f, m.right(x), v));
      for (std::size_t i = 0; i < md; ++i) row[x * md + i] = val[i];
    }
    inner.push_back(std::move(row));
  }
  LowHochschild out;
  out.h0 = center_dim(m);
  out.h1 = n - rank(f, sys) - rank(f, inner);
  return out;
}

std::size_t tensor_dim(const Kpar& k, const PartialAction& pa, const SparseMatrix& phi0, const AlgModule& x,
                       const Bimodule& m) {
  const Field& f = k.field();
  const Algebra& A = *pa.algebra;
  const std::size_t xd = x.dim(), md = m.dim();
  const std::size_t order = k.group.order();
  Rows rel;
  for (std::size_t t = 0; t < k.b_dim(); ++t) {
    Vector u = A.unit();
    for (std::size_t g = 1; g < order; ++g)
      if (t & element_bit(g)) u = A.multiply(u, pa.u[g]);
    SparseMatrix on_m = m.left_matrix(apply(f, phi0, u));
    SparseMatrix on_x = x.act_matrix(embed_b(k, unit_vector(f, k.b_dim(), t)));
    for (std::size_t i = 0; i < xd; ++i)
      for (std::size_t j = 0; j < md; ++j) {
        Vector r(xd * md);
        for (std::size_t a = 0; a < xd; ++a) {
          Scalar c = entry(on_x, a, i);
          if (!c.is_zero()) r[a * md + j] = f.add(r[a * md + j], c);
        }
        for (std::size_t b = 0; b < md; ++b) {
          Scalar c = entry(on_m, b, j);
          if (!c.is_zero()) r[i * md + b] = f.sub(r[i * md + b], c);
        }
        rel.push_back(std::move(r));
      }
  }
  return xd * md - rank(f, rel);
}

}  // namespace oracle
