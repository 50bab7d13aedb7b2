#include "parsmash/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "parsmash/errors.hpp"

namespace parsmash {

namespace {

Vector block(const Vector& v, std::size_t j, std::size_t d) {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(j * d), v.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
}

// e_b . v on L^n, one block at a time
Vector left_basis_action(const Algebra& a, std::size_t b, const Vector& v) {
  const Field& f = a.field();
  const std::size_t d = a.dim(), n = v.size() / d;
  Vector out(v.size());
  const SparseMatrix& l = a.left_basis(b);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < d; ++r) {
      Scalar acc;
      for (const auto& e : l.row(r)) {
        const Scalar& x = v[j * d + e.index];
        if (!x.is_zero()) f.add_mul(acc, e.value, x);
      }
      out[j * d + r] = std::move(acc);
    }
  return out;
}

std::vector<std::size_t> scan_order(std::size_t n, const ResolutionOptions& options, std::size_t stage) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (options.order == GeneratorOrder::reversed) {
    std::reverse(order.begin(), order.end());
  } else if (options.order == GeneratorOrder::shuffled) {
    std::mt19937_64 rng(options.seed + stage);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

// Generators of the L-submodule `within` of L^n; the submodule generated by v
// is spanned by the e_b v.
std::vector<Vector> free_generators(const Algebra& a, const std::vector<Vector>& within, std::size_t ambient,
                                    const ResolutionOptions& options, std::size_t stage) {
  EchelonForm ech(a.field(), ambient);
  std::vector<Vector> out;
  for (std::size_t i : scan_order(within.size(), options, stage)) {
    if (ech.rank() == within.size()) break;
    const Vector& v = within[i];
    if (ech.contains(v)) continue;
    for (std::size_t b = 0; b < a.dim(); ++b) ech.insert(left_basis_action(a, b, v));
    out.push_back(v);
  }
  return out;
}

// Columns (j, b) -> e_b v_j
SparseMatrix boundary_from(const Algebra& a, const std::vector<Vector>& gens, std::size_t rows) {
  std::vector<Vector> cols;
  cols.reserve(gens.size() * a.dim());
  for (const auto& v : gens)
    for (std::size_t b = 0; b < a.dim(); ++b) cols.push_back(left_basis_action(a, b, v));
  return SparseMatrix::from_columns(rows, cols);
}

void check_budget(std::size_t n, std::size_t d, const ResolutionOptions& options, std::size_t stage) {
  if (n * d > options.max_free_dim)
    throw BudgetExceeded("free module of rank " + std::to_string(n) + " at stage " + std::to_string(stage) +
                         " exceeds max_free_dim " + std::to_string(options.max_free_dim));
}

}  // namespace

SparseMatrix free_action(const Algebra& a, std::size_t basis, std::size_t n) {
  const std::size_t d = a.dim();
  SparseMatrix big(n * d, n * d);
  const SparseMatrix& l = a.left_basis(basis);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < d; ++r)
      for (const auto& e : l.row(r)) big.row(j * d + r).push_back({static_cast<uint32_t>(j * d + e.index), e.value});
  return big;
}

Resolution resolve_module(const AlgModule& m, std::size_t length, const ResolutionOptions& options) {
  const AlgebraPtr& ap = m.algebra();
  const Algebra& a = *ap;
  const Field& f = a.field();
  const std::size_t d = a.dim();

  Resolution r;
  r.algebra = ap;
  r.module_dim = m.dim();

  std::vector<Vector> basis;
  for (std::size_t i = 0; i < m.dim(); ++i) basis.push_back(unit_vector(f, m.dim(), i));
  std::vector<Vector> gens;
  {
    EchelonForm ech(f, m.dim());
    for (std::size_t i : scan_order(basis.size(), options, 0)) {
      if (ech.rank() == m.dim()) break;
      if (ech.contains(basis[i])) continue;
      Subspace s = spin(m, {basis[i]});
      for (const auto& w : s.basis()) ech.insert(w);
      gens.push_back(basis[i]);
    }
  }
  check_budget(gens.size(), d, options, 0);
  {
    std::vector<Vector> cols;
    for (const auto& x : gens)
      for (std::size_t b = 0; b < d; ++b) cols.push_back(m.act_basis(b, x));
    r.augmentation = SparseMatrix::from_columns(m.dim(), cols);
  }
  r.ranks.push_back(gens.size());
  r.generators.push_back(std::move(gens));

  const SparseMatrix* prev = &r.augmentation;
  for (std::size_t stage = 1; stage <= length; ++stage) {
    const std::size_t n = r.ranks.back();
    auto ker = kernel_basis(f, *prev);
    auto next = free_generators(a, ker, n * d, options, stage);
    check_budget(next.size(), d, options, stage);
    r.boundary.push_back(boundary_from(a, next, n * d));
    r.ranks.push_back(next.size());
    r.generators.push_back(std::move(next));
    prev = &r.boundary.back();
  }
  return r;
}

std::vector<Check> resolution_checks(const Resolution& r, const AlgModule& m) {
  const Field& f = m.field();
  std::vector<Check> out;
  out.push_back(verdict("augmentation surjective", rank(f, r.augmentation) == m.dim(),
                        "rank " + std::to_string(rank(f, r.augmentation)) + " < " + std::to_string(m.dim())));

  Check zero = pass("consecutive composites vanish");
  Check exact = pass("exact at every stage");
  const SparseMatrix* prev = &r.augmentation;
  for (std::size_t i = 0; i < r.boundary.size(); ++i) {
    const SparseMatrix& d = r.boundary[i];
    if (zero.ok() && multiply(f, *prev, d).nonzeros() != 0) zero = fail(zero.name, "stage " + std::to_string(i));
    const std::size_t ker = prev->cols() - rank(f, *prev);
    const std::size_t im = rank(f, d);
    if (exact.ok() && ker != im)
      exact = fail(exact.name, "stage " + std::to_string(i) + ": kernel " + std::to_string(ker) + ", image " +
                                   std::to_string(im));
    prev = &d;
  }
  out.push_back(std::move(zero));
  out.push_back(std::move(exact));
  return out;
}

ExtResult ext_from_resolution(const Resolution& r, const AlgModule& n, std::size_t max_degree) {
  if (r.length() < max_degree + 1)
    throw DimensionError("resolution of length " + std::to_string(r.length()) + " cannot give degree " +
                         std::to_string(max_degree));
  const Algebra& a = *r.algebra;
  const Field& f = a.field();
  const std::size_t d = a.dim(), nd = n.dim();

  ExtResult out;
  for (std::size_t i = 0; i <= max_degree; ++i) {
    // (phi o d_{i+1})(gen k) = sum_j rho(v_{kj}) phi_j
    const std::size_t src = r.ranks[i], dst = r.ranks[i + 1];
    SparseMatrix c(dst * nd, src * nd);
    for (std::size_t k = 0; k < dst; ++k) {
      const Vector& v = r.generators[i + 1][k];
      std::vector<SparseMatrix> blocks(src);
      for (std::size_t j = 0; j < src; ++j) {
        Vector vj = block(v, j, d);
        if (!is_zero(vj)) blocks[j] = n.act_matrix(vj);
      }
      for (std::size_t t = 0; t < nd; ++t) {
        SparseVec& row = c.row(k * nd + t);
        for (std::size_t j = 0; j < src; ++j)
          if (blocks[j].rows() != 0)
            for (const auto& e : blocks[j].row(t))
              row.push_back({static_cast<uint32_t>(j * nd + e.index), e.value});
      }
    }
    out.coboundary.push_back(std::move(c));
  }

  for (std::size_t i = 0; i <= max_degree; ++i) {
    auto cocycles = kernel_basis(f, out.coboundary[i]);
    EchelonForm ech(f, r.ranks[i] * nd);
    if (i > 0) {
      SparseMatrix prev = transpose(out.coboundary[i - 1]);
      for (std::size_t c = 0; c < prev.rows(); ++c) ech.insert(prev.row(c));
    }
    std::vector<Vector> reps;
    for (const auto& z : cocycles)
      if (ech.insert(z)) reps.push_back(z);
    out.dims.push_back(reps.size());
    out.representatives.push_back(std::move(reps));
  }
  return out;
}

}  // namespace parsmash
