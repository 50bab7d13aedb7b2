#include "parsmash/hochschild.hpp"

#include <map>

#include "parsmash/errors.hpp"

namespace parsmash {

namespace {

std::size_t power(std::size_t k, std::size_t p) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < p; ++i) r *= k;
  return r;
}

std::vector<std::size_t> digits(std::size_t index, std::size_t k, std::size_t len) {
  std::vector<std::size_t> out(len);
  for (std::size_t i = len; i-- > 0;) {
    out[i] = index % k;
    index /= k;
  }
  return out;
}

std::size_t encode(const std::vector<std::size_t>& t, std::size_t k) {
  std::size_t r = 0;
  for (std::size_t x : t) r = r * k + x;
  return r;
}

class BlockRows {
 public:
  BlockRows(const Field& f, std::size_t rows) : f_(f), rows_(rows) {}

  void add(const Scalar& c, const SparseMatrix& mat, std::size_t offset) {
    for (std::size_t r = 0; r < mat.rows(); ++r)
      for (const auto& e : mat.row(r)) f_.add_mul(rows_[r][static_cast<uint32_t>(offset + e.index)], c, e.value);
  }
  void add_identity(const Scalar& c, std::size_t offset) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Scalar& s = rows_[r][static_cast<uint32_t>(offset + r)];
      s = f_.add(s, c);
    }
  }
  void flush_into(SparseMatrix& out, std::size_t first_row) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      SparseVec v;
      for (auto& [i, x] : rows_[r])
        if (!x.is_zero()) v.push_back({i, std::move(x)});
      out.row(first_row + r) = std::move(v);
      rows_[r].clear();
    }
  }

 private:
  const Field& f_;
  std::vector<std::map<uint32_t, Scalar>> rows_;
};

}  // namespace

SparseMatrix kronecker(const Field& field, const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t r = 0; r < b.rows(); ++r) {
      SparseVec& row = out.row(i * b.rows() + r);
      for (const auto& ea : a.row(i))
        for (const auto& eb : b.row(r))
          row.push_back({static_cast<uint32_t>(ea.index * b.cols() + eb.index), field.mul(ea.value, eb.value)});
    }
  return out;
}

HochschildComplex hochschild(const Bimodule& m, const HochschildOptions& options) {
  const AlgebraPtr& ap = m.left_algebra();
  const Algebra& a = *ap;
  const Field& f = a.field();
  const std::size_t dm = m.dim(), top = options.max_degree;

  HochschildComplex c;
  c.algebra = ap;
  c.module_dim = dm;
  c.normalized = options.normalized;

  Subspace ones = Subspace::span(f, a.dim(), {a.unit()});
  if (options.normalized) {
    std::size_t pivot = ones.pivots()[0];
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (j != pivot) c.arguments.push_back(j);
  } else {
    for (std::size_t j = 0; j < a.dim(); ++j) c.arguments.push_back(j);
  }
  const std::size_t k = c.arguments.size();
  if (power(k, top + 1) * dm > options.max_cochain_dim)
    throw BudgetExceeded("Hochschild cochains C^" + std::to_string(top + 1) + " of dimension " +
                         std::to_string(power(k, top + 1) * dm) + " exceed " +
                         std::to_string(options.max_cochain_dim));

  // products of argument basis elements, in argument coordinates
  std::vector<SparseVec> prod(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vector p = to_dense(a.product(c.arguments[i], c.arguments[j]), a.dim());
      prod[i * k + j] = to_sparse(options.normalized ? quotient_projection(ones, p) : p);
    }

  const Scalar one = f.one(), minus = f.neg(f.one());
  for (std::size_t p = 0; p <= top + 1; ++p) c.cochain_dims.push_back(power(k, p) * dm);

  for (std::size_t p = 0; p <= top; ++p) {
    const std::size_t rows_tuples = power(k, p + 1);
    SparseMatrix d(rows_tuples * dm, c.cochain_dims[p]);
    BlockRows acc(f, dm);
    for (std::size_t t = 0; t < rows_tuples; ++t) {
      auto args = digits(t, k, p + 1);
      {
        std::vector<std::size_t> rest(args.begin() + 1, args.end());
        acc.add(one, m.left(c.arguments[args[0]]), encode(rest, k) * dm);
      }
      for (std::size_t i = 1; i <= p; ++i) {
        const Scalar sign = i % 2 ? minus : one;
        for (const auto& e : prod[args[i - 1] * k + args[i]]) {
          std::vector<std::size_t> merged(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(i - 1));
          merged.push_back(e.index);
          merged.insert(merged.end(), args.begin() + static_cast<std::ptrdiff_t>(i + 1), args.end());
          acc.add_identity(f.mul(sign, e.value), encode(merged, k) * dm);
        }
      }
      {
        std::vector<std::size_t> init(args.begin(), args.end() - 1);
        acc.add((p + 1) % 2 ? minus : one, m.right(c.arguments[args[p]]), encode(init, k) * dm);
      }
      acc.flush_into(d, t * dm);
    }
    c.differential.push_back(std::move(d));
  }

  for (std::size_t p = 0; p <= top; ++p) {
    auto cocycles = kernel_basis(f, c.differential[p]);
    EchelonForm ech(f, c.cochain_dims[p]);
    if (p > 0) {
      SparseMatrix prev = transpose(c.differential[p - 1]);
      for (std::size_t r = 0; r < prev.rows(); ++r) ech.insert(prev.row(r));
    }
    std::vector<Vector> reps;
    for (const auto& z : cocycles)
      if (ech.insert(z)) reps.push_back(z);
    c.dims.push_back(reps.size());
    c.representatives.push_back(std::move(reps));
  }
  return c;
}

std::vector<Check> hochschild_checks(const HochschildComplex& c) {
  const Field& f = c.algebra->field();
  Check sq = pass("d^2 = 0");
  for (std::size_t p = 0; p + 1 < c.differential.size(); ++p)
    if (multiply(f, c.differential[p + 1], c.differential[p]).nonzeros() != 0) {
      sq = fail(sq.name, "degree " + std::to_string(p));
      break;
    }
  return {sq};
}

}  // namespace parsmash
