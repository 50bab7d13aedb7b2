#include "parsmash/algebra.hpp"

#include <deque>

#include "parsmash/errors.hpp"

namespace parsmash {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

// Dense scratch vector with a list of touched coordinates.
struct Scratch {
  Vector values;
  std::vector<uint8_t> used;
  std::vector<uint32_t> touched;

  explicit Scratch(std::size_t n) : values(n), used(n, 0) {}

  void add(const Field& f, const SparseVec& v, const Scalar& c, bool subtract) {
    for (const auto& e : v) {
      if (!used[e.index]) {
        used[e.index] = 1;
        touched.push_back(e.index);
      }
      if (subtract)
        f.sub_mul(values[e.index], c, e.value);
      else
        f.add_mul(values[e.index], c, e.value);
    }
  }

  bool clear_and_test_zero() {
    bool zero = true;
    for (uint32_t i : touched) {
      if (!values[i].is_zero()) zero = false;
      values[i] = Scalar();
      used[i] = 0;
    }
    touched.clear();
    return zero;
  }
};

}  // namespace

class AlgebraBuilder {
 public:
  static AlgebraPtr build(const Field& field, std::size_t dim, std::vector<SparseVec> table, const Vector& unit,
                          AlgebraOptions options) {
    if (table.size() != dim * dim) throw DimensionError("structure table must have dim^2 entries");
    if (unit.size() != dim) throw DimensionError("unit has length " + idx(unit.size()) + ", expected " + idx(dim));
    auto a = std::make_shared<Algebra>();
    a->field_ = field;
    a->dim_ = dim;
    a->table_ = std::move(table);
    a->unit_ = unit;
    for (const auto& v : a->table_)
      for (const auto& e : v)
        if (e.index >= dim) throw DimensionError("structure constant index out of range");

    a->left_.assign(dim, SparseMatrix(dim, dim));
    a->right_.assign(dim, SparseMatrix(dim, dim));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t c = 0; c < dim; ++c) {
        for (const auto& e : a->product(i, c)) a->left_[i].row(e.index).push_back({static_cast<uint32_t>(c), e.value});
        for (const auto& e : a->product(c, i)) a->right_[i].row(e.index).push_back({static_cast<uint32_t>(c), e.value});
      }

    // unit law on basis elements
    for (std::size_t i = 0; i < dim; ++i) {
      Vector ei = a->basis_element(i);
      if (a->multiply(unit, ei) != ei || a->multiply(ei, unit) != ei)
        throw ValidationError("UnitLaw", "unit * e_i != e_i or e_i * unit != e_i", "i=" + idx(i));
    }
    if (options.check_associativity) {
      Check c = associativity_check(*a);
      if (!c.ok()) throw ValidationError("NotAssociative", "(e_i e_j) e_k != e_i (e_j e_k)", c.witness);
    }

    if (options.labels.empty())
      for (std::size_t i = 0; i < dim; ++i) options.labels.push_back("e" + idx(i));
    if (options.labels.size() != dim) throw InputError("expected " + idx(dim) + " basis labels", "labels");
    a->labels_ = std::move(options.labels);

    if (options.generators.empty()) {
      for (std::size_t i = 0; i < dim; ++i) a->generators_.push_back(a->basis_element(i));
    } else {
      for (const auto& g : options.generators)
        if (g.size() != dim) throw DimensionError("generator length");
      a->generators_ = std::move(options.generators);
      // words in the generators must span the algebra
      EchelonForm ech(field, dim);
      std::deque<Vector> queue;
      if (ech.insert(unit)) queue.push_back(unit);
      while (!queue.empty()) {
        Vector v = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : a->generators_) {
          Vector w = a->multiply(g, v);
          if (ech.insert(w)) queue.push_back(std::move(w));
        }
      }
      if (ech.rank() != dim)
        throw ValidationError("NotGenerating", "declared generators span a subalgebra of dimension " +
                                                   idx(ech.rank()) + " < " + idx(dim));
    }
    return a;
  }
};

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionError("Algebra::multiply");
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const auto& p = product(i, j);
      if (p.empty()) continue;
      Scalar c = field_.mul(a[i], b[j]);
      for (const auto& e : p) field_.add_mul(r[e.index], c, e.value);
    }
  }
  return r;
}

SparseMatrix Algebra::left_mult(const Vector& a) const {
  if (a.size() != dim_) throw DimensionError("Algebra::left_mult");
  return linear_combination(field_, a, left_);
}

SparseMatrix Algebra::right_mult(const Vector& a) const {
  if (a.size() != dim_) throw DimensionError("Algebra::right_mult");
  return linear_combination(field_, a, right_);
}

std::string Algebra::format(const Vector& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (!out.empty())
      out += neg ? " - " : " + ";
    else if (neg)
      out += "-";
    if (c != "1") out += c + "*";
    out += labels_[i];
  }
  return out.empty() ? "0" : out;
}

std::vector<std::vector<Vector>> Algebra::structure() const {
  std::vector<std::vector<Vector>> s(dim_, std::vector<Vector>(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) s[i][j] = to_dense(product(i, j), dim_);
  return s;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

AlgebraPtr make_algebra(const Field& field, std::size_t dim, const std::vector<std::vector<Vector>>& structure,
                        const Vector& unit, AlgebraOptions options) {
  if (structure.size() != dim) throw DimensionError("structure has " + idx(structure.size()) + " rows");
  std::vector<SparseVec> table;
  table.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (structure[i].size() != dim) throw DimensionError("structure row " + idx(i));
    for (std::size_t j = 0; j < dim; ++j) {
      if (structure[i][j].size() != dim) throw DimensionError("structure entry (" + idx(i) + "," + idx(j) + ")");
      table.push_back(to_sparse(structure[i][j]));
    }
  }
  return AlgebraBuilder::build(field, dim, std::move(table), unit, std::move(options));
}

AlgebraPtr make_algebra_sparse(const Field& field, std::size_t dim, std::vector<SparseVec> table, const Vector& unit,
                               AlgebraOptions options) {
  return AlgebraBuilder::build(field, dim, std::move(table), unit, std::move(options));
}

Check associativity_check(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t d = a.dim();
  Scratch s(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& ij = a.product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        for (const auto& e : ij) s.add(f, a.product(e.index, k), e.value, false);
        for (const auto& e : a.product(j, k)) s.add(f, a.product(i, e.index), e.value, true);
        if (!s.clear_and_test_zero())
          return fail("associativity", "(" + idx(i) + "," + idx(j) + "," + idx(k) + ")");
      }
    }
  return pass("associativity");
}

Check central_idempotent_check(const Algebra& a, const Vector& u) {
  if (u.size() != a.dim()) throw DimensionError("central_idempotent_check");
  Vector uu = a.multiply(u, u);
  if (uu != u) return fail("central idempotent", "u*u = " + a.format(uu) + " != u = " + a.format(u));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vector x = a.basis_element(i);
    Vector ux = a.multiply(u, x), xu = a.multiply(x, u);
    if (ux != xu)
      return fail("central idempotent", "u*" + a.labels()[i] + " = " + a.format(ux) + " != " + a.labels()[i] +
                                            "*u = " + a.format(xu));
  }
  return pass("central idempotent");
}

}  // namespace parsmash
