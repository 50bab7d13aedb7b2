#include <algorithm>
#include <deque>
#include <map>

#include "parsmash/algebra.hpp"
#include "parsmash/errors.hpp"

namespace parsmash {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

// Adds coef * var to a row under construction; rows are normalised later.
using RowBuilder = std::map<uint32_t, Scalar>;

void accumulate(const Field& f, RowBuilder& row, uint32_t var, const Scalar& coef) {
  auto [it, inserted] = row.try_emplace(var, coef);
  if (!inserted) it->second = f.add(it->second, coef);
}

SparseVec finish(RowBuilder& row) {
  SparseVec out;
  for (auto& [k, v] : row)
    if (!v.is_zero()) out.push_back({k, std::move(v)});
  row.clear();
  return out;
}

std::vector<SparseMatrix> generator_matrices(const AlgModule& m) {
  std::vector<SparseMatrix> out;
  for (const auto& g : m.algebra()->generators()) out.push_back(m.act_matrix(g));
  return out;
}

// Rows of the system f A = B f in the entries of f (rows x cols, row-major).
void commutation_rows(const Field& field, const SparseMatrix& a, const SparseMatrix& b, std::size_t rows,
                      std::size_t cols, std::vector<SparseVec>& out) {
  SparseMatrix at = transpose(a);
  RowBuilder row;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      for (const auto& e : at.row(c)) accumulate(field, row, static_cast<uint32_t>(r * cols + e.index), e.value);
      for (const auto& e : b.row(r))
        accumulate(field, row, static_cast<uint32_t>(e.index * cols + c), field.neg(e.value));
      SparseVec v = finish(row);
      if (!v.empty()) out.push_back(std::move(v));
    }
}

HomSpace reshape(const Field& field, std::size_t rows, std::size_t cols, const std::vector<Vector>& flat) {
  HomSpace h;
  h.source_dim = cols;
  h.target_dim = rows;
  Subspace s = Subspace::span(field, rows * cols, flat);
  for (const auto& v : s.basis()) {
    Matrix f(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) f(r, c) = v[r * cols + c];
    h.basis.push_back(std::move(f));
  }
  return h;
}

SparseMatrix rows_to_matrix(std::size_t cols, std::vector<SparseVec> rows) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(i) = std::move(rows[i]);
  return m;
}

HomSpace hom_direct(const AlgModule& m, const AlgModule& n) {
  const Field& f = m.field();
  std::vector<SparseVec> rows;
  const auto& gens = m.algebra()->generators();
  for (const auto& g : gens) commutation_rows(f, m.act_matrix(g), n.act_matrix(g), n.dim(), m.dim(), rows);
  auto ker = kernel_basis(f, rows_to_matrix(n.dim() * m.dim(), std::move(rows)));
  return reshape(f, n.dim(), m.dim(), ker);
}

AlgModule free_module(const AlgebraPtr& a, std::size_t k) {
  const std::size_t d = a->dim();
  std::vector<SparseMatrix> act;
  for (std::size_t i = 0; i < d; ++i) {
    SparseMatrix big(k * d, k * d);
    const SparseMatrix& l = a->left_basis(i);
    for (std::size_t blk = 0; blk < k; ++blk)
      for (std::size_t r = 0; r < d; ++r)
        for (const auto& e : l.row(r))
          big.row(blk * d + r).push_back({static_cast<uint32_t>(blk * d + e.index), e.value});
    act.push_back(std::move(big));
  }
  return AlgModule(a, k * d, std::move(act));
}

// Presentation of m: generators x_i, the map P: Lambda^k -> M with columns
// e_b x_i, and Lambda-generators of its kernel (the relations).
struct Presentation {
  std::vector<Vector> gens;
  SparseMatrix p;  // m.dim() x (k * d)
  std::vector<Vector> relations;
};

Presentation present(const AlgModule& m) {
  const Field& f = m.field();
  const AlgebraPtr& a = m.algebra();
  const std::size_t d = a->dim();
  Presentation pr;
  pr.gens = greedy_generators(m);
  const std::size_t k = pr.gens.size();
  std::vector<Vector> cols;
  cols.reserve(k * d);
  for (const auto& x : pr.gens)
    for (std::size_t b = 0; b < d; ++b) cols.push_back(m.act_basis(b, x));
  pr.p = SparseMatrix::from_columns(m.dim(), cols);
  if (k == 0) return pr;
  auto rel = kernel_basis(f, pr.p);
  if (rel.empty()) return pr;
  AlgModule fr = free_module(a, k);
  pr.relations = greedy_generators(fr, Subspace::span(f, k * d, rel));
  return pr;
}

SparseMatrix relation_system(const AlgModule& n, const Presentation& pr, std::size_t d) {
  const Field& f = n.field();
  const std::size_t k = pr.gens.size(), nd = n.dim();
  std::vector<SparseVec> rows;
  RowBuilder row;
  for (const auto& r : pr.relations) {
    std::vector<SparseMatrix> blocks;
    for (std::size_t i = 0; i < k; ++i) {
      Vector ri(r.begin() + static_cast<std::ptrdiff_t>(i * d), r.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
      blocks.push_back(is_zero(ri) ? SparseMatrix(nd, nd) : n.act_matrix(ri));
    }
    for (std::size_t t = 0; t < nd; ++t) {
      for (std::size_t i = 0; i < k; ++i)
        for (const auto& e : blocks[i].row(t)) accumulate(f, row, static_cast<uint32_t>(i * nd + e.index), e.value);
      SparseVec v = finish(row);
      if (!v.empty()) rows.push_back(std::move(v));
    }
  }
  return rows_to_matrix(k * nd, std::move(rows));
}

HomSpace hom_presented(const AlgModule& m, const AlgModule& n) {
  const Field& f = m.field();
  const std::size_t d = m.algebra()->dim();
  Presentation pr = present(m);
  const std::size_t k = pr.gens.size(), nd = n.dim();
  HomSpace h;
  h.source_dim = m.dim();
  h.target_dim = nd;
  if (k == 0 || nd == 0) return h;
  auto ys = kernel_basis(f, relation_system(n, pr, d));
  if (ys.empty()) return h;

  // f is determined on the independent columns e_b x_i of P
  RrefResult rr = rref(f, pr.p);
  std::vector<Vector> xcols;
  for (std::size_t j : rr.pivots) {
    Vector c(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (const auto& e : pr.p.row(r))
        if (e.index == j) c[r] = e.value;
    xcols.push_back(std::move(c));
  }
  auto xinv = inverse(f, Matrix::from_columns(m.dim(), xcols));
  if (!xinv) throw ValidationError("InternalError", "presentation columns are not a basis");

  std::vector<Vector> flat;
  for (const auto& y : ys) {
    std::vector<Vector> fcols;
    for (std::size_t j : rr.pivots) {
      std::size_t i = j / d, b = j % d;
      Vector yi(y.begin() + static_cast<std::ptrdiff_t>(i * nd), y.begin() + static_cast<std::ptrdiff_t>((i + 1) * nd));
      fcols.push_back(n.act_basis(b, yi));
    }
    Matrix fm = multiply(f, Matrix::from_columns(nd, fcols), *xinv);
    flat.push_back(fm.data());
  }
  return reshape(f, nd, m.dim(), flat);
}

void require_same_algebra(const AlgModule& m, const AlgModule& n) {
  if (m.algebra() != n.algebra() && (m.algebra()->dim() != n.algebra()->dim() || m.field() != n.field()))
    throw DimensionError("modules over different algebras");
}

}  // namespace

// ------------------------------------------------------------- AlgModule

SparseMatrix AlgModule::act_matrix(const Vector& a) const {
  if (a.size() != action_.size()) throw DimensionError("AlgModule::act_matrix");
  return linear_combination(field(), a, action_);
}

Vector AlgModule::act(const Vector& a, const Vector& v) const {
  if (a.size() != action_.size() || v.size() != dim_) throw DimensionError("AlgModule::act");
  Vector r(dim_);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) axpy(field(), r, a[i], apply(field(), action_[i], v));
  return r;
}

Vector AlgModule::act_basis(std::size_t i, const Vector& v) const { return apply(field(), action_.at(i), v); }

std::vector<Check> module_checks(const AlgModule& m) {
  const Field& f = m.field();
  const Algebra& a = *m.algebra();
  std::vector<Check> out;
  out.push_back(verdict("unit acts as identity", m.act_matrix(a.unit()) == SparseMatrix::identity(f, m.dim())));
  Check mult = pass("action multiplicative");
  for (std::size_t gi = 0; gi < a.generators().size() && mult.ok(); ++gi) {
    const Vector& g = a.generators()[gi];
    SparseMatrix rg = m.act_matrix(g);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector gj = a.multiply(g, a.basis_element(j));
      if (multiply(f, rg, m.action(j)) != m.act_matrix(gj)) {
        mult = fail("action multiplicative", "generator " + idx(gi) + ", basis " + idx(j));
        break;
      }
    }
  }
  out.push_back(std::move(mult));
  return out;
}

AlgModule make_module(AlgebraPtr algebra, std::size_t dim, std::vector<SparseMatrix> action) {
  if (action.size() != algebra->dim())
    throw DimensionError("module action has " + idx(action.size()) + " matrices, algebra has dimension " +
                         idx(algebra->dim()));
  for (std::size_t i = 0; i < action.size(); ++i)
    if (action[i].rows() != dim || action[i].cols() != dim)
      throw DimensionError("action matrix " + idx(i) + " is not " + idx(dim) + "x" + idx(dim));
  AlgModule m(std::move(algebra), dim, std::move(action));
  auto checks = module_checks(m);
  if (!checks[0].ok()) throw ValidationError("UnitLaw", "the unit does not act as the identity");
  if (!checks[1].ok()) throw ValidationError("ActionNotMultiplicative", "rho(ab) != rho(a) rho(b)", checks[1].witness);
  return m;
}

AlgModule regular_module(const AlgebraPtr& a) {
  std::vector<SparseMatrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->left_basis(i));
  return AlgModule(a, a->dim(), std::move(act));
}

AlgModule zero_module(const AlgebraPtr& a) {
  return AlgModule(a, 0, std::vector<SparseMatrix>(a->dim(), SparseMatrix(0, 0)));
}

AlgModule submodule(const AlgModule& m, const Subspace& s) {
  if (s.ambient() != m.dim()) throw DimensionError("submodule: subspace ambient dimension");
  std::vector<SparseMatrix> act;
  for (std::size_t i = 0; i < m.actions().size(); ++i) {
    std::vector<Vector> cols;
    for (const auto& v : s.basis()) {
      Vector w = m.act_basis(i, v);
      if (!s.contains(w)) throw ValidationError("NotSubmodule", "subspace not closed under the action", "basis " + idx(i));
      cols.push_back(s.coordinates(w));
    }
    act.push_back(SparseMatrix::from_columns(s.dim(), cols));
  }
  return AlgModule(m.algebra(), s.dim(), std::move(act));
}

Vector quotient_projection(const Subspace& s, const Vector& v) {
  const Field& f = s.field();
  Vector r = v;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Scalar c = r[s.pivots()[k]];
    if (!c.is_zero()) axpy(f, r, f.neg(c), s.basis()[k]);
  }
  Vector out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < r.size(); ++c) {
    if (p < s.pivots().size() && s.pivots()[p] == c) {
      ++p;
      continue;
    }
    out.push_back(std::move(r[c]));
  }
  return out;
}

AlgModule quotient_module(const AlgModule& m, const Subspace& s) {
  if (s.ambient() != m.dim()) throw DimensionError("quotient_module: subspace ambient dimension");
  const Field& f = m.field();
  std::vector<std::size_t> complement;
  std::size_t p = 0;
  for (std::size_t c = 0; c < m.dim(); ++c) {
    if (p < s.pivots().size() && s.pivots()[p] == c)
      ++p;
    else
      complement.push_back(c);
  }
  std::vector<SparseMatrix> act;
  for (std::size_t i = 0; i < m.actions().size(); ++i) {
    std::vector<Vector> cols;
    for (std::size_t c : complement) cols.push_back(quotient_projection(s, m.act_basis(i, unit_vector(f, m.dim(), c))));
    // closure of s is required for the quotient to be a module
    for (const auto& v : s.basis())
      if (!s.contains(m.act_basis(i, v)))
        throw ValidationError("NotSubmodule", "quotient by a subspace that is not a submodule", "basis " + idx(i));
    act.push_back(SparseMatrix::from_columns(complement.size(), cols));
  }
  return AlgModule(m.algebra(), complement.size(), std::move(act));
}

AlgModule restrict_scalars(const AlgModule& m, const AlgebraPtr& source, const SparseMatrix& f) {
  if (f.rows() != m.algebra()->dim() || f.cols() != source->dim()) throw DimensionError("restrict_scalars");
  Matrix fd = f.to_dense();
  std::vector<SparseMatrix> act;
  for (std::size_t i = 0; i < source->dim(); ++i) act.push_back(m.act_matrix(fd.column(i)));
  return AlgModule(source, m.dim(), std::move(act));
}

namespace {

void spin_into(const std::vector<SparseMatrix>& gens, const Field& f, EchelonForm& ech, const Vector& start,
               std::vector<Vector>& found) {
  std::deque<Vector> queue;
  if (ech.insert(start)) {
    found.push_back(start);
    queue.push_back(start);
  }
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Vector w = apply(f, g, v);
      if (ech.insert(w)) {
        found.push_back(w);
        queue.push_back(std::move(w));
      }
    }
  }
}

}  // namespace

Subspace spin(const AlgModule& m, const std::vector<Vector>& vectors) {
  const Field& f = m.field();
  auto gens = generator_matrices(m);
  EchelonForm ech(f, m.dim());
  std::vector<Vector> found;
  for (const auto& v : vectors) spin_into(gens, f, ech, v, found);
  return Subspace::span(f, m.dim(), found);
}

std::vector<Vector> greedy_generators(const AlgModule& m, const std::optional<Subspace>& within) {
  const Field& f = m.field();
  auto gens = generator_matrices(m);
  EchelonForm ech(f, m.dim());
  std::vector<Vector> found, out;
  const std::size_t count = within ? within->dim() : m.dim();
  for (std::size_t i = 0; i < count; ++i) {
    Vector v = within ? within->basis()[i] : unit_vector(f, m.dim(), i);
    if (ech.contains(v)) continue;
    out.push_back(v);
    spin_into(gens, f, ech, v, found);
  }
  return out;
}

HomSpace hom_space(const AlgModule& m, const AlgModule& n, HomMethod method) {
  require_same_algebra(m, n);
  if (method == HomMethod::automatic) method = m.dim() * n.dim() <= 400 ? HomMethod::direct : HomMethod::presentation;
  if (m.dim() == 0 || n.dim() == 0) {
    HomSpace h;
    h.source_dim = m.dim();
    h.target_dim = n.dim();
    return h;
  }
  return method == HomMethod::direct ? hom_direct(m, n) : hom_presented(m, n);
}

std::size_t hom_dimension(const AlgModule& m, const AlgModule& n) {
  require_same_algebra(m, n);
  if (m.dim() == 0 || n.dim() == 0) return 0;
  Presentation pr = present(m);
  SparseMatrix sys = relation_system(n, pr, m.algebra()->dim());
  return sys.cols() - rank(m.field(), sys);
}

bool is_module_map(const AlgModule& m, const AlgModule& n, const Matrix& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) throw DimensionError("is_module_map");
  const Field& fld = m.field();
  for (const auto& g : m.algebra()->generators()) {
    Matrix lhs = multiply(fld, f, m.act_matrix(g).to_dense());
    Matrix rhs = multiply(fld, n.act_matrix(g).to_dense(), f);
    if (lhs != rhs) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Bimodule

SparseMatrix Bimodule::left_matrix(const Vector& a) const { return linear_combination(field(), a, left_); }
SparseMatrix Bimodule::right_matrix(const Vector& b) const { return linear_combination(field(), b, right_); }

std::vector<Check> bimodule_checks(const Bimodule& m) {
  const Field& f = m.field();
  const Algebra& l = *m.left_algebra();
  const Algebra& r = *m.right_algebra();
  const SparseMatrix id = SparseMatrix::identity(f, m.dim());
  std::vector<Check> out;
  out.push_back(verdict("left unit", m.left_matrix(l.unit()) == id));
  out.push_back(verdict("right unit", m.right_matrix(r.unit()) == id));

  Check lm = pass("left action multiplicative");
  for (std::size_t gi = 0; gi < l.generators().size() && lm.ok(); ++gi) {
    SparseMatrix lg = m.left_matrix(l.generators()[gi]);
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (multiply(f, lg, m.left(j)) != m.left_matrix(l.multiply(l.generators()[gi], l.basis_element(j)))) {
        lm = fail("left action multiplicative", "generator " + idx(gi) + ", basis " + idx(j));
        break;
      }
  }
  out.push_back(std::move(lm));

  Check rm = pass("right action multiplicative");
  for (std::size_t gi = 0; gi < r.generators().size() && rm.ok(); ++gi) {
    SparseMatrix rg = m.right_matrix(r.generators()[gi]);
    for (std::size_t j = 0; j < r.dim(); ++j)
      if (multiply(f, rg, m.right(j)) != m.right_matrix(r.multiply(r.basis_element(j), r.generators()[gi]))) {
        rm = fail("right action multiplicative", "generator " + idx(gi) + ", basis " + idx(j));
        break;
      }
  }
  out.push_back(std::move(rm));

  Check comm = pass("actions commute");
  for (std::size_t gi = 0; gi < l.generators().size() && comm.ok(); ++gi) {
    SparseMatrix lg = m.left_matrix(l.generators()[gi]);
    for (std::size_t hi = 0; hi < r.generators().size(); ++hi) {
      SparseMatrix rh = m.right_matrix(r.generators()[hi]);
      if (multiply(f, lg, rh) != multiply(f, rh, lg)) {
        comm = fail("actions commute", "left generator " + idx(gi) + ", right generator " + idx(hi));
        break;
      }
    }
  }
  out.push_back(std::move(comm));
  return out;
}

Bimodule make_bimodule(AlgebraPtr left_alg, AlgebraPtr right_alg, std::size_t dim, std::vector<SparseMatrix> left,
                       std::vector<SparseMatrix> right) {
  if (left.size() != left_alg->dim() || right.size() != right_alg->dim())
    throw DimensionError("bimodule action count does not match algebra dimension");
  for (const auto* fam : {&left, &right})
    for (const auto& a : *fam)
      if (a.rows() != dim || a.cols() != dim) throw DimensionError("bimodule action matrix shape");
  Bimodule m(std::move(left_alg), std::move(right_alg), dim, std::move(left), std::move(right));
  auto checks = bimodule_checks(m);
  if (!checks[0].ok() || !checks[1].ok()) throw ValidationError("UnitLaw", "a unit does not act as the identity");
  if (!checks[2].ok()) throw ValidationError("ActionNotMultiplicative", "left action", checks[2].witness);
  if (!checks[3].ok()) throw ValidationError("ActionNotMultiplicative", "right action", checks[3].witness);
  if (!checks[4].ok()) throw ValidationError("ActionsDoNotCommute", "L_a R_b != R_b L_a", checks[4].witness);
  return m;
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  std::vector<SparseMatrix> l, r;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    l.push_back(a->left_basis(i));
    r.push_back(a->right_basis(i));
  }
  return Bimodule(a, a, a->dim(), std::move(l), std::move(r));
}

Bimodule restrict_bimodule(const Bimodule& m, const AlgebraPtr& left_src, const SparseMatrix& f_left,
                           const AlgebraPtr& right_src, const SparseMatrix& f_right) {
  Matrix fl = f_left.to_dense(), fr = f_right.to_dense();
  if (fl.cols() != left_src->dim() || fr.cols() != right_src->dim() || fl.rows() != m.left_algebra()->dim() ||
      fr.rows() != m.right_algebra()->dim())
    throw DimensionError("restrict_bimodule");
  std::vector<SparseMatrix> l, r;
  for (std::size_t i = 0; i < left_src->dim(); ++i) l.push_back(m.left_matrix(fl.column(i)));
  for (std::size_t i = 0; i < right_src->dim(); ++i) r.push_back(m.right_matrix(fr.column(i)));
  return Bimodule(left_src, right_src, m.dim(), std::move(l), std::move(r));
}

HomSpace bimodule_hom_space(const Bimodule& m, const Bimodule& n) {
  const Field& f = m.field();
  HomSpace h;
  h.source_dim = m.dim();
  h.target_dim = n.dim();
  if (m.dim() == 0 || n.dim() == 0) return h;
  std::vector<SparseVec> rows;
  for (const auto& g : m.left_algebra()->generators())
    commutation_rows(f, m.left_matrix(g), n.left_matrix(g), n.dim(), m.dim(), rows);
  for (const auto& g : m.right_algebra()->generators())
    commutation_rows(f, m.right_matrix(g), n.right_matrix(g), n.dim(), m.dim(), rows);
  auto ker = kernel_basis(f, rows_to_matrix(n.dim() * m.dim(), std::move(rows)));
  return reshape(f, n.dim(), m.dim(), ker);
}

Subspace centralizer(const Bimodule& m) {
  const Field& f = m.field();
  if (m.left_algebra()->dim() != m.right_algebra()->dim()) throw DimensionError("centralizer needs one algebra");
  std::vector<SparseMatrix> blocks;
  for (const auto& g : m.left_algebra()->generators()) blocks.push_back(sub(f, m.left_matrix(g), m.right_matrix(g)));
  SparseMatrix stacked(blocks.size() * m.dim(), m.dim());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t r = 0; r < m.dim(); ++r) stacked.row(b * m.dim() + r) = blocks[b].row(r);
  return Subspace::span(f, m.dim(), kernel_basis(f, stacked));
}

}  // namespace parsmash
