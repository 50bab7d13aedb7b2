#include "parsmash/cohomology.hpp"

#include <map>

#include "parsmash/errors.hpp"

namespace parsmash {

namespace {

std::string num(std::size_t n) { return std::to_string(n); }

// Rows of a sparse linear system built from scaled blocks.
class RowAccumulator {
 public:
  RowAccumulator(const Field& f, std::size_t rows) : f_(f), rows_(rows) {}

  /// rows += c * mat placed at column offset
  void add(const Scalar& c, const SparseMatrix& mat, std::size_t offset) {
    for (std::size_t r = 0; r < mat.rows(); ++r)
      for (const auto& e : mat.row(r)) {
        Scalar& slot = rows_[r][static_cast<uint32_t>(offset + e.index)];
        f_.add_mul(slot, c, e.value);
      }
  }

  void flush_into(EchelonForm& ech) {
    for (auto& row : rows_) {
      SparseVec v;
      for (auto& [i, x] : row)
        if (!x.is_zero()) v.push_back({i, std::move(x)});
      if (!v.empty()) ech.insert(v);
      row.clear();
    }
  }

 private:
  const Field& f_;
  std::vector<std::map<uint32_t, Scalar>> rows_;
};

Vector block(const Vector& v, std::size_t j, std::size_t d) {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(j * d), v.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
}

void set_block(Vector& v, std::size_t j, const Vector& b) {
  for (std::size_t i = 0; i < b.size(); ++i) v[j * b.size() + i] = b[i];
}

const SparseMatrix& rho_e(const Kpar& k, const AlgModule& m, uint64_t mask) { return m.action(k.index_of(0, mask)); }

// delta(x) = D(x) params: block g of D(x) is sum_{i : g_i = g} x_i rho(e_{T_i})
void add_d_operator(RowAccumulator& acc, const Kpar& k, const AlgModule& m, const Scalar& c, const Vector& x) {
  const Field& f = k.field();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    auto [g, mask] = k.pairs[i];
    acc.add(f.mul(c, x[i]), rho_e(k, m, mask), g * m.dim());
  }
}

Subspace kernel_of(const EchelonForm& ech) {
  SparseMatrix sys(ech.rank(), ech.ambient());
  auto rows = ech.reduced_rows();
  for (std::size_t r = 0; r < rows.size(); ++r) sys.row(r) = std::move(rows[r]);
  return Subspace::span(ech.field(), ech.ambient(), kernel_basis(ech.field(), sys));
}

Check downgrade(Check c, CheckMode mode) {
  if (!c.ok() && mode == CheckMode::warn) c.status = Status::warn;
  return c;
}

Check cross_check(const std::string& name, std::size_t degree, std::size_t ext, std::size_t other) {
  return verdict(name, ext == other,
                 "CrossCheckFailed: degree " + num(degree) + ", Ext " + num(ext) + ", other " + num(other));
}

}  // namespace

Subspace partial_invariants(const Kpar& k, const AlgModule& m) {
  const Field& f = k.field();
  EchelonForm ech(f, m.dim());
  for (std::size_t g = 1; g < k.group.order(); ++g) {
    RowAccumulator acc(f, m.dim());
    acc.add(f.one(), m.act_matrix(k.bracket[g]), 0);
    acc.add(f.neg(f.one()), rho_e(k, m, element_bit(g)), 0);
    acc.flush_into(ech);
  }
  return kernel_of(ech);
}

Check invariants_hom_iso_check(const Kpar& k, const AlgModule& m) {
  const std::string name = "Hom(B, M) = invariants";
  Subspace inv = partial_invariants(k, m);
  HomSpace h = hom_space(b_module(k), m);
  std::vector<Vector> images;
  for (const auto& fm : h.basis) {
    Vector v = fm.column(0);
    if (!inv.contains(v)) return fail(name, "IsoFailed: f(1) = " + m.algebra()->format(v) + " is not invariant");
    images.push_back(std::move(v));
  }
  Subspace span = Subspace::span(k.field(), m.dim(), images);
  if (span.dim() != h.dim()) return fail(name, "IsoFailed: f -> f(1) is not injective");
  if (span.dim() != inv.dim())
    return fail(name, "IsoFailed: dim Hom(B, M) = " + num(h.dim()) + ", invariants " + num(inv.dim()));
  return pass(name);
}

DerivationSpace partial_derivations(const Kpar& k, const AlgModule& m) {
  const Field& f = k.field();
  const Algebra& L = *k.algebra();
  const std::size_t n = k.group.order(), md = m.dim();
  const Scalar minus = f.neg(f.one());
  EchelonForm ech(f, n * md);

  // m_e = 0 and e_g m_g = m_g
  for (std::size_t g = 0; g < n; ++g) {
    RowAccumulator acc(f, md);
    acc.add(f.one(), SparseMatrix::identity(f, md), g * md);
    if (g != 0) acc.add(minus, rho_e(k, m, element_bit(g)), g * md);
    acc.flush_into(ech);
  }
  // delta([g] b) = [g] delta(b) + delta([g] eps(b)) for all basis b; the
  // brackets generate K_par G, so this forces the rule for every a.
  for (std::size_t g = 1; g < n; ++g)
    for (std::size_t i = 0; i < k.dim(); ++i) {
      auto [h, mask] = k.pairs[i];
      RowAccumulator acc(f, md);
      add_d_operator(acc, k, m, f.one(), L.multiply(k.bracket[g], L.basis_element(i)));
      Vector ge = L.multiply(k.bracket[g], L.basis_element(k.index_of(0, mask)));
      acc.add(minus, m.act_matrix(ge), h * md);
      add_d_operator(acc, k, m, minus, ge);
      acc.flush_into(ech);
    }

  DerivationSpace d;
  d.module_dim = md;
  d.der = kernel_of(ech);
  std::vector<Vector> inner;
  for (std::size_t j = 0; j < md; ++j) inner.push_back(inner_parameters(k, m, unit_vector(f, md, j)));
  d.inner = Subspace::span(f, n * md, inner);
  return d;
}

Matrix derivation_matrix(const Kpar& k, const AlgModule& m, const Vector& params) {
  const Field& f = k.field();
  const std::size_t md = m.dim();
  if (params.size() != k.group.order() * md) throw DimensionError("derivation parameters");
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    auto [g, mask] = k.pairs[i];
    cols.push_back(apply(f, rho_e(k, m, mask), block(params, g, md)));
  }
  return Matrix::from_columns(md, cols);
}

Vector inner_parameters(const Kpar& k, const AlgModule& m, const Vector& v) {
  const Field& f = k.field();
  const std::size_t n = k.group.order(), md = m.dim();
  Vector out(n * md);
  for (std::size_t g = 1; g < n; ++g)
    set_block(out, g, sub(f, m.act(k.bracket[g], v), apply(f, rho_e(k, m, element_bit(g)), v)));
  return out;
}

bool is_partial_derivation(const Kpar& k, const AlgModule& m, const Matrix& delta) {
  const Field& f = k.field();
  const Algebra& L = *k.algebra();
  const std::size_t d = k.dim();
  std::vector<Vector> col(d);
  for (std::size_t i = 0; i < d; ++i) col[i] = delta.column(i);
  auto apply_delta = [&](const Vector& x) {
    Vector out(m.dim());
    for (std::size_t i = 0; i < d; ++i)
      if (!x[i].is_zero()) axpy(f, out, x[i], col[i]);
    return out;
  };
  for (std::size_t s = 0; s < k.b_dim(); ++s) {
    std::size_t es = k.index_of(0, s);
    for (std::size_t i = 0; i < d; ++i)
      if (apply_delta(L.multiply(L.basis_element(es), L.basis_element(i))) != m.act_basis(es, col[i])) return false;
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vector lhs = apply_delta(L.multiply(L.basis_element(a), L.basis_element(b)));
      Vector aeb = L.multiply(L.basis_element(a), embed_b(k, epsilon(k, L.basis_element(b))));
      Vector rhs = add(f, m.act_basis(a, col[b]), apply_delta(aeb));
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<Check> derivation_checks(const Kpar& k, const AlgModule& m, const DerivationSpace& d) {
  std::vector<Check> out;
  Check lit = pass("derivation basis satisfies the Leibniz rule");
  for (std::size_t i = 0; i < d.der.dim(); ++i)
    if (!is_partial_derivation(k, m, derivation_matrix(k, m, d.der.basis()[i]))) {
      lit = fail(lit.name, "basis derivation " + num(i));
      break;
    }
  out.push_back(std::move(lit));
  out.push_back(verdict("inner derivations lie in Der", is_subspace_of(d.inner, d.der)));
  return out;
}

Check hom_ig_check(const Kpar& k, const AlgModule& m) {
  const std::string name = "Hom(IG, M) = Der";
  const Field& f = k.field();
  const Algebra& L = *k.algebra();
  const std::size_t n = k.group.order(), md = m.dim();
  Subspace ig = ig_subspace(k);
  HomSpace h = hom_space(ig_module(k), m);
  DerivationSpace d = partial_derivations(k, m);

  // coordinates in IG of x - eps(x) 1 for every basis x
  std::vector<Vector> shifted;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Vector x = L.basis_element(i);
    shifted.push_back(ig.coordinates(sub(f, x, embed_b(k, epsilon(k, x)))));
  }
  std::vector<Vector> params;
  for (std::size_t j = 0; j < h.dim(); ++j) {
    const Matrix& fm = h.basis[j];
    std::vector<Vector> cols;
    for (const auto& c : shifted) cols.push_back(apply(f, fm, c));
    Matrix hat = Matrix::from_columns(md, cols);
    Vector p(n * md);
    for (std::size_t g = 1; g < n; ++g) set_block(p, g, hat.column(k.index_of(g, element_bit(g))));
    if (!d.der.contains(p) || derivation_matrix(k, m, p) != hat)
      return fail(name, "IsoFailed: image of Hom basis " + num(j) + " is not a partial derivation");
    params.push_back(std::move(p));
  }
  Subspace img = Subspace::span(f, n * md, params);
  if (img.dim() != h.dim()) return fail(name, "IsoFailed: f -> f^ is not injective");
  if (img.dim() != d.der.dim())
    return fail(name, "IsoFailed: dim Hom(IG, M) = " + num(h.dim()) + ", Der " + num(d.der.dim()));
  return pass(name);
}

// ------------------------------------------------------------------ hpar

PartialCohomology::PartialCohomology(const Kpar& k, HparOptions options) : k_(k), options_(std::move(options)) {}

const Resolution& PartialCohomology::b_resolution() {
  if (!b_) b_ = resolve_module(b_module(k_), options_.max_degree + 1, options_.resolution);
  return *b_;
}

const Resolution& PartialCohomology::alternate_resolution() {
  if (!b_alt_) {
    ResolutionOptions alt = options_.resolution;
    alt.order = GeneratorOrder::shuffled;
    alt.seed = options_.resolution.seed + 1;
    b_alt_ = resolve_module(b_module(k_), options_.max_degree + 1, alt);
  }
  return *b_alt_;
}

const Resolution& PartialCohomology::ig_resolution() {
  if (!ig_) ig_ = resolve_module(ig_module(k_), std::max<std::size_t>(options_.max_degree, 1), options_.resolution);
  return *ig_;
}

CohomologyReport PartialCohomology::compute(const AlgModule& m) {
  const Field& f = k_.field();
  const Algebra& L = *k_.algebra();
  const std::size_t n = k_.group.order(), md = m.dim(), top = options_.max_degree;
  const Resolution& res = b_resolution();
  ExtResult ext = ext_from_resolution(res, m, top);

  CohomologyReport rep;
  rep.resolution_ranks = res.ranks;
  for (std::size_t i = 0; i <= top; ++i) rep.degrees.push_back({i, ext.dims[i], ext.representatives[i]});
  for (auto& c : resolution_checks(res, b_module(k_))) rep.checks.push_back(downgrade(std::move(c), options_.mode));

  Subspace inv = partial_invariants(k_, m);
  rep.invariants_dim = inv.dim();
  DerivationSpace der = partial_derivations(k_, m);
  rep.der_dim = der.der.dim();
  rep.inner_dim = der.inner.dim();
  if (!options_.cross_checks) return rep;

  std::vector<Check> cc;
  cc.push_back(cross_check("H0 = partial invariants", 0, ext.dims[0], inv.dim()));
  cc.push_back(cross_check("H0 = Hom(B, M)", 0, ext.dims[0], hom_dimension(b_module(k_), m)));
  if (top >= 1) {
    cc.push_back(cross_check("H1 = Der / Int", 1, ext.dims[1], der.outer_dim()));
    // M -> Hom(IG, M), v -> (x -> x v); its rank is that of v -> (x_i v)_i over a basis of IG
    Subspace ig = ig_subspace(k_);
    EchelonForm ech(f, md);
    for (const auto& x : ig.basis()) {
      RowAccumulator acc(f, md);
      acc.add(f.one(), m.act_matrix(x), 0);
      acc.flush_into(ech);
    }
    std::size_t hom_ig = hom_dimension(ig_module(k_), m);
    cc.push_back(cross_check("H1 = coker(M -> Hom(IG, M))", 1, ext.dims[1], hom_ig - ech.rank()));

    // push H1 representatives through to derivations
    Check push = pass("H1 representatives give outer derivations");
    std::optional<Matrix> d1;
    Vector lift;
    if (!ext.representatives[1].empty()) {
      d1 = res.boundary[0].to_dense();
      auto s = solve(f, res.augmentation.to_dense(), unit_vector(f, k_.b_dim(), 0));
      if (!s) throw ValidationError("InternalError", "augmentation does not reach 1");
      lift = std::move(*s);
    }
    const std::size_t d = k_.dim(), n0 = res.ranks[0], n1 = res.ranks[1];
    EchelonForm outer(f, n * md);
    for (const auto& v : der.inner.basis()) outer.insert(v);
    for (std::size_t r = 0; r < ext.representatives[1].size() && push.ok(); ++r) {
      const Vector& phi = ext.representatives[1][r];
      Vector p(n * md);
      for (std::size_t g = 1; g < n; ++g) {
        Vector z(n0 * d);
        for (std::size_t j = 0; j < n0; ++j) {
          Vector lj = block(lift, j, d);
          set_block(z, j, sub(f, L.multiply(k_.bracket[g], lj), L.multiply(embed_b(k_, k_.e[g]), lj)));
        }
        auto y = solve(f, *d1, z);
        if (!y) {
          push = fail(push.name, "[g] - e_g not in the image of d1 for g = " + k_.group.label(g));
          break;
        }
        Vector mg(md);
        for (std::size_t j = 0; j < n1; ++j) {
          Vector yj = block(*y, j, d);
          if (!is_zero(yj)) mg = add(f, mg, m.act(yj, block(phi, j, md)));
        }
        set_block(p, g, mg);
      }
      if (!push.ok()) break;
      if (!der.der.contains(p)) push = fail(push.name, "representative " + num(r) + " is not a derivation");
      else if (!outer.insert(p)) push = fail(push.name, "representative " + num(r) + " is inner modulo the others");
    }
    cc.push_back(std::move(push));
  }
  if (top >= 2) {
    ExtResult ig_ext = ext_from_resolution(ig_resolution(), m, top - 1);
    for (std::size_t i = 2; i <= top; ++i)
      cc.push_back(cross_check("H" + num(i) + " = Ext" + num(i - 1) + "(IG, M)", i, ext.dims[i], ig_ext.dims[i - 1]));
  }
  if (options_.independence_check) {
    ExtResult alt = ext_from_resolution(alternate_resolution(), m, top);
    Check same = pass("independent of the resolution");
    for (std::size_t i = 0; i <= top; ++i)
      if (alt.dims[i] != ext.dims[i]) {
        same = fail(same.name,
                    "CrossCheckFailed: degree " + num(i) + ", " + num(ext.dims[i]) + " vs " + num(alt.dims[i]));
        break;
      }
    cc.push_back(std::move(same));
  }
  for (auto& c : cc) rep.checks.push_back(downgrade(std::move(c), options_.mode));
  return rep;
}

CohomologyReport hpar(const Kpar& k, const AlgModule& m, const HparOptions& options) {
  PartialCohomology pc(k, options);
  return pc.compute(m);
}

}  // namespace parsmash
