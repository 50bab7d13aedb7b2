#include "parsmash/spectral.hpp"

#include <algorithm>

#include "parsmash/errors.hpp"

namespace parsmash {

namespace {

std::string num(std::size_t n) { return std::to_string(n); }

Vector flatten(const Matrix& m) { return m.data(); }

Subspace flat_span(const Field& f, const HomSpace& h) {
  std::vector<Vector> flat;
  for (const auto& b : h.basis) flat.push_back(flatten(b));
  return Subspace::span(f, h.source_dim * h.target_dim, flat);
}

std::optional<Check> first_failure(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.ok()) return c;
  return std::nullopt;
}

/// L(u_g # g) R(u_{g^-1} # g^-1) on M.
SparseMatrix conjugation(const SmashContext& c, const Bimodule& m, std::size_t g) {
  const Field& f = c.field();
  return multiply(f, m.left_matrix(c.smash.pi0[g]), m.right_matrix(c.smash.pi0[c.action.group.inv(g)]));
}

SparseMatrix hconcat(const std::vector<SparseMatrix>& blocks, std::size_t rows) {
  std::vector<SparseVec> cols;
  for (const auto& b : blocks) {
    SparseMatrix t = transpose(b);
    for (std::size_t r = 0; r < t.rows(); ++r) cols.push_back(t.row(r));
  }
  SparseMatrix out(cols.size(), rows);
  for (std::size_t i = 0; i < cols.size(); ++i) out.row(i) = std::move(cols[i]);
  return transpose(out);
}

/// Span of (a_i (x) 1 - 1 (x) b_i) applied to every basis vector of X (x) Y.
Subspace balancing_relations(const Field& f, std::size_t dx, std::size_t dy, const std::vector<SparseMatrix>& a,
                             const std::vector<SparseMatrix>& b) {
  const SparseMatrix ix = SparseMatrix::identity(f, dx), iy = SparseMatrix::identity(f, dy);
  std::vector<SparseMatrix> blocks;
  for (std::size_t i = 0; i < a.size(); ++i) blocks.push_back(sub(f, kronecker(f, a[i], iy), kronecker(f, ix, b[i])));
  if (blocks.empty() || dx * dy == 0) return Subspace(f, dx * dy);
  return column_space(f, hconcat(blocks, dx * dy));
}

std::vector<std::size_t> non_pivots(const Subspace& s) {
  std::vector<std::size_t> out;
  std::vector<bool> piv(s.ambient(), false);
  for (std::size_t p : s.pivots()) piv[p] = true;
  for (std::size_t i = 0; i < s.ambient(); ++i)
    if (!piv[i]) out.push_back(i);
  return out;
}

/// Matrix of op between the quotients (ambient / rel) -> (ambient' / rel').
/// Returns nullopt when op does not map rel into rel'.
std::optional<SparseMatrix> induced(const Field& f, const SparseMatrix& op, const Subspace& rel,
                                    const std::vector<std::size_t>& basis, const Subspace& rel2,
                                    std::size_t dim2) {
  for (const auto& r : rel.basis())
    if (!rel2.contains(apply(f, op, r))) return std::nullopt;
  SparseMatrix t = transpose(op);
  std::vector<Vector> cols;
  for (std::size_t n : basis) cols.push_back(quotient_projection(rel2, to_dense(t.row(n), op.rows())));
  return SparseMatrix::from_columns(dim2, cols);
}

Vector tensor_unit(std::size_t x, const Vector& v, std::size_t dx) {
  Vector out = zero_vector(dx * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[x * v.size() + i] = v[i];
  return out;
}

Check downgrade(Check c, CheckMode mode) {
  if (mode == CheckMode::warn && c.status == Status::fail) c.status = Status::warn;
  return c;
}

}  // namespace

SmashContext make_smash_context(const PartialAction& pa, const KparOptions& options) {
  return SmashContext{pa, smash_product(pa), build_kpar(pa.field(), pa.group, options)};
}

Bimodule restrict_to_a(const SmashContext& c, const Bimodule& m) {
  return restrict_bimodule(m, c.a(), c.smash.phi0, c.a(), c.smash.phi0);
}

Bimodule dual_bimodule(const Bimodule& m) {
  std::vector<SparseMatrix> l, r;
  for (const auto& x : m.rights()) l.push_back(transpose(x));
  for (const auto& x : m.lefts()) r.push_back(transpose(x));
  return Bimodule(m.right_algebra(), m.left_algebra(), m.dim(), std::move(l), std::move(r));
}

// ------------------------------------------------------------------- F1

F1Module f1(const SmashContext& c, const Bimodule& m) {
  const Field& f = c.field();
  const FiniteGroup& G = c.action.group;
  const std::size_t da = c.a()->dim(), dm = m.dim();
  F1Module out;
  out.hom = bimodule_hom_space(regular_bimodule(c.a()), restrict_to_a(c, m));
  out.hom.source_dim = da;
  out.hom.target_dim = dm;
  out.flat = flat_span(f, out.hom);
  const std::size_t n = out.hom.dim();
  for (const auto& b : out.hom.basis) out.values_at_one.push_back(apply(f, b, c.a()->unit()));

  Check preserved = pass("pi(g) preserves Hom_{A^e}(A, M)");
  for (std::size_t g = 0; g < G.order(); ++g) {
    Matrix p = conjugation(c, m, g).to_dense();
    Matrix q = c.action.alpha[G.inv(g)].to_dense();
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < n; ++k) {
      Vector image = flatten(multiply(f, multiply(f, p, out.hom.basis[k]), q));
      if (!out.flat.contains(image)) {
        preserved = fail(preserved.name, "g = " + G.label(g) + ", basis map " + num(k));
        cols.push_back(zero_vector(n));
      } else {
        cols.push_back(out.flat.coordinates(image));
      }
    }
    out.pi.push_back(SparseMatrix::from_columns(n, cols));
  }
  out.checks.push_back(preserved);
  if (!preserved.ok()) throw ValidationError("AxiomViolated", preserved.name, preserved.witness);
  for (auto& ch : partial_rep_checks(f, G, out.pi)) out.checks.push_back(std::move(ch));
  if (auto bad = first_failure(out.checks)) throw ValidationError("AxiomViolated", bad->name, bad->witness);
  out.module = partial_rep_to_module(c.kpar, out.pi);
  return out;
}

Subspace f2(const Kpar& k, const AlgModule& x) { return partial_invariants(k, x); }

Subspace f_functor(const Bimodule& m) { return centralizer(m); }

FactorizationReport factorization_check(const SmashContext& c, const Bimodule& m) {
  const Field& f = c.field();
  FactorizationReport r;
  Subspace fm = f_functor(m);
  F1Module one = f1(c, m);
  Subspace inv = f2(c.kpar, one.module);
  r.f_dim = fm.dim();
  r.f2f1_dim = inv.dim();

  std::vector<Vector> images;
  Check lands = pass("F2(F1(M)) -> F(M) lands in the centralizer");
  for (const auto& v : inv.basis()) {
    Vector w = zero_vector(m.dim());
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) axpy(f, w, v[k], one.values_at_one[k]);
    if (!fm.contains(w) && lands.ok()) lands = fail(lands.name, "image " + num(images.size()));
    images.push_back(std::move(w));
  }
  std::size_t rk = Subspace::span(f, m.dim(), images).dim();
  r.checks.push_back(lands);
  r.checks.push_back(verdict("F2(F1(M)) -> F(M) is injective", rk == inv.dim(),
                             "rank " + num(rk) + " of " + num(inv.dim())));
  r.checks.push_back(verdict("dim F(M) = dim F2(F1(M))", r.f_dim == r.f2f1_dim,
                             "F(M) " + num(r.f_dim) + ", F2(F1(M)) " + num(r.f2f1_dim)));
  return r;
}

// ------------------------------------------------------------- tensors

Vector TensorOverB::project(const Vector& v) const { return quotient_projection(relations, v); }

TensorOverB tensor_over_b(const SmashContext& c, const AlgModule& x, const Bimodule& m) {
  const Field& f = c.field();
  const Kpar& k = c.kpar;
  const FiniteGroup& G = c.action.group;
  const AlgebraPtr& s = c.s();
  TensorOverB t;
  t.x_dim = x.dim();
  t.m_dim = m.dim();

  std::vector<SparseMatrix> xb, mb;
  for (std::size_t g = 0; g < G.order(); ++g) {
    xb.push_back(x.act_matrix(embed_b(k, k.e[g])));
    mb.push_back(m.left_matrix(c.smash.element(0, c.action.u[g])));
  }
  t.relations = balancing_relations(f, t.x_dim, t.m_dim, xb, mb);
  t.basis = non_pivots(t.relations);
  const std::size_t q = t.basis.size();

  const SparseMatrix ix = SparseMatrix::identity(f, t.x_dim);
  std::vector<SparseMatrix> left, right;
  Check defined = pass("Delta preserves the balancing relations");
  auto induce = [&](const SparseMatrix& op, const std::string& what) {
    auto r = induced(f, op, t.relations, t.basis, t.relations, q);
    if (!r) {
      if (defined.ok()) defined = fail(defined.name, what);
      return SparseMatrix(q, q);
    }
    return *r;
  };
  for (std::size_t i = 0; i < s->dim(); ++i) {
    const std::size_t g = c.smash.index[i].first;
    left.push_back(induce(kronecker(f, x.act_matrix(k.bracket[g]), m.left(i)), "left basis " + num(i)));
  }
  for (std::size_t j = 0; j < s->dim(); ++j)
    right.push_back(induce(kronecker(f, ix, m.right(j)), "right basis " + num(j)));
  t.checks.push_back(defined);
  t.bimodule = Bimodule(s, s, q, std::move(left), std::move(right));
  if (defined.ok())
    for (auto& ch : bimodule_checks(t.bimodule)) t.checks.push_back(std::move(ch));
  return t;
}

GammaLambdaReport gamma_lambda_check(const SmashContext& c, const AlgModule& x, const Bimodule& m) {
  const Field& f = c.field();
  const std::size_t dx = x.dim(), dm = m.dim(), ds = c.s()->dim(), da = c.a()->dim();
  GammaLambdaReport r;
  F1Module one = f1(c, m);
  TensorOverB t = tensor_over_b(c, x, regular_bimodule(c.s()));
  for (const auto& ch : t.checks) r.checks.push_back({"X (x)_B S: " + ch.name, ch.status, ch.witness});

  HomSpace hom1 = hom_space(x, one.module);
  HomSpace hom2 = bimodule_hom_space(t.bimodule, m);
  hom1.source_dim = dx;
  hom1.target_dim = one.hom.dim();
  hom2.source_dim = t.dim();
  hom2.target_dim = dm;
  r.hom_f1_dim = hom1.dim();
  r.hom_tensor_dim = hom2.dim();
  Subspace flat1 = flat_span(f, hom1), flat2 = flat_span(f, hom2);

  auto gamma_full = [&](const Matrix& h) {
    // values on the basis of X (x) S, before passing to the quotient
    Matrix out(dm, dx * ds);
    for (std::size_t xi = 0; xi < dx; ++xi) {
      Vector w = zero_vector(dm);
      for (std::size_t k = 0; k < h.rows(); ++k)
        if (!h(k, xi).is_zero()) axpy(f, w, h(k, xi), one.values_at_one[k]);
      for (std::size_t i = 0; i < ds; ++i) {
        Vector col = apply(f, m.right(i), w);
        for (std::size_t row = 0; row < dm; ++row) out(row, xi * ds + i) = col[row];
      }
    }
    return out;
  };
  auto lambda = [&](const Matrix& tm) {
    Matrix out(one.hom.dim(), dx);
    const Matrix phi0 = c.smash.phi0.to_dense();
    for (std::size_t xi = 0; xi < dx; ++xi) {
      Matrix map(dm, da);
      for (std::size_t a = 0; a < da; ++a) {
        Vector col = apply(f, tm, t.project(tensor_unit(xi, phi0.column(a), dx)));
        for (std::size_t row = 0; row < dm; ++row) map(row, a) = col[row];
      }
      Vector flat = flatten(map);
      if (!one.flat.contains(flat)) return std::optional<Matrix>{};
      Vector coords = one.flat.coordinates(flat);
      for (std::size_t k = 0; k < coords.size(); ++k) out(k, xi) = coords[k];
    }
    return std::optional<Matrix>{out};
  };

  Check well = pass("Gamma vanishes on the balancing relations");
  Check g_in = pass("Gamma lands in Hom_{S^e}(X (x)_B S, M)");
  Check l_in = pass("Lambda lands in Hom(X, F1(M))");
  Check lg = pass("Lambda Gamma = id");
  Check gl = pass("Gamma Lambda = id");
  for (std::size_t i = 0; i < hom1.dim(); ++i) {
    Matrix full = gamma_full(hom1.basis[i]);
    for (const auto& rel : t.relations.basis())
      if (!is_zero(apply(f, full, rel)) && well.ok()) well = fail(well.name, "basis map " + num(i));
    Matrix g(dm, t.dim());
    for (std::size_t n = 0; n < t.dim(); ++n)
      for (std::size_t row = 0; row < dm; ++row) g(row, n) = full(row, t.basis[n]);
    if (!flat2.contains(flatten(g)) && g_in.ok()) g_in = fail(g_in.name, "basis map " + num(i));
    auto back = lambda(g);
    if ((!back || !(*back == hom1.basis[i])) && lg.ok()) lg = fail(lg.name, "basis map " + num(i));
  }
  for (std::size_t j = 0; j < hom2.dim(); ++j) {
    auto l = lambda(hom2.basis[j]);
    if (!l) {
      if (l_in.ok()) l_in = fail(l_in.name, "basis map " + num(j) + " leaves F1(M)");
      continue;
    }
    if (!flat1.contains(flatten(*l)) && l_in.ok()) l_in = fail(l_in.name, "basis map " + num(j));
    Matrix full = gamma_full(*l);
    Matrix g(dm, t.dim());
    for (std::size_t n = 0; n < t.dim(); ++n)
      for (std::size_t row = 0; row < dm; ++row) g(row, n) = full(row, t.basis[n]);
    if (!(g == hom2.basis[j]) && gl.ok()) gl = fail(gl.name, "basis map " + num(j));
  }
  r.checks.push_back(verdict("dim Hom(X, F1(M)) = dim Hom_{S^e}(X (x)_B S, M)", hom1.dim() == hom2.dim(),
                             num(hom1.dim()) + " vs " + num(hom2.dim())));
  for (auto* ch : {&well, &g_in, &l_in, &lg, &gl}) r.checks.push_back(std::move(*ch));
  return r;
}

// ------------------------------------------------------------- flatness

namespace {

FlatnessReport injectivity_report(const Field& f, const SparseMatrix& op, const Subspace& rel1,
                                  const std::vector<std::size_t>& basis1, const Subspace& rel2,
                                  std::size_t dim2, const std::string& name) {
  FlatnessReport r;
  r.source_dim = basis1.size();
  r.target_dim = dim2;
  auto m = induced(f, op, rel1, basis1, rel2, dim2);
  r.checks.push_back(verdict("induced map is well defined", m.has_value(), "relations not preserved"));
  if (!m) return r;
  r.rank = rank(f, *m);
  r.checks.push_back(verdict(name, r.rank == r.source_dim, "rank " + num(r.rank) + " of " + num(r.source_dim)));
  return r;
}

void require_injective(const Field& f, const Matrix& map, std::size_t source) {
  if (map.cols() != source) throw DimensionError("map does not start at the source module");
  if (rank(f, map) != source) throw ValidationError("NotInjective", "the given map is not injective");
}

}  // namespace

FlatnessReport flatness_check(const AlgModule& x, const AlgModule& y, const AlgModule& y2, const Matrix& fm) {
  const Field& f = x.field();
  if (fm.rows() != y2.dim()) throw DimensionError("map does not end at the target module");
  require_injective(f, fm, y.dim());
  const auto& gens = x.algebra()->generators();
  std::vector<SparseMatrix> xa, ya, y2a;
  for (const auto& g : gens) {
    xa.push_back(x.act_matrix(g));
    ya.push_back(y.act_matrix(g));
    y2a.push_back(y2.act_matrix(g));
  }
  Subspace rel1 = balancing_relations(f, x.dim(), y.dim(), xa, ya);
  Subspace rel2 = balancing_relations(f, x.dim(), y2.dim(), xa, y2a);
  SparseMatrix op = kronecker(f, SparseMatrix::identity(f, x.dim()), SparseMatrix::from_dense(fm));
  return injectivity_report(f, op, rel1, non_pivots(rel1), rel2, x.dim() * y2.dim() - rel2.dim(),
                            "id_X (x) f is injective");
}

FlatnessReport exactness_check(const SmashContext& c, const AlgModule& y, const AlgModule& y2, const Matrix& fm) {
  const Field& f = c.field();
  if (fm.rows() != y2.dim()) throw DimensionError("map does not end at the target module");
  require_injective(f, fm, y.dim());
  const Bimodule s = regular_bimodule(c.s());
  TensorOverB t1 = tensor_over_b(c, y, s), t2 = tensor_over_b(c, y2, s);
  SparseMatrix op = kronecker(f, SparseMatrix::from_dense(fm), SparseMatrix::identity(f, c.s()->dim()));
  FlatnessReport r = injectivity_report(f, op, t1.relations, t1.basis, t2.relations, t2.dim(),
                                        "f (x)_B S is injective");
  if (auto bad = first_failure(t1.checks)) r.checks.push_back(*bad);
  if (auto bad = first_failure(t2.checks)) r.checks.push_back(*bad);
  return r;
}

// ------------------------------------------------------- cochain action

CochainAction cochain_partial_action(const SmashContext& c, const Bimodule& m, std::size_t degree,
                                     std::size_t max_cochain_dim) {
  const Field& f = c.field();
  const FiniteGroup& G = c.action.group;
  const std::size_t p = degree;
  CochainAction out;
  out.degree = p;
  HochschildOptions opts;
  opts.max_degree = p;
  opts.normalized = false;
  opts.max_cochain_dim = max_cochain_dim;
  out.complex = hochschild(restrict_to_a(c, m), opts);
  const HochschildComplex& hc = out.complex;
  const std::size_t dim = hc.cochain_dims[p];
  const std::string tag = "LiftFailed(" + num(p) + "): ";

  for (std::size_t g = 0; g < G.order(); ++g) {
    SparseMatrix q = transpose(c.action.alpha[G.inv(g)]);
    SparseMatrix qp = SparseMatrix::identity(f, 1);
    for (std::size_t i = 0; i < p; ++i) qp = kronecker(f, qp, q);
    out.cochain_pi.push_back(kronecker(f, qp, conjugation(c, m, g)));
  }

  Check axioms = pass("cochain operators satisfy the partial representation axioms");
  if (auto bad = first_failure(partial_rep_checks(f, G, out.cochain_pi)))
    axioms = fail(axioms.name, bad->name + " " + bad->witness);

  Check cocycles = pass("cochain operators preserve cocycles");
  auto z = kernel_basis(f, hc.differential[p]);
  for (std::size_t g = 0; g < G.order() && cocycles.ok(); ++g)
    for (std::size_t i = 0; i < z.size(); ++i)
      if (!is_zero(apply(f, hc.differential[p], apply(f, out.cochain_pi[g], z[i])))) {
        cocycles = fail(cocycles.name, tag + "g = " + G.label(g) + ", cocycle " + num(i));
        break;
      }

  Subspace bsp = p == 0 ? Subspace(f, dim) : column_space(f, hc.differential[p - 1]);
  Check coboundaries = pass("cochain operators preserve coboundaries");
  for (std::size_t g = 0; g < G.order() && coboundaries.ok(); ++g)
    for (std::size_t i = 0; i < bsp.dim(); ++i)
      if (!bsp.contains(apply(f, out.cochain_pi[g], bsp.basis()[i]))) {
        coboundaries = fail(coboundaries.name, tag + "g = " + G.label(g) + ", coboundary " + num(i));
        break;
      }

  out.checks = {axioms, cocycles, coboundaries};
  if (!cocycles.ok() || !coboundaries.ok()) return out;

  const auto& reps = hc.representatives[p];
  std::vector<Vector> rq;
  for (const auto& v : reps) rq.push_back(quotient_projection(bsp, v));
  Matrix rmat = Matrix::from_columns(dim - bsp.dim(), rq);
  for (std::size_t g = 0; g < G.order(); ++g) {
    std::vector<Vector> cols;
    for (const auto& v : reps) {
      auto sol = solve(f, rmat, quotient_projection(bsp, apply(f, out.cochain_pi[g], v)));
      if (!sol) throw ValidationError("LiftFailed", "image of a cocycle is not a cocycle");
      cols.push_back(std::move(*sol));
    }
    out.cohomology_pi.push_back(SparseMatrix::from_columns(reps.size(), cols));
  }
  Check induced_axioms = pass("operators on H^p satisfy the partial representation axioms");
  if (auto bad = first_failure(partial_rep_checks(f, G, out.cohomology_pi)))
    induced_axioms = fail(induced_axioms.name, tag + bad->name + " " + bad->witness);
  out.checks.push_back(induced_axioms);
  if (induced_axioms.ok()) out.module = partial_rep_to_module(c.kpar, out.cohomology_pi);
  return out;
}

Check cochain_f1_agreement(const SmashContext& c, const Bimodule& m, const F1Module& one, const CochainAction& a) {
  const Field& f = c.field();
  const std::string name = "degree-0 cochain action agrees with F1";
  if (a.degree != 0) return fail(name, "cochain action has degree " + num(a.degree));
  for (std::size_t g = 0; g < c.action.group.order(); ++g)
    for (std::size_t k = 0; k < one.values_at_one.size(); ++k) {
      Vector lhs = apply(f, a.cochain_pi[g], one.values_at_one[k]);
      Vector rhs = zero_vector(m.dim());
      Vector col = to_dense(transpose(one.pi[g]).row(k), one.values_at_one.size());
      for (std::size_t j = 0; j < col.size(); ++j)
        if (!col[j].is_zero()) axpy(f, rhs, col[j], one.values_at_one[j]);
      if (lhs != rhs) return fail(name, "g = " + c.action.group.label(g) + ", basis map " + num(k));
    }
  return pass(name);
}

// ------------------------------------------------------------- spectral

SpectralReport spectral_low_degree(const SmashContext& c, const Bimodule& m, const SpectralBounds& bounds) {
  const std::size_t N = bounds.total_degree, P = bounds.a_degree, Q = bounds.partial_degree;
  SpectralReport r;
  r.notes.push_back("F1(M) is taken to be F2-acyclic without verification");

  HochschildOptions ho;
  ho.max_degree = N;
  ho.max_cochain_dim = bounds.max_cochain_dim;
  HochschildComplex total = hochschild(m, ho);
  r.total = total.dims;
  for (const auto& ch : hochschild_checks(total)) r.checks.push_back({"H(S, M): " + ch.name, ch.status, ch.witness});
  ho.max_degree = P;
  HochschildComplex aside = hochschild(restrict_to_a(c, m), ho);
  r.a_side = aside.dims;
  for (const auto& ch : hochschild_checks(aside)) r.checks.push_back({"H(A, M): " + ch.name, ch.status, ch.witness});

  r.f_dim = f_functor(m).dim();
  F1Module one = f1(c, m);
  HparOptions hp;
  hp.max_degree = Q;
  hp.mode = bounds.mode;
  PartialCohomology pc(c.kpar, hp);

  r.e2.assign(P + 1, std::vector<std::optional<std::size_t>>(Q + 1));
  auto fill_row = [&](std::size_t p, const AlgModule& module) {
    CohomologyReport rep = pc.compute(module);
    for (std::size_t q = 0; q <= Q; ++q) r.e2[p][q] = rep.degrees[q].dim;
    for (const auto& ch : rep.checks)
      r.checks.push_back({"H_par(G, H^" + num(p) + "(A, M)): " + ch.name, ch.status, ch.witness});
  };
  fill_row(0, one.module);
  for (std::size_t p = 1; p <= P; ++p) {
    Check lift = pass("K_par G-structure on H^" + num(p) + "(A, M) from cochains");
    try {
      CochainAction ca = cochain_partial_action(c, m, p, bounds.max_cochain_dim);
      if (ca.lifted()) {
        fill_row(p, *ca.module);
      } else {
        auto bad = first_failure(ca.checks);
        lift = {lift.name, Status::unavailable, bad ? bad->witness : "LiftFailed(" + num(p) + ")"};
      }
    } catch (const BudgetExceeded& e) {
      lift = {lift.name, Status::unavailable, e.what()};
    }
    if (lift.status == Status::unavailable) r.notes.push_back("E2 row " + num(p) + ": structure unavailable");
    r.checks.push_back(lift);
  }

  auto add = [&](Check ch) { r.checks.push_back(downgrade(std::move(ch), bounds.mode)); };
  auto skipped = [](std::string name, std::string why) { return Check{std::move(name), Status::skipped, std::move(why)}; };
  const std::size_t e00 = *r.e2[0][0];
  add(verdict("dim F(M) = dim H0_par(G, F1(M))", r.f_dim == e00, "F(M) " + num(r.f_dim) + ", E2^{0,0} " + num(e00)));
  add(verdict("dim H0(S, M) = dim F(M)", r.total[0] == r.f_dim,
              "H0 " + num(r.total[0]) + ", F(M) " + num(r.f_dim)));

  {
    const std::string name = "collapse: H^n(S, M) = H^n_par(G, F1(M))";
    const std::size_t top = std::min(N, Q);
    bool vanishing = P >= top;
    for (std::size_t p = 1; p <= std::min(P, top); ++p) vanishing = vanishing && r.a_side[p] == 0;
    if (!vanishing) {
      r.checks.push_back(skipped(name, "H^p(A, M) does not vanish in degrees 1.." + num(top)));
    } else {
      Check ch = pass(name);
      for (std::size_t n = 0; n <= top; ++n)
        if (r.total[n] != *r.e2[0][n]) {
          ch = fail(name, "degree " + num(n) + ", H(S, M) " + num(r.total[n]) + ", E2 " + num(*r.e2[0][n]));
          break;
        }
      add(ch);
    }
  }

  if (N >= 1 && Q >= 1) {
    const long long h1 = static_cast<long long>(r.total[1]);
    const long long e01 = static_cast<long long>(*r.e2[0][1]);
    add(verdict("five-term: E2^{0,1} <= H^1(S, M)", e01 <= h1, "E2^{0,1} " + num(e01) + ", H^1 " + num(h1)));
    const std::string n2 = "five-term: H^1 - E2^{0,1} <= E2^{1,0}";
    const std::string n3 = "five-term: rank(E2^{1,0} -> E2^{0,2}) <= E2^{0,2}";
    const std::string n4 = "five-term: E2^{0,2} - rank <= H^2(S, M)";
    if (P >= 1 && Q >= 2 && N >= 2 && r.e2[1][0]) {
      const long long e10 = static_cast<long long>(*r.e2[1][0]);
      const long long e02 = static_cast<long long>(*r.e2[0][2]);
      const long long h2 = static_cast<long long>(r.total[2]);
      const long long into = h1 - e01, rk = e10 - into;
      add(verdict(n2, into <= e10, "H^1 - E2^{0,1} " + std::to_string(into) + ", E2^{1,0} " + num(e10)));
      add(verdict(n3, rk <= e02, "rank " + std::to_string(rk) + ", E2^{0,2} " + num(e02)));
      add(verdict(n4, e02 - rk <= h2, "E2^{0,2} - rank " + std::to_string(e02 - rk) + ", H^2 " + num(h2)));
    } else {
      for (const auto* n : {&n2, &n3, &n4}) r.checks.push_back(skipped(*n, "E2^{1,0} unavailable"));
    }
  }
  return r;
}

}  // namespace parsmash
