#include "parsmash/partial_action.hpp"

#include "parsmash/errors.hpp"

namespace parsmash {

namespace {

std::string gl(const FiniteGroup& g, std::size_t x) { return g.label(x); }

std::vector<Vector> columns(const SparseMatrix& m) {
  std::vector<Vector> cols(m.cols(), Vector(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) cols[e.index][r] = e.value;
  return cols;
}

}  // namespace

std::vector<Check> partial_action_checks(const PartialAction& pa, const PartialActionOptions& options) {
  const FiniteGroup& G = pa.group;
  const Algebra& A = *pa.algebra;
  const Field& f = A.field();
  const std::size_t n = G.order(), d = A.dim();
  if (pa.u.size() != n || pa.alpha.size() != n) throw DimensionError("partial action needs one u and alpha per element");
  for (std::size_t g = 0; g < n; ++g)
    if (pa.u[g].size() != d || pa.alpha[g].rows() != d || pa.alpha[g].cols() != d)
      throw DimensionError("partial action data for element " + gl(G, g) + " has the wrong shape");

  std::vector<Check> out;
  const SparseMatrix id = SparseMatrix::identity(f, d);
  {
    std::string w;
    if (pa.u[0] != A.unit()) w = "u_e != 1";
    else if (pa.alpha[0] != id) w = "alpha_e != id";
    out.push_back(verdict("identity_axiom", w.empty(), w));
  }
  {
    Check c = pass("central_idempotents");
    for (std::size_t g = 0; g < n && c.ok(); ++g) {
      Check ci = central_idempotent_check(A, pa.u[g]);
      if (!ci.ok()) c = fail("central_idempotents", "g=" + gl(G, g) + ": " + ci.witness);
    }
    out.push_back(std::move(c));
  }
  std::vector<SparseMatrix> lu(n);
  for (std::size_t g = 0; g < n; ++g) lu[g] = A.left_mult(pa.u[g]);
  {
    Check c = pass("alpha_support");
    for (std::size_t g = 0; g < n && c.ok(); ++g) {
      const auto& a = pa.alpha[g];
      if (multiply(f, lu[g], a) != a)
        c = fail("alpha_support", "alpha_" + gl(G, g) + " leaves D_" + gl(G, g));
      else if (multiply(f, a, lu[G.inv(g)]) != a)
        c = fail("alpha_support", "alpha_" + gl(G, g) + " nonzero off D_" + gl(G, G.inv(g)));
    }
    out.push_back(std::move(c));
  }
  {
    Check c = pass("alpha_multiplicative");
    for (std::size_t g = 0; g < n && c.ok(); ++g) {
      auto ag = columns(pa.alpha[g]);
      for (std::size_t i = 0; i < d && c.ok(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
          Vector lhs(d);
          for (const auto& e : A.product(i, j)) axpy(f, lhs, e.value, ag[e.index]);
          if (lhs != A.multiply(ag[i], ag[j])) {
            c = fail("alpha_multiplicative",
                     "g=" + gl(G, g) + ", a=" + A.labels()[i] + ", b=" + A.labels()[j]);
            break;
          }
        }
    }
    out.push_back(std::move(c));
  }
  {
    Check c = pass("alpha_bijective");
    for (std::size_t g = 0; g < n && c.ok(); ++g) {
      std::size_t gi = G.inv(g);
      if (pa.apply_alpha(g, pa.u[gi]) != pa.u[g]) {
        c = fail("alpha_bijective", "alpha_" + gl(G, g) + "(u_" + gl(G, gi) + ") != u_" + gl(G, g));
        break;
      }
      std::size_t r = rank(f, pa.alpha[g]), dom = rank(f, lu[gi]), cod = rank(f, lu[g]);
      if (r != dom || r != cod)
        c = fail("alpha_bijective", "g=" + gl(G, g) + ": rank " + std::to_string(r) + ", dim D_g^-1 " +
                                        std::to_string(dom) + ", dim D_g " + std::to_string(cod));
    }
    out.push_back(std::move(c));
  }
  {
    Check c = pass("domain_compatibility");
    for (std::size_t g = 0; g < n && c.ok(); ++g)
      for (std::size_t h = 0; h < n; ++h) {
        bool ok;
        if (options.condition == DomainCondition::equality) {
          Vector lhs = pa.apply_alpha(g, A.multiply(pa.u[G.inv(g)], pa.u[h]));
          ok = lhs == A.multiply(pa.u[g], pa.u[G.mul(g, h)]);
        } else {
          Vector p = pa.apply_alpha(h, A.multiply(pa.u[G.inv(h)], pa.u[G.inv(G.mul(g, h))]));
          Vector q = A.multiply(pa.u[h], pa.u[G.inv(g)]);
          ok = A.multiply(p, q) == q;
        }
        if (!ok) {
          c = fail("domain_compatibility", "g=" + gl(G, g) + ", h=" + gl(G, h));
          break;
        }
      }
    out.push_back(std::move(c));
  }
  {
    Check c = pass("composition");
    for (std::size_t g = 0; g < n && c.ok(); ++g)
      for (std::size_t h = 0; h < n; ++h) {
        SparseMatrix m = A.left_mult(A.multiply(pa.u[G.inv(h)], pa.u[G.inv(G.mul(g, h))]));
        SparseMatrix lhs = multiply(f, multiply(f, pa.alpha[g], pa.alpha[h]), m);
        SparseMatrix rhs = multiply(f, pa.alpha[G.mul(g, h)], m);
        if (lhs != rhs) {
          c = fail("composition", "g=" + gl(G, g) + ", h=" + gl(G, h));
          break;
        }
      }
    out.push_back(std::move(c));
  }
  return out;
}

PartialAction make_partial_action(FiniteGroup group, AlgebraPtr algebra, std::vector<Vector> u,
                                  std::vector<SparseMatrix> alpha, const PartialActionOptions& options) {
  PartialAction pa{std::move(group), std::move(algebra), std::move(u), std::move(alpha)};
  for (const auto& c : partial_action_checks(pa, options))
    if (!c.ok()) throw ValidationError(c.name, "partial action axiom violated", c.witness);
  return pa;
}

std::optional<Vector> ideal_unit(const Algebra& a, const Subspace& ideal) {
  const Field& f = a.field();
  const std::size_t k = ideal.dim(), d = a.dim();
  if (k == 0) return Vector(d);
  // unknown u = sum c_j b_j with u b_i = b_i = b_i u
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < k; ++i) {
    const Vector& bi = ideal.basis()[i];
    std::vector<Vector> left(k), right(k);
    for (std::size_t j = 0; j < k; ++j) {
      left[j] = a.multiply(ideal.basis()[j], bi);
      right[j] = a.multiply(bi, ideal.basis()[j]);
    }
    for (std::size_t r = 0; r < d; ++r) {
      Vector row1(k), row2(k);
      for (std::size_t j = 0; j < k; ++j) {
        row1[j] = left[j][r];
        row2[j] = right[j][r];
      }
      rows.push_back(std::move(row1));
      rows.push_back(std::move(row2));
      rhs.push_back(bi[r]);
      rhs.push_back(bi[r]);
    }
  }
  auto c = solve(f, Matrix::from_rows(k, rows), rhs);
  if (!c) return std::nullopt;
  Vector u(d);
  for (std::size_t j = 0; j < k; ++j) axpy(f, u, (*c)[j], ideal.basis()[j]);
  return u;
}

PartialAction partial_action_from_domains(FiniteGroup group, AlgebraPtr algebra, const std::vector<Subspace>& domains,
                                          const std::vector<SparseMatrix>& alpha,
                                          const PartialActionOptions& options) {
  const Algebra& A = *algebra;
  const std::size_t n = group.order();
  if (domains.size() != n || alpha.size() != n) throw DimensionError("one domain and one map per group element");
  std::vector<Vector> u(n);
  for (std::size_t g = 0; g < n; ++g) {
    const Subspace& D = domains[g];
    if (D.ambient() != A.dim()) throw DimensionError("domain ambient dimension");
    for (const auto& v : D.basis())
      for (std::size_t i = 0; i < A.dim(); ++i)
        if (!D.contains(apply(A.field(), A.left_basis(i), v)) || !D.contains(apply(A.field(), A.right_basis(i), v)))
          throw ValidationError("NotAnIdeal", "domain is not a two-sided ideal", "g=" + group.label(g));
    auto unit = ideal_unit(A, D);
    if (!unit || !central_idempotent_check(A, *unit).ok())
      throw ValidationError("NoUnitIdeal", "no central idempotent generates the domain", "g=" + group.label(g));
    u[g] = std::move(*unit);
  }
  std::vector<SparseMatrix> total(n);
  for (std::size_t g = 0; g < n; ++g) total[g] = multiply(A.field(), alpha[g], A.left_mult(u[group.inv(g)]));
  return make_partial_action(std::move(group), std::move(algebra), std::move(u), std::move(total), options);
}

PartialAction global_partial_action(const GlobalAction& ga) {
  std::vector<Vector> u(ga.group.order(), ga.algebra->unit());
  return make_partial_action(ga.group, ga.algebra, std::move(u), ga.automorphism);
}

RestrictedAction restrict_global_action(const GlobalAction& ga, const Vector& idempotent) {
  const Algebra& A = *ga.algebra;
  const Field& f = A.field();
  const FiniteGroup& G = ga.group;
  Check c = central_idempotent_check(A, idempotent);
  if (!c.ok()) throw ValidationError("NotCentralIdempotent", "1_B must be a central idempotent", c.witness);
  global_partial_action(ga);  // the ambient action must itself be valid

  SparseMatrix l1 = A.left_mult(idempotent);
  Subspace b = column_space(f, l1);
  const std::size_t k = b.dim();
  // structure constants of B in the canonical basis
  std::vector<std::vector<Vector>> st(k, std::vector<Vector>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) st[i][j] = b.checked_coordinates(A.multiply(b.basis()[i], b.basis()[j]));
  AlgebraOptions opt;
  for (const auto& v : b.basis()) opt.labels.push_back(A.format(v));
  AlgebraPtr balg = make_algebra(f, k, st, b.checked_coordinates(idempotent), std::move(opt));

  const std::size_t n = G.order();
  std::vector<Vector> ub(n), u_big(n);
  for (std::size_t g = 0; g < n; ++g) {
    u_big[g] = A.multiply(idempotent, apply(f, ga.automorphism[g], idempotent));
    ub[g] = b.checked_coordinates(u_big[g]);
  }
  std::vector<SparseMatrix> beta(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<Vector> cols;
    for (const auto& v : b.basis()) {
      Vector x = apply(f, ga.automorphism[g], A.multiply(v, u_big[G.inv(g)]));
      cols.push_back(b.checked_coordinates(x));
    }
    beta[g] = SparseMatrix::from_columns(k, cols);
  }
  return {b, make_partial_action(G, balg, std::move(ub), std::move(beta))};
}

// -------------------------------------------------- partial representations

namespace {

template <class T, class Mul>
std::vector<Check> rep_axioms(const FiniteGroup& G, const std::vector<T>& pi, const T& one, Mul mul) {
  std::vector<Check> out;
  out.push_back(verdict("pi(e) = id", pi.at(0) == one));
  Check right = pass("pi(s)pi(t)pi(t^-1) = pi(st)pi(t^-1)");
  Check left = pass("pi(s^-1)pi(s)pi(t) = pi(s^-1)pi(st)");
  for (std::size_t s = 0; s < G.order(); ++s)
    for (std::size_t t = 0; t < G.order(); ++t) {
      const std::size_t st = G.mul(s, t), ti = G.inv(t), si = G.inv(s);
      std::string w = "s=" + G.label(s) + ", t=" + G.label(t);
      if (right.ok() && mul(mul(pi[s], pi[t]), pi[ti]) != mul(pi[st], pi[ti])) right = fail(right.name, w);
      if (left.ok() && mul(mul(pi[si], pi[s]), pi[t]) != mul(pi[si], pi[st])) left = fail(left.name, w);
    }
  out.push_back(std::move(right));
  out.push_back(std::move(left));
  return out;
}

}  // namespace

std::vector<Check> partial_rep_checks(const Field& field, const FiniteGroup& g, const std::vector<SparseMatrix>& pi) {
  if (pi.size() != g.order()) throw DimensionError("partial representation needs one operator per element");
  const std::size_t n = pi.empty() ? 0 : pi[0].rows();
  return rep_axioms(g, pi, SparseMatrix::identity(field, n),
                    [&](const SparseMatrix& a, const SparseMatrix& b) { return multiply(field, a, b); });
}

std::vector<Check> partial_rep_checks(const Algebra& a, const FiniteGroup& g, const std::vector<Vector>& pi) {
  if (pi.size() != g.order()) throw DimensionError("partial representation needs one element per group element");
  return rep_axioms(g, pi, a.unit(), [&](const Vector& x, const Vector& y) { return a.multiply(x, y); });
}

// ---------------------------------------------------------- covariant pairs

std::vector<Check> covariant_pair_checks(const PartialAction& pa, const CovariantPair& cp) {
  const Field& f = pa.field();
  const FiniteGroup& G = pa.group;
  const Algebra& A = *pa.algebra;
  std::vector<Check> out = module_checks(cp.phi);
  for (auto& c : partial_rep_checks(f, G, cp.pi)) out.push_back(std::move(c));
  Check cov = pass("covariance");
  for (std::size_t g = 0; g < G.order() && cov.ok(); ++g)
    for (std::size_t i = 0; i < A.dim(); ++i) {
      Vector a = A.multiply(A.basis_element(i), pa.u[G.inv(g)]);
      SparseMatrix lhs = cp.phi.act_matrix(pa.apply_alpha(g, a));
      SparseMatrix rhs = multiply(f, multiply(f, cp.pi[g], cp.phi.action(i)), cp.pi[G.inv(g)]);
      if (lhs != rhs) {
        cov = fail("covariance", "g=" + G.label(g) + ", a=" + A.labels()[i]);
        break;
      }
    }
  out.push_back(std::move(cov));
  return out;
}

AlgModule covariant_pair_to_module(const CovariantPair& cp, const SmashAlgebra& s) {
  for (const auto& c : covariant_pair_checks(s.action, cp))
    if (!c.ok())
      throw ValidationError(c.name == "covariance" ? "CovarianceViolated" : "AxiomViolated", c.name, c.witness);
  const Field& f = s.action.field();
  std::vector<SparseMatrix> act;
  for (const auto& [g, k] : s.index)
    act.push_back(multiply(f, cp.phi.act_matrix(s.domains[g].basis()[k]), cp.pi[g]));
  return make_module(s.algebra, cp.phi.dim(), std::move(act));
}

CovariantPair module_to_covariant_pair(const AlgModule& m, const SmashAlgebra& s) {
  CovariantPair cp;
  cp.phi = restrict_scalars(m, s.action.algebra, s.phi0);
  for (const auto& p : s.pi0) cp.pi.push_back(m.act_matrix(p));
  return cp;
}

}  // namespace parsmash
