#include "parsmash/errors.hpp"
#include "parsmash/partial_action.hpp"

namespace parsmash {

namespace {

std::string element_label(const Algebra& a, const Vector& v, const std::string& g) {
  std::string s = a.format(v);
  bool single = s.find(' ') == std::string::npos && s.find('*') == std::string::npos;
  return (single ? s : "(" + s + ")") + "#" + g;
}

}  // namespace

Vector SmashAlgebra::element(std::size_t g, const Vector& a) const {
  Vector x(algebra->dim());
  Vector c = domains[g].checked_coordinates(a);
  for (std::size_t k = 0; k < c.size(); ++k) x[offset[g] + k] = std::move(c[k]);
  return x;
}

Vector SmashAlgebra::component(const Vector& x, std::size_t g) const {
  const Field& f = action.field();
  Vector a(action.algebra->dim());
  for (std::size_t k = 0; k < domains[g].dim(); ++k)
    if (!x[offset[g] + k].is_zero()) axpy(f, a, x[offset[g] + k], domains[g].basis()[k]);
  return a;
}

namespace {

// a alpha_g(b u_h u_{g^-1}) u_{gh} for a in D_g, b in D_h
Vector formula(const PartialAction& pa, std::size_t g, const Vector& a, std::size_t h, const Vector& b) {
  const Algebra& A = *pa.algebra;
  const FiniteGroup& G = pa.group;
  Vector inner = A.multiply(A.multiply(b, pa.u[h]), pa.u[G.inv(g)]);
  return A.multiply(A.multiply(a, pa.apply_alpha(g, inner)), pa.u[G.mul(g, h)]);
}

// alpha_g(alpha_{g^-1}(a) b), the product formula for arbitrary ideals
Vector general_formula(const PartialAction& pa, std::size_t g, const Vector& a, const Vector& b) {
  const Algebra& A = *pa.algebra;
  return pa.apply_alpha(g, A.multiply(pa.apply_alpha(pa.group.inv(g), a), b));
}

}  // namespace

SmashAlgebra smash_product(const PartialAction& pa, const SmashOptions& options) {
  const Algebra& A = *pa.algebra;
  const Field& f = A.field();
  const FiniteGroup& G = pa.group;
  const std::size_t n = G.order();

  SmashAlgebra s;
  s.action = pa;
  std::size_t total = 0;
  for (std::size_t g = 0; g < n; ++g) {
    s.domains.push_back(column_space(f, A.right_mult(pa.u[g])));
    s.offset.push_back(total);
    for (std::size_t k = 0; k < s.domains[g].dim(); ++k) s.index.emplace_back(g, k);
    total += s.domains[g].dim();
  }

  std::vector<SparseVec> table(total * total);
  for (std::size_t i = 0; i < total; ++i) {
    auto [g, k] = s.index[i];
    const Vector& a = s.domains[g].basis()[k];
    for (std::size_t j = 0; j < total; ++j) {
      auto [h, l] = s.index[j];
      const std::size_t gh = G.mul(g, h);
      Vector p = formula(pa, g, a, h, s.domains[h].basis()[l]);
      if (!s.domains[gh].contains(p))
        throw ValidationError("InternalError", "smash product left D_gh", "(" + std::to_string(i) + "," + std::to_string(j) + ")");
      Vector c = s.domains[gh].coordinates(p);
      for (std::size_t t = 0; t < c.size(); ++t)
        if (!c[t].is_zero()) table[i * total + j].push_back({static_cast<uint32_t>(s.offset[gh] + t), c[t]});
    }
  }

  // the unit is 1 # e; D_e = A
  Vector unit(total);
  {
    Vector c = s.domains[0].checked_coordinates(A.unit());
    for (std::size_t t = 0; t < c.size(); ++t) unit[t] = c[t];
  }
  AlgebraOptions opt;
  opt.check_associativity = options.check_associativity;
  for (const auto& [g, k] : s.index) opt.labels.push_back(element_label(A, s.domains[g].basis()[k], G.label(g)));

  std::vector<Vector> phi_cols;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Vector x(total);
    Vector c = s.domains[0].checked_coordinates(A.basis_element(i));
    for (std::size_t t = 0; t < c.size(); ++t) x[t] = c[t];
    phi_cols.push_back(std::move(x));
  }
  s.phi0 = SparseMatrix::from_columns(total, phi_cols);
  for (std::size_t g = 0; g < n; ++g) {
    Vector x(total);
    Vector c = s.domains[g].checked_coordinates(pa.u[g]);
    for (std::size_t t = 0; t < c.size(); ++t) x[s.offset[g] + t] = c[t];
    s.pi0.push_back(std::move(x));
  }
  opt.generators = phi_cols;
  for (const auto& p : s.pi0) opt.generators.push_back(p);
  try {
    s.algebra = make_algebra_sparse(f, total, std::move(table), unit, std::move(opt));
  } catch (const ValidationError& e) {
    throw ValidationError("InternalError", std::string("smash product failed validation: ") + e.what(), e.witness());
  }
  return s;
}

Vector smash_formula_product(const SmashAlgebra& s, const Vector& x, const Vector& y) {
  const PartialAction& pa = s.action;
  const FiniteGroup& G = pa.group;
  const Field& f = pa.field();
  Vector out(s.algebra->dim());
  for (std::size_t g = 0; g < G.order(); ++g) {
    Vector a = s.component(x, g);
    if (is_zero(a)) continue;
    for (std::size_t h = 0; h < G.order(); ++h) {
      Vector b = s.component(y, h);
      if (is_zero(b)) continue;
      out = add(f, out, s.element(G.mul(g, h), formula(pa, g, a, h, b)));
    }
  }
  return out;
}

std::vector<Check> smash_checks(const SmashAlgebra& s) {
  const PartialAction& pa = s.action;
  const Algebra& A = *pa.algebra;
  const Algebra& S = *s.algebra;
  const Field& f = A.field();
  const FiniteGroup& G = pa.group;
  std::vector<Check> out;

  Check agree = pass("general formula agreement");
  for (std::size_t i = 0; i < S.dim() && agree.ok(); ++i) {
    auto [g, k] = s.index[i];
    for (std::size_t j = 0; j < S.dim(); ++j) {
      auto [h, l] = s.index[j];
      Vector p = general_formula(pa, g, s.domains[g].basis()[k], s.domains[h].basis()[l]);
      if (S.multiply(S.basis_element(i), S.basis_element(j)) != s.element(G.mul(g, h), p)) {
        agree = fail(agree.name, S.labels()[i] + " * " + S.labels()[j]);
        break;
      }
    }
  }
  out.push_back(std::move(agree));
  out.push_back(associativity_check(S));

  Matrix phi = s.phi0.to_dense();
  bool unital = apply(f, s.phi0, A.unit()) == S.unit();
  Check phim = verdict("phi0 unital algebra map", unital, "phi0(1) != 1");
  for (std::size_t i = 0; i < A.dim() && phim.ok(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (apply(f, s.phi0, A.multiply(A.basis_element(i), A.basis_element(j))) !=
          S.multiply(phi.column(i), phi.column(j))) {
        phim = fail(phim.name, A.labels()[i] + "," + A.labels()[j]);
        break;
      }
  out.push_back(std::move(phim));
  out.push_back(verdict("phi0 injective", rank(f, s.phi0) == A.dim()));
  for (auto& c : partial_rep_checks(S, G, s.pi0)) {
    c.name = "pi0: " + c.name;
    out.push_back(std::move(c));
  }
  return out;
}

// --------------------------------------------------------------- raw smash

RawElement raw_product(const RawPartialAction& r, const RawElement& x, const RawElement& y) {
  const Algebra& A = *r.algebra;
  const Field& f = A.field();
  const FiniteGroup& G = r.group;
  RawElement z(G.order(), Vector(A.dim()));
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (is_zero(x[g])) continue;
    Vector ag = apply(f, r.alpha[G.inv(g)], x[g]);
    for (std::size_t h = 0; h < G.order(); ++h) {
      if (is_zero(y[h])) continue;
      Vector p = apply(f, r.alpha[g], A.multiply(ag, y[h]));
      z[G.mul(g, h)] = add(f, z[G.mul(g, h)], p);
    }
  }
  return z;
}

std::string format_raw(const RawPartialAction& r, const RawElement& x) {
  const Algebra& A = *r.algebra;
  std::string out;
  for (std::size_t g = 0; g < x.size(); ++g)
    for (std::size_t i = 0; i < x[g].size(); ++i) {
      if (x[g][i].is_zero()) continue;
      std::string c = x[g][i].to_string();
      bool neg = c[0] == '-';
      if (neg) c.erase(0, 1);
      if (!out.empty())
        out += neg ? " - " : " + ";
      else if (neg)
        out += "-";
      if (c != "1") out += c;
      out += A.labels()[i] + "δ_" + r.group.label(g);
    }
  return out.empty() ? "0" : out;
}

RawWitness raw_smash_witness(const RawPartialAction& r, const std::optional<RawElement>& probe) {
  const FiniteGroup& G = r.group;
  const Algebra& A = *r.algebra;
  if (r.domains.size() != G.order() || r.alpha.size() != G.order())
    throw DimensionError("raw partial action needs one domain and map per element");
  RawWitness w;
  if (probe) {
    if (probe->size() != G.order()) throw DimensionError("probe element");
    const RawElement& u = *probe;
    RawElement uu = raw_product(r, u, u);
    w.left = raw_product(r, uu, u);
    w.right = raw_product(r, u, uu);
    if (w.left != w.right) {
      w.associative = false;
      w.x = w.y = w.z = u;
      w.witness = "(uu)u = " + format_raw(r, w.left) + ", u(uu) = " + format_raw(r, w.right);
      return w;
    }
  }
  std::vector<RawElement> basis;
  for (std::size_t g = 0; g < G.order(); ++g)
    for (const auto& v : r.domains[g].basis()) {
      RawElement e(G.order(), Vector(A.dim()));
      e[g] = v;
      basis.push_back(std::move(e));
    }
  for (const auto& x : basis)
    for (const auto& y : basis) {
      RawElement xy = raw_product(r, x, y);
      for (const auto& z : basis) {
        RawElement l = raw_product(r, xy, z);
        RawElement rr = raw_product(r, x, raw_product(r, y, z));
        if (l != rr) {
          w.associative = false;
          w.x = x;
          w.y = y;
          w.z = z;
          w.left = l;
          w.right = rr;
          w.witness = "(xy)z = " + format_raw(r, l) + ", x(yz) = " + format_raw(r, rr) + " for x = " +
                      format_raw(r, x) + ", y = " + format_raw(r, y) + ", z = " + format_raw(r, z);
          return w;
        }
      }
    }
  w.witness = "associative on all basis triples";
  return w;
}

}  // namespace parsmash
