#include "parsmash/kpar.hpp"

#include <random>

#include "parsmash/errors.hpp"

namespace parsmash {

namespace {

std::string subset_label(const FiniteGroup& g, uint64_t mask) {
  if (mask == 0) return "1";
  std::string s = "e{";
  bool first = true;
  for (std::size_t x = 1; x < g.order(); ++x)
    if (mask & element_bit(x)) {
      s += (first ? "" : ",") + g.label(x);
      first = false;
    }
  return s + "}";
}

uint64_t translate_mask(const FiniteGroup& G, std::size_t g, uint64_t mask) {
  uint64_t out = 0;
  // e itself is always in T
  out |= element_bit(G.mul(g, 0));
  for (std::size_t x = 1; x < G.order(); ++x)
    if (mask & element_bit(x)) out |= element_bit(G.mul(g, x));
  return out;
}

}  // namespace

std::size_t Kpar::index_of(std::size_t g, uint64_t mask) const {
  std::size_t i = slot.at(g).at(mask);
  if (i >= dim()) throw ValidationError("InvalidBasisPair", "T must contain g", "g=" + group.label(g));
  return i;
}

uint64_t Kpar::translate(std::size_t g, uint64_t mask) const { return translate_mask(group, g, mask); }

std::size_t kpar_dimension_formula(std::size_t order) {
  if (order <= 1) return 1;
  return (std::size_t{1} << (order - 2)) * (order + 1);
}

AlgebraPtr build_b(const Field& field, const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 24) throw BudgetExceeded("B for a group of order " + std::to_string(n));
  const std::size_t dim = std::size_t{1} << (n - 1);
  std::vector<SparseVec> table(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) table[i * dim + j].push_back({static_cast<uint32_t>(i | j), field.one()});
  AlgebraOptions opt;
  for (std::size_t m = 0; m < dim; ++m) opt.labels.push_back(subset_label(g, m));
  for (std::size_t x = 1; x < n; ++x) opt.generators.push_back(unit_vector(field, dim, element_bit(x)));
  if (opt.generators.empty()) opt.generators.push_back(unit_vector(field, dim, 0));
  return make_algebra_sparse(field, dim, std::move(table), unit_vector(field, dim, 0), std::move(opt));
}

PartialAction beta_action(const FiniteGroup& G, const AlgebraPtr& b) {
  const Field& f = b->field();
  const std::size_t n = G.order(), dim = b->dim();
  std::vector<Vector> u(n);
  std::vector<SparseMatrix> alpha(n);
  for (std::size_t g = 0; g < n; ++g) {
    u[g] = unit_vector(f, dim, element_bit(g));
    SparseMatrix a(dim, dim);
    const uint64_t need = element_bit(G.inv(g));
    for (uint64_t m = 0; m < dim; ++m) {
      // alpha_g(e_T) = beta_g(e_T e_{g^-1}) = e_{g(T u {g^-1})}
      uint64_t image = translate_mask(G, g, m | need);
      a.row(image).push_back({static_cast<uint32_t>(m), f.one()});
    }
    alpha[g] = std::move(a);
  }
  return PartialAction{G, b, std::move(u), std::move(alpha)};
}

Kpar build_kpar(const Field& field, const FiniteGroup& G, const KparOptions& options) {
  if (G.order() > options.max_order)
    throw BudgetExceeded("K_par G for |G| = " + std::to_string(G.order()) + " exceeds the order limit " +
                         std::to_string(options.max_order));
  Kpar k;
  k.group = G;
  k.lattice = boolean_semilattice(G.order() - 1);
  k.b = build_b(field, G);
  k.beta = beta_action(G, k.b);
  if (options.verify)
    for (const auto& c : partial_action_checks(k.beta))
      if (!c.ok()) throw ValidationError("InternalError", "beta fails " + c.name, c.witness);
  SmashOptions so;
  so.check_associativity = options.verify;
  k.smash = smash_product(k.beta, so);

  const std::size_t n = G.order(), bd = k.b->dim();
  k.slot.assign(n, std::vector<std::size_t>(bd, k.smash.algebra->dim()));
  for (std::size_t i = 0; i < k.smash.index.size(); ++i) {
    auto [g, j] = k.smash.index[i];
    const Vector& v = k.smash.domains[g].basis()[j];
    auto sp = to_sparse(v);
    if (sp.size() != 1 || !sp[0].value.is_one())
      throw ValidationError("InternalError", "domain basis of B is not a set of subsets");
    k.pairs.emplace_back(g, sp[0].index);
    k.slot[g][sp[0].index] = i;
  }
  for (std::size_t g = 0; g < n; ++g) {
    k.e.push_back(unit_vector(field, bd, element_bit(g)));
    k.bracket.push_back(k.smash.pi0[g]);
  }
  return k;
}

Vector word_to_element(const Kpar& k, const std::vector<std::size_t>& word) {
  std::size_t prod = 0;
  uint64_t mask = 0;
  for (std::size_t g : word) {
    prod = k.group.mul(prod, g);
    mask |= element_bit(prod);
  }
  return unit_vector(k.field(), k.dim(), k.index_of(prod, mask));
}

Vector embed_b(const Kpar& k, const Vector& b) {
  if (b.size() != k.b_dim()) throw DimensionError("embed_b");
  Vector x(k.dim());
  for (std::size_t m = 0; m < b.size(); ++m)
    if (!b[m].is_zero()) x[k.index_of(0, m)] = b[m];
  return x;
}

bool commutation_check(const Kpar& k, std::size_t g, std::size_t h) {
  const Algebra& L = *k.algebra();
  Vector lhs = L.multiply(k.bracket[g], embed_b(k, k.e[h]));
  Vector rhs = L.multiply(embed_b(k, k.e[k.group.mul(g, h)]), k.bracket[g]);
  return lhs == rhs;
}

SparseMatrix epsilon_matrix(const Kpar& k) {
  SparseMatrix eps(k.b_dim(), k.dim());
  for (std::size_t i = 0; i < k.dim(); ++i)
    eps.row(k.pairs[i].second).push_back({static_cast<uint32_t>(i), k.field().one()});
  return eps;
}

Vector epsilon(const Kpar& k, const Vector& x) {
  if (x.size() != k.dim()) throw DimensionError("epsilon");
  const Field& f = k.field();
  Vector b(k.b_dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) b[k.pairs[i].second] = f.add(b[k.pairs[i].second], x[i]);
  return b;
}

SparseMatrix conj_rep(const Kpar& k, std::size_t g) {
  const Algebra& L = *k.algebra();
  const std::size_t bd = k.b_dim();
  std::vector<Vector> cols;
  for (std::size_t m = 0; m < bd; ++m) {
    Vector y = L.multiply(L.multiply(k.bracket[g], embed_b(k, unit_vector(k.field(), bd, m))),
                          k.bracket[k.group.inv(g)]);
    Vector c(bd);
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i].is_zero()) continue;
      if (k.pairs[i].first != 0)
        throw ValidationError("InternalError", "[g] x [g^-1] left B", "g=" + k.group.label(g));
      c[k.pairs[i].second] = y[i];
    }
    cols.push_back(std::move(c));
  }
  return SparseMatrix::from_columns(bd, cols);
}

std::vector<Vector> ig_spanning_set(const Kpar& k) {
  std::vector<Vector> out;
  const Field& f = k.field();
  for (std::size_t i = 0; i < k.dim(); ++i) {
    auto [g, mask] = k.pairs[i];
    if (g == 0) continue;
    Vector v = unit_vector(f, k.dim(), i);
    v[k.index_of(0, mask)] = f.neg(f.one());
    out.push_back(std::move(v));
  }
  return out;
}

Subspace ig_subspace(const Kpar& k) {
  return Subspace::span(k.field(), k.dim(), kernel_basis(k.field(), epsilon_matrix(k)));
}

std::vector<Check> kpar_checks(const Kpar& k) {
  const Field& f = k.field();
  const FiniteGroup& G = k.group;
  const Algebra& L = *k.algebra();
  const std::size_t n = G.order();
  std::vector<Check> out;

  out.push_back(verdict("dim B = 2^(|G|-1)", k.b_dim() == (std::size_t{1} << (n - 1)),
                        std::to_string(k.b_dim())));
  out.push_back(verdict("dim K_par G formula", k.dim() == kpar_dimension_formula(n), std::to_string(k.dim())));
  {
    Check c = pass("e_g idempotent and commuting");
    const Algebra& B = *k.b;
    for (std::size_t g = 0; g < n && c.ok(); ++g) {
      if (B.multiply(k.e[g], k.e[g]) != k.e[g]) c = fail(c.name, "g=" + G.label(g));
      for (std::size_t h = 0; h < n && c.ok(); ++h)
        if (B.multiply(k.e[g], k.e[h]) != B.multiply(k.e[h], k.e[g])) c = fail(c.name, G.label(g) + "," + G.label(h));
    }
    if (k.e[0] != B.unit()) c = fail(c.name, "e_e != 1");
    out.push_back(std::move(c));
  }
  for (auto c : partial_action_checks(k.beta)) {
    c.name = "beta " + c.name;
    out.push_back(std::move(c));
  }
  {
    // closed form and grading
    Check closed = pass("closed form product");
    for (std::size_t i = 0; i < k.dim() && closed.ok(); ++i) {
      auto [g, t] = k.pairs[i];
      for (std::size_t j = 0; j < k.dim(); ++j) {
        auto [h, tp] = k.pairs[j];
        std::size_t gh = G.mul(g, h);
        uint64_t mask = t | k.translate(g, tp) | element_bit(gh);
        SparseVec expect{{static_cast<uint32_t>(k.index_of(gh, mask)), f.one()}};
        if (L.product(i, j) != expect) {
          closed = fail(closed.name, L.labels()[i] + " * " + L.labels()[j]);
          break;
        }
      }
    }
    out.push_back(std::move(closed));
    Check grading = pass("grading B_g B_h in B_gh");
    for (std::size_t i = 0; i < k.dim() && grading.ok(); ++i)
      for (std::size_t j = 0; j < k.dim(); ++j) {
        std::size_t gh = G.mul(k.pairs[i].first, k.pairs[j].first);
        for (const auto& e : L.product(i, j))
          if (k.pairs[e.index].first != gh) grading = fail(grading.name, L.labels()[i] + " * " + L.labels()[j]);
        if (!grading.ok()) break;
      }
    out.push_back(std::move(grading));
  }
  for (auto c : partial_rep_checks(L, G, k.bracket)) {
    c.name = "bracket relation " + c.name;
    out.push_back(std::move(c));
  }
  {
    Check c = pass("[g] e_h = e_gh [g]");
    for (std::size_t g = 0; g < n && c.ok(); ++g)
      for (std::size_t h = 0; h < n; ++h)
        if (!commutation_check(k, g, h)) {
          c = fail(c.name, "g=" + G.label(g) + ", h=" + G.label(h));
          break;
        }
    out.push_back(std::move(c));
  }
  {
    std::vector<SparseMatrix> pi;
    Check lands = pass("conj_rep lands in B");
    try {
      for (std::size_t g = 0; g < n; ++g) pi.push_back(conj_rep(k, g));
    } catch (const ValidationError& e) {
      lands = fail(lands.name, e.witness());
    }
    out.push_back(lands);
    if (lands.ok())
      for (auto c : partial_rep_checks(f, G, pi)) {
        c.name = "conj_rep " + c.name;
        out.push_back(std::move(c));
      }
  }
  {
    SparseMatrix eps = epsilon_matrix(k);
    out.push_back(verdict("epsilon surjective", rank(f, eps) == k.b_dim()));
    Subspace ig = ig_subspace(k);
    out.push_back(verdict("dim IG = dim K_par G - dim B", ig.dim() == k.dim() - k.b_dim(), std::to_string(ig.dim())));
    out.push_back(verdict("IG spanned by e_T#g - e_T#e", Subspace::span(f, k.dim(), ig_spanning_set(k)) == ig));
    Check blin = pass("epsilon left B-linear");
    for (std::size_t s = 0; s < k.b_dim() && blin.ok(); ++s) {
      Vector es = unit_vector(f, k.b_dim(), s);
      for (std::size_t i = 0; i < k.dim(); ++i) {
        Vector x = unit_vector(f, k.dim(), i);
        if (epsilon(k, L.multiply(embed_b(k, es), x)) != k.b->multiply(es, epsilon(k, x))) {
          blin = fail(blin.name, "e_S=" + k.b->labels()[s] + ", x=" + L.labels()[i]);
          break;
        }
      }
    }
    out.push_back(std::move(blin));
  }
  return out;
}

// ------------------------------------------------------------- modules

AlgModule b_module(const Kpar& k) {
  const std::size_t bd = k.b_dim(), d = k.dim();
  const Field& f = k.field();
  const Algebra& L = *k.algebra();
  std::vector<SparseMatrix> act;
  for (std::size_t i = 0; i < d; ++i) {
    SparseMatrix m(bd, bd);
    for (std::size_t b = 0; b < bd; ++b)
      for (const auto& e : L.product(i, k.index_of(0, b)))
        m.row(k.pairs[e.index].second).push_back({static_cast<uint32_t>(b), e.value});
    // rows were filled in increasing column order; merge any duplicate entries
    for (std::size_t r = 0; r < bd; ++r) {
      SparseVec merged;
      for (auto& e : m.row(r)) {
        if (!merged.empty() && merged.back().index == e.index)
          merged.back().value = f.add(merged.back().value, e.value);
        else
          merged.push_back(std::move(e));
      }
      std::erase_if(merged, [](const SparseEntry& e) { return e.value.is_zero(); });
      m.row(r) = std::move(merged);
    }
    act.push_back(std::move(m));
  }
  return make_module(k.algebra(), bd, std::move(act));
}

AlgModule ig_module(const Kpar& k) { return submodule(regular_module(k.algebra()), ig_subspace(k)); }

Subspace dg_subspace(const Kpar& k) {
  AlgModule bm = b_module(k);
  if (k.group.order() == 1) return Subspace::whole(k.field(), k.b_dim());
  std::vector<Vector> gens;
  for (uint64_t m = 0; m < k.b_dim(); ++m)
    if (m & element_bit(1)) gens.push_back(unit_vector(k.field(), k.b_dim(), m));
  return spin(bm, gens);
}

AlgModule dg_module(const Kpar& k) { return submodule(b_module(k), dg_subspace(k)); }

AlgModule random_quotient_module(const Kpar& k, uint64_t seed) {
  const Field& f = k.field();
  AlgModule reg = regular_module(k.algebra());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, k.dim() - 1);
  std::uniform_int_distribution<int> coef(1, 3);
  Subspace s;
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vector v(k.dim());
    for (int t = 0; t < 3; ++t) v[pick(rng)] = f.from_int(coef(rng) * (t % 2 ? -1 : 1));
    if (is_zero(v)) continue;
    s = spin(reg, {v});
    if (s.dim() < k.dim() || k.dim() == 1) break;
  }
  return quotient_module(reg, s);
}

AlgModule partial_rep_to_module(const Kpar& k, const std::vector<SparseMatrix>& pi) {
  const Field& f = k.field();
  const FiniteGroup& G = k.group;
  if (pi.size() != G.order()) throw DimensionError("partial representation needs one operator per element");
  const std::size_t dim = pi[0].rows();
  for (const auto& p : pi)
    if (p.rows() != dim || p.cols() != dim) throw DimensionError("partial representation operator shape");
  for (const auto& c : partial_rep_checks(f, G, pi))
    if (!c.ok()) throw ValidationError("AxiomViolated", c.name, c.witness);
  std::vector<SparseMatrix> eg(G.order());
  for (std::size_t h = 0; h < G.order(); ++h) eg[h] = multiply(f, pi[h], pi[G.inv(h)]);
  std::vector<SparseMatrix> act;
  for (const auto& [g, mask] : k.pairs) {
    SparseMatrix m = SparseMatrix::identity(f, dim);
    for (std::size_t h = 1; h < G.order(); ++h)
      if (mask & element_bit(h)) m = multiply(f, m, eg[h]);
    act.push_back(multiply(f, m, pi[g]));
  }
  return make_module(k.algebra(), dim, std::move(act));
}

std::vector<SparseMatrix> module_to_partial_rep(const Kpar& k, const AlgModule& m) {
  std::vector<SparseMatrix> pi;
  for (const auto& b : k.bracket) pi.push_back(m.act_matrix(b));
  return pi;
}

}  // namespace parsmash
