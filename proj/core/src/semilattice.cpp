#include "parsmash/semilattice.hpp"

#include <algorithm>
#include <deque>

#include "parsmash/errors.hpp"

namespace parsmash {

namespace {

std::string set_label(uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (std::size_t b = 0; b < 64; ++b)
    if (mask >> b & 1) {
      s += (first ? "" : ",") + std::to_string(b);
      first = false;
    }
  return s + "}";
}

}  // namespace

std::size_t Semilattice::index_of(uint64_t mask) const {
  auto it = std::lower_bound(masks_.begin(), masks_.end(), mask);
  if (it == masks_.end() || *it != mask) return masks_.size();
  return static_cast<std::size_t>(it - masks_.begin());
}

Semilattice make_semilattice(std::size_t ground, std::vector<uint64_t> masks) {
  if (ground > 63) throw InputError("semilattice ground set too large");
  if (masks.empty()) throw InputError("semilattice must be nonempty");
  for (uint64_t m : masks)
    if (m >> ground) throw InputError("mask " + std::to_string(m) + " outside the ground set");
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  Semilattice s;
  s.ground_ = ground;
  s.masks_ = std::move(masks);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s.meet(i, j) == s.size())
        throw ValidationError("NotClosed", "union of two elements is missing",
                              set_label(s.mask(i)) + "," + set_label(s.mask(j)));
  return s;
}

Semilattice boolean_semilattice(std::size_t ground) {
  if (ground > 20) throw BudgetExceeded("boolean semilattice on " + std::to_string(ground) + " generators");
  std::vector<uint64_t> masks(std::size_t{1} << ground);
  for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = i;
  return make_semilattice(ground, std::move(masks));
}

std::vector<Vector> orthogonal_idempotent_basis(const Field& field, const Semilattice& s) {
  const std::size_t n = s.size();
  std::vector<Vector> w(n);
  // a proper superset has a larger mask value, so descending order suffices
  for (std::size_t i = n; i-- > 0;) {
    Vector v = unit_vector(field, n, i);
    for (std::size_t j = i + 1; j < n; ++j)
      if ((s.mask(j) & s.mask(i)) == s.mask(i)) v = sub(field, v, w[j]);
    w[i] = std::move(v);
  }

  // verify: idempotent, orthogonal, spanning
  auto product = [&](const Vector& a, const Vector& b) {
    Vector r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[j].is_zero()) field.add_mul(r[s.meet(i, j)], a[i], b[j]);
    }
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector p = product(w[i], w[j]);
      bool ok = i == j ? p == w[i] : is_zero(p);
      if (!ok)
        throw ValidationError("VerificationFailed", "orthogonal idempotent basis check failed",
                              set_label(s.mask(i)) + "," + set_label(s.mask(j)));
    }
  if (Subspace::span(field, n, w).dim() != n)
    throw ValidationError("VerificationFailed", "orthogonal idempotents do not span");
  return w;
}

AlgebraPtr semilattice_algebra(const Field& field, const Semilattice& s) {
  const std::size_t n = s.size();
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j].push_back({static_cast<uint32_t>(s.meet(i, j)), field.one()});
  Vector unit(n);
  for (const auto& w : orthogonal_idempotent_basis(field, s)) unit = add(field, unit, w);
  AlgebraOptions opt;
  for (uint64_t m : s.masks()) opt.labels.push_back("e" + set_label(m));
  return make_algebra_sparse(field, n, std::move(table), unit, std::move(opt));
}

Vector orthogonal_coordinates(const Field& field, const Semilattice& s, const Vector& r) {
  const std::size_t n = s.size();
  if (r.size() != n) throw DimensionError("orthogonal_coordinates");
  // e_T = sum_{T' >= T} w_{T'}, so the w_{T'} coefficient collects all T <= T'
  Vector a(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (r[t].is_zero()) continue;
    for (std::size_t tp = t; tp < n; ++tp)
      if ((s.mask(tp) & s.mask(t)) == s.mask(t)) a[tp] = field.add(a[tp], r[t]);
  }
  return a;
}

Vector principal_generator(const Field& field, const Semilattice& s, const std::vector<Vector>& generators) {
  const std::size_t n = s.size();
  std::vector<char> in_w(n, 0);
  for (const auto& r : generators) {
    Vector a = orthogonal_coordinates(field, s, r);
    for (std::size_t j = 0; j < n; ++j)
      if (!a[j].is_zero()) in_w[j] = 1;
  }
  auto w = orthogonal_idempotent_basis(field, s);
  Vector u(n);
  for (std::size_t j = 0; j < n; ++j)
    if (in_w[j]) u = add(field, u, w[j]);
  return u;
}

Subspace ideal_closure(const Algebra& a, const std::vector<Vector>& generators) {
  const Field& f = a.field();
  EchelonForm ech(f, a.dim());
  std::vector<Vector> found;
  std::deque<Vector> queue;
  for (const auto& g : generators)
    if (ech.insert(g)) {
      found.push_back(g);
      queue.push_back(g);
    }
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (const Vector& w : {apply(f, a.left_basis(i), v), apply(f, a.right_basis(i), v)})
        if (ech.insert(w)) {
          found.push_back(w);
          queue.push_back(w);
        }
  }
  return Subspace::span(f, a.dim(), found);
}

}  // namespace parsmash
