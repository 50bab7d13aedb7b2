#pragma once

// Seeded generators and a small property runner with shrinking.

#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "parsmash/fixtures.hpp"
#include "parsmash/kpar.hpp"

namespace gen {

using namespace parsmash;

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_); }
  int64_t between(int64_t lo, int64_t hi) { return std::uniform_int_distribution<int64_t>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// Small integer coefficients, each zero with probability `sparsity`.
inline Vector vector(Rng& r, const Field& f, std::size_t n, double sparsity = 0.5) {
  Vector v(n);
  for (auto& x : v)
    if (!r.coin(sparsity)) x = f.from_int(r.between(-3, 3));
  return v;
}

inline std::vector<std::size_t> word(Rng& r, std::size_t order, std::size_t max_len) {
  std::vector<std::size_t> w(r.below(max_len + 1));
  for (auto& g : w) g = r.below(order);
  return w;
}

inline Matrix matrix(Rng& r, const Field& f, std::size_t rows, std::size_t cols, double sparsity = 0.5) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!r.coin(sparsity)) m(i, j) = f.from_int(r.between(-3, 3));
  return m;
}

/// Submodule of m spun from a few random vectors.
inline Subspace submodule_subspace(Rng& r, const AlgModule& m, std::size_t count = 1) {
  std::vector<Vector> seeds;
  for (std::size_t i = 0; i < count; ++i) seeds.push_back(vector(r, m.field(), m.dim(), 0.7));
  return spin(m, seeds);
}

/// G acting on K^G by translating the coordinate idempotents: e_h -> e_{gh}.
inline GlobalAction translation_action(const Field& f, const FiniteGroup& g) {
  const std::size_t n = g.order();
  GlobalAction ga{g, product_algebra(f, n), {}};
  for (std::size_t x = 0; x < n; ++x) {
    SparseMatrix p(n, n);
    for (std::size_t h = 0; h < n; ++h) p.row(g.mul(x, h)).push_back({static_cast<uint32_t>(h), f.one()});
    ga.automorphism.push_back(std::move(p));
  }
  return ga;
}

/// Restriction of translation_action to a random nonzero coordinate idempotent.
inline RestrictedAction random_restricted_action(Rng& r, const Field& f, const FiniteGroup& g) {
  GlobalAction ga = translation_action(f, g);
  Vector idem(g.order());
  while (is_zero(idem))
    for (auto& x : idem) x = r.coin() ? f.one() : f.zero();
  return restrict_global_action(ga, idem);
}

/// A K_par G-module seen as a B-module along b -> b # e.
inline AlgModule as_b_module(const Kpar& k, const AlgModule& m) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < k.b_dim(); ++i) cols.push_back(embed_b(k, unit_vector(k.field(), k.b_dim(), i)));
  return restrict_scalars(m, k.b, SparseMatrix::from_columns(k.dim(), cols));
}

/// Inclusion of a subspace as a matrix whose columns are its canonical basis.
inline Matrix inclusion(const Subspace& s) { return Matrix::from_columns(s.ambient(), s.basis()); }

/// Vector-valued shrink candidates: drop each nonzero coordinate in turn.
inline std::vector<Vector> shrink_vector(const Vector& v) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      Vector w = v;
      w[i] = Scalar();
      out.push_back(std::move(w));
    }
  return out;
}

inline std::vector<std::vector<std::size_t>> shrink_word(const std::vector<std::size_t>& w) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto v = w;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(v));
  }
  return out;
}

template <class T>
struct Failure {
  std::size_t trial = 0;
  std::size_t shrinks = 0;
  T value;
};

/// Runs prop on `trials` generated values; on the first failure, greedily
/// replaces the value by a failing shrink candidate until none fails.
template <class T>
std::optional<Failure<T>> for_all(std::size_t trials, const std::function<T(Rng&)>& make,
                                  const std::function<bool(const T&)>& prop,
                                  const std::function<std::vector<T>(const T&)>& shrink, uint64_t seed = 1) {
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    T v = make(rng);
    if (prop(v)) continue;
    Failure<T> f{t, 0, std::move(v)};
    for (bool progress = true; progress && f.shrinks < 1000;) {
      progress = false;
      for (auto& c : shrink(f.value))
        if (!prop(c)) {
          f.value = std::move(c);
          ++f.shrinks;
          progress = true;
          break;
        }
    }
    return f;
  }
  return std::nullopt;
}

inline std::string show(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].to_string();
  os << ")";
  return os.str();
}

inline std::string show(const std::vector<std::size_t>& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  os << "]";
  return os.str();
}

}  // namespace gen
