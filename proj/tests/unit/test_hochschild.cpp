#include <doctest.h>

#include "gen.hpp"
#include "oracles.hpp"
#include "parsmash/errors.hpp"
#include "parsmash/fixtures.hpp"
#include "parsmash/hochschild.hpp"
#include "parsmash/spectral.hpp"

using namespace parsmash;

namespace {

AlgebraPtr truncated_polynomials(const Field& f, std::size_t n) {
  std::vector<std::vector<Vector>> s(n, std::vector<Vector>(n, zero_vector(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + i < n; ++j) s[i][j] = unit_vector(f, n, i + j);
  return make_algebra(f, n, s, unit_vector(f, n, 0));
}

AlgebraPtr upper_triangular(const Field& f) {
  std::vector<std::vector<Vector>> s(3, std::vector<Vector>(3, zero_vector(3)));
  s[0][0] = unit_vector(f, 3, 0);
  s[0][1] = unit_vector(f, 3, 1);
  s[1][2] = unit_vector(f, 3, 1);
  s[2][2] = unit_vector(f, 3, 2);
  return make_algebra(f, 3, s, add(f, unit_vector(f, 3, 0), unit_vector(f, 3, 2)));
}

Bimodule zero_bimodule(const AlgebraPtr& a) {
  return Bimodule(a, a, 0, std::vector<SparseMatrix>(a->dim(), SparseMatrix(0, 0)),
                  std::vector<SparseMatrix>(a->dim(), SparseMatrix(0, 0)));
}

}  // namespace

TEST_CASE("A = K: only H^0") {
  for (const Field& f : {Field::rationals(), Field::prime(2)}) {
    HochschildComplex c = hochschild(regular_bimodule(product_algebra(f, 1)));
    CHECK(c.dims == std::vector<std::size_t>{1, 0, 0});
  }
}

TEST_CASE("separable K x K has H^0 = 2 and nothing above") {
  for (const Field& f : {Field::rationals(), Field::prime(2)}) {
    HochschildComplex c = hochschild(regular_bimodule(product_algebra(f, 2)));
    CHECK(c.dims == std::vector<std::size_t>{2, 0, 0});
    CHECK(all_ok(hochschild_checks(c)));
  }
}

TEST_CASE("dual numbers over F2 have cohomology in every degree") {
  Field f = Field::prime(2);
  HochschildComplex c = hochschild(regular_bimodule(truncated_polynomials(f, 2)));
  CHECK(c.dims == std::vector<std::size_t>{2, 2, 2});
  HochschildComplex q = hochschild(regular_bimodule(truncated_polynomials(Field::rationals(), 2)));
  CHECK(q.dims[0] == 2);
  CHECK(q.dims[1] == 1);
}

TEST_CASE("H^0 and H^1 agree with the derivation oracle") {
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    std::vector<AlgebraPtr> algs = {truncated_polynomials(f, 2), truncated_polynomials(f, 3), upper_triangular(f),
                                    product_algebra(f, 3), global_partial_action(dual_numbers_z2(f)).algebra};
    for (const auto& a : algs) {
      std::vector<Bimodule> coeffs = {regular_bimodule(a), dual_bimodule(regular_bimodule(a)), zero_bimodule(a)};
      for (const auto& m : coeffs) {
        HochschildComplex c = hochschild(m);
        oracle::LowHochschild o = oracle::hochschild_low(m);
        CHECK(c.dims[0] == o.h0);
        CHECK(c.dims[1] == o.h1);
        CHECK(all_ok(hochschild_checks(c)));
      }
    }
  }
}

TEST_CASE("normalized and unnormalized complexes have the same cohomology") {
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    std::vector<AlgebraPtr> algs = {truncated_polynomials(f, 2), upper_triangular(f), product_algebra(f, 2),
                                    smash_product(kk_partial_z2(f)).algebra};
    for (const auto& a : algs) {
      Bimodule m = regular_bimodule(a);
      HochschildOptions n, u;
      u.normalized = false;
      HochschildComplex cn = hochschild(m, n), cu = hochschild(m, u);
      CHECK(cn.dims == cu.dims);
      CHECK(all_ok(hochschild_checks(cu)));
      CHECK(cn.arguments.size() + 1 == a->dim());
      CHECK(cu.arguments.size() == a->dim());
    }
  }
}

TEST_CASE("representatives are cocycles") {
  Field f = Field::prime(2);
  HochschildComplex c = hochschild(regular_bimodule(truncated_polynomials(f, 2)));
  for (std::size_t p = 0; p < c.representatives.size(); ++p) {
    CHECK(c.representatives[p].size() == c.dims[p]);
    for (const auto& v : c.representatives[p]) CHECK(is_zero(apply(f, c.differential[p], v)));
  }
}

TEST_CASE("cochain budget") {
  Field f = Field::rationals();
  HochschildOptions o;
  o.max_degree = 4;
  o.max_cochain_dim = 50;
  CHECK_THROWS_AS(hochschild(regular_bimodule(upper_triangular(f)), o), BudgetExceeded);
}

TEST_CASE("kronecker product") {
  Field f = Field::prime(5);
  gen::Rng r(4);
  Matrix a = gen::matrix(r, f, 2, 3), b = gen::matrix(r, f, 3, 2);
  Matrix k = kronecker(f, SparseMatrix::from_dense(a), SparseMatrix::from_dense(b)).to_dense();
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 2; ++q) CHECK(k(i * 3 + p, j * 2 + q) == f.mul(a(i, j), b(p, q)));
}
