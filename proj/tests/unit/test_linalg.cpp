#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "oracles.hpp"
#include "parsmash/errors.hpp"
#include "parsmash/linalg.hpp"

using namespace parsmash;

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(7);
  CHECK(f.add(f.from_int(5), f.from_int(4)) == f.from_int(2));
  CHECK(f.mul(f.from_int(3), f.inv(f.from_int(3))).is_one());
  CHECK(f.from_int(-1) == f.from_int(6));
  CHECK(f.parse_scalar("1/2") == f.from_int(4));
  CHECK_THROWS_AS(f.parse_scalar("1/7"), InputError);
  CHECK_THROWS_AS(Field::prime(9), InputError);
}

TEST_CASE("rationals spill into GMP and come back") {
  Field q = Field::rationals();
  Scalar big = q.from_int(int64_t{1} << 61);
  Scalar sq = q.mul(big, big);
  CHECK_FALSE(sq.is_small());
  Scalar back = q.div(sq, big);
  CHECK(back.is_small());
  CHECK(back == big);
  CHECK(q.parse_scalar("-6/4").to_string() == "-3/2");
  CHECK(q.add(q.parse_scalar("1/3"), q.parse_scalar("2/3")).is_one());
}

TEST_CASE("field names") {
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK(Field::parse("F_7") == Field::prime(7));
  CHECK(Field::parse("GF(5)") == Field::prime(5));
  CHECK(Field::parse("F2") == Field::prime(2));
  CHECK_THROWS_AS(Field::parse("R"), InputError);
}

TEST_CASE("rank agrees with naive elimination on random matrices") {
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    auto fail = gen::for_all<Matrix>(
        200,
        [&](gen::Rng& r) {
          std::size_t rows = 1 + r.below(6), cols = 1 + r.below(6);
          return gen::matrix(r, f, rows, cols);
        },
        [&](const Matrix& m) {
          return rank(f, m) == oracle::rank(f, oracle::rows_of(SparseMatrix::from_dense(m)));
        },
        [](const Matrix&) { return std::vector<Matrix>{}; }, 11);
    CHECK_FALSE(fail.has_value());
  }
}

TEST_CASE("kernel basis is annihilated and has the complementary dimension") {
  Field f = Field::rationals();
  gen::Rng r(3);
  for (int t = 0; t < 100; ++t) {
    Matrix m = gen::matrix(r, f, 1 + r.below(5), 1 + r.below(6));
    auto ker = kernel_basis(f, m);
    CHECK(ker.size() + rank(f, m) == m.cols());
    for (const auto& v : ker) CHECK(is_zero(apply(f, m, v)));
  }
}

TEST_CASE("solve and inverse") {
  Field f = Field::rationals();
  gen::Rng r(5);
  for (int t = 0; t < 100; ++t) {
    Matrix m = gen::matrix(r, f, 4, 4, 0.3);
    Vector x = gen::vector(r, f, 4);
    Vector b = apply(f, m, x);
    auto sol = solve(f, m, b);
    REQUIRE(sol.has_value());
    CHECK(apply(f, m, *sol) == b);
    auto inv = inverse(f, m);
    CHECK(inv.has_value() == (rank(f, m) == 4));
    if (inv) CHECK(multiply(f, m, *inv) == Matrix::identity(f, 4));
  }
  Matrix z(2, 2);
  CHECK_FALSE(solve(f, z, {f.one(), f.zero()}).has_value());
  CHECK_THROWS_AS(solve(f, z, {f.one()}), DimensionError);
}

TEST_CASE("echelon form does not depend on insertion order") {
  Field f = Field::prime(3);
  gen::Rng r(8);
  for (int t = 0; t < 100; ++t) {
    std::vector<Vector> vs;
    for (int i = 0; i < 5; ++i) vs.push_back(gen::vector(r, f, 6));
    EchelonForm a(f, 6), b(f, 6);
    for (const auto& v : vs) a.insert(v);
    std::shuffle(vs.begin(), vs.end(), r.engine());
    for (const auto& v : vs) b.insert(v);
    CHECK(a.reduced_rows() == b.reduced_rows());
    CHECK(a.pivots() == b.pivots());
    for (const auto& v : vs) CHECK(b.contains(v));
  }
}

TEST_CASE("sum and intersection dimensions") {
  Field f = Field::rationals();
  gen::Rng r(9);
  for (int t = 0; t < 100; ++t) {
    std::vector<Vector> va, vb;
    for (std::size_t i = 0; i < 1 + r.below(4); ++i) va.push_back(gen::vector(r, f, 5));
    for (std::size_t i = 0; i < 1 + r.below(4); ++i) vb.push_back(gen::vector(r, f, 5));
    Subspace a = Subspace::span(f, 5, va), b = Subspace::span(f, 5, vb);
    Subspace s = subspace_sum(a, b), i = subspace_intersection(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(is_subspace_of(i, a));
    CHECK(is_subspace_of(i, b));
    CHECK(is_subspace_of(a, s));
    CHECK(quotient_dimension(s, a) == s.dim() - a.dim());
    for (const auto& v : i.basis()) CHECK(a.checked_coordinates(v).size() == a.dim());
  }
  Subspace line = Subspace::span(f, 2, {{f.one(), f.zero()}});
  CHECK_THROWS_AS(line.checked_coordinates({f.zero(), f.one()}), ValidationError);
}

TEST_CASE("sparse and dense products agree") {
  Field f = Field::prime(5);
  gen::Rng r(12);
  for (int t = 0; t < 50; ++t) {
    Matrix a = gen::matrix(r, f, 3, 4), b = gen::matrix(r, f, 4, 2);
    SparseMatrix sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
    CHECK(multiply(f, sa, sb).to_dense() == multiply(f, a, b));
    CHECK(transpose(sa).to_dense() == transpose(a));
  }
}
