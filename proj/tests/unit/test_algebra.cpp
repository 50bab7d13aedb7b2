#include <doctest.h>

#include "gen.hpp"
#include "oracles.hpp"
#include "parsmash/errors.hpp"
#include "parsmash/fixtures.hpp"

using namespace parsmash;

namespace {

// K[x]/(x^n) with basis 1, x, ..., x^{n-1}
AlgebraPtr truncated_polynomials(const Field& f, std::size_t n) {
  std::vector<std::vector<Vector>> s(n, std::vector<Vector>(n, zero_vector(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + i < n; ++j) s[i][j] = unit_vector(f, n, i + j);
  return make_algebra(f, n, s, unit_vector(f, n, 0));
}

// upper triangular 2x2 matrices: e11, e12, e22
AlgebraPtr upper_triangular(const Field& f) {
  std::vector<std::vector<Vector>> s(3, std::vector<Vector>(3, zero_vector(3)));
  s[0][0] = unit_vector(f, 3, 0);
  s[0][1] = unit_vector(f, 3, 1);
  s[1][2] = unit_vector(f, 3, 1);
  s[2][2] = unit_vector(f, 3, 2);
  return make_algebra(f, 3, s, add(f, unit_vector(f, 3, 0), unit_vector(f, 3, 2)));
}

std::string code_of(auto&& thunk) {
  try {
    thunk();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("structure constants are validated") {
  Field f = Field::rationals();
  std::vector<std::vector<Vector>> s(2, std::vector<Vector>(2, zero_vector(2)));
  s[0][0] = unit_vector(f, 2, 0);
  s[0][1] = unit_vector(f, 2, 1);
  s[1][0] = unit_vector(f, 2, 1);
  s[1][1] = unit_vector(f, 2, 0);
  CHECK_NOTHROW(make_algebra(f, 2, s, unit_vector(f, 2, 0)));
  CHECK(code_of([&] { make_algebra(f, 2, s, unit_vector(f, 2, 1)); }) == "UnitLaw");
  // x 1 = 1
  s[1][0] = unit_vector(f, 2, 0);
  CHECK(code_of([&] { make_algebra(f, 2, s, unit_vector(f, 2, 0)); }) == "UnitLaw");
}

TEST_CASE("associativity check names a witness triple") {
  Field f = Field::prime(3);
  // basis 1, a, b with a a = b and every other product of a, b zero except b a = a
  std::vector<std::vector<Vector>> s(3, std::vector<Vector>(3, zero_vector(3)));
  for (std::size_t i = 0; i < 3; ++i) s[0][i] = s[i][0] = unit_vector(f, 3, i);
  s[1][1] = unit_vector(f, 3, 2);
  s[2][1] = unit_vector(f, 3, 1);
  AlgebraOptions o;
  o.check_associativity = false;
  AlgebraPtr a = make_algebra(f, 3, s, unit_vector(f, 3, 0), o);
  Check c = associativity_check(*a);
  CHECK_FALSE(c.ok());
  CHECK_FALSE(c.witness.empty());
}

TEST_CASE("regular, zero, sub and quotient modules satisfy the module axioms") {
  for (const Field& f : {Field::rationals(), Field::prime(2)}) {
    AlgebraPtr a = upper_triangular(f);
    CHECK(all_ok(module_checks(regular_module(a))));
    CHECK(all_ok(module_checks(zero_module(a))));
    gen::Rng r(4);
    for (int t = 0; t < 30; ++t) {
      AlgModule reg = regular_module(a);
      Subspace s = gen::submodule_subspace(r, reg);
      AlgModule sub = submodule(reg, s), quo = quotient_module(reg, s);
      CHECK(all_ok(module_checks(sub)));
      CHECK(all_ok(module_checks(quo)));
      CHECK(sub.dim() + quo.dim() == reg.dim());
    }
  }
}

TEST_CASE("module validation names the failure") {
  Field f = Field::rationals();
  AlgebraPtr a = truncated_polynomials(f, 2);
  // x acting invertibly although x^2 = 0
  std::vector<SparseMatrix> act = {SparseMatrix::identity(f, 1), SparseMatrix::identity(f, 1)};
  CHECK(code_of([&] { make_module(a, 1, act); }) == "ActionNotMultiplicative");
  act[0] = SparseMatrix(1, 1);
  act[1] = SparseMatrix(1, 1);
  CHECK(code_of([&] { make_module(a, 1, act); }) == "UnitLaw");
}

TEST_CASE("hom space dimension agrees with the literal intertwiner system") {
  for (const Field& f : {Field::rationals(), Field::prime(2)}) {
    CAPTURE(f.name());
    std::vector<AlgebraPtr> algebras = {upper_triangular(f), truncated_polynomials(f, 3), product_algebra(f, 3)};
    gen::Rng r(21);
    for (const auto& a : algebras) {
      AlgModule reg = regular_module(a);
      std::vector<AlgModule> mods = {reg, zero_module(a)};
      for (int t = 0; t < 4; ++t) {
        Subspace s = gen::submodule_subspace(r, reg);
        mods.push_back(submodule(reg, s));
        mods.push_back(quotient_module(reg, s));
      }
      for (const auto& m : mods)
        for (const auto& n : mods) {
          std::size_t expect = oracle::hom_dim(m, n);
          HomSpace direct = hom_space(m, n, HomMethod::direct);
          HomSpace pres = hom_space(m, n, HomMethod::presentation);
          CHECK(direct.dim() == expect);
          CHECK(pres.dim() == expect);
          CHECK(hom_dimension(m, n) == expect);
          CHECK(direct.basis == pres.basis);
          for (const auto& h : direct.basis) CHECK(is_module_map(m, n, h));
        }
    }
  }
}

TEST_CASE("greedy generators generate") {
  Field f = Field::prime(3);
  AlgModule reg = regular_module(upper_triangular(f));
  auto gens = greedy_generators(reg);
  CHECK(spin(reg, gens).dim() == reg.dim());
  // e11, e12, e22 each enlarge the submodule spanned before them
  CHECK(gens.size() == 3);
  gens.pop_back();
  CHECK(spin(reg, gens).dim() < reg.dim());
}

TEST_CASE("bimodules: regular, restriction and centralizer") {
  for (const Field& f : {Field::rationals(), Field::prime(2)}) {
    for (const auto& a : {upper_triangular(f), truncated_polynomials(f, 3), product_algebra(f, 2)}) {
      Bimodule reg = regular_bimodule(a);
      CHECK(all_ok(bimodule_checks(reg)));
      CHECK(centralizer(reg).dim() == oracle::center_dim(reg));
      SparseMatrix id = SparseMatrix::identity(f, a->dim());
      Bimodule back = restrict_bimodule(reg, a, id, a, id);
      CHECK(back.lefts() == reg.lefts());
      CHECK(back.rights() == reg.rights());
      for (const auto& h : bimodule_hom_space(reg, reg).basis) CHECK(h.rows() == a->dim());
      CHECK(bimodule_hom_space(reg, reg).dim() == oracle::center_dim(reg));
    }
  }
  Field q = Field::rationals();
  AlgebraPtr a = truncated_polynomials(q, 2);
  // left x acting by 1, right x acting by 0 on a line: not a module at all
  std::vector<SparseMatrix> l = {SparseMatrix::identity(q, 1), SparseMatrix::identity(q, 1)};
  std::vector<SparseMatrix> rr = {SparseMatrix::identity(q, 1), SparseMatrix(1, 1)};
  CHECK(code_of([&] { make_bimodule(a, a, 1, l, rr); }) == "ActionNotMultiplicative");
}

TEST_CASE("central idempotents") {
  Field f = Field::rationals();
  AlgebraPtr k3 = product_algebra(f, 3);
  CHECK(central_idempotent_check(*k3, {f.one(), f.one(), f.zero()}).ok());
  CHECK_FALSE(central_idempotent_check(*k3, {f.from_int(2), f.zero(), f.zero()}).ok());
  AlgebraPtr t = upper_triangular(f);
  CHECK_FALSE(central_idempotent_check(*t, unit_vector(f, 3, 0)).ok());
}
