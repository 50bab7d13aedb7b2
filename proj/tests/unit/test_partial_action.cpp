#include <doctest.h>

#include "catalog.hpp"
#include "gen.hpp"
#include "parsmash/errors.hpp"
#include "parsmash/fixtures.hpp"

using namespace parsmash;

namespace {

std::vector<std::pair<std::string, PartialAction>> named_actions(const Field& f) {
  return {
      {"kk_partial", kk_partial_z2(f)},
      {"kk_swap", global_partial_action(kk_swap_z2(f))},
      {"kk_trivial", kk_trivial_group(f)},
      {"k3_restricted", k3_restricted_z3(f).action},
      {"dual_numbers", global_partial_action(dual_numbers_z2(f))},
  };
}

std::size_t domain_total(const SmashAlgebra& s) {
  std::size_t n = 0;
  for (const auto& d : s.domains) n += d.dim();
  return n;
}

}  // namespace

TEST_CASE("fixture partial actions satisfy every axiom and give associative smash products") {
  for (const Field& f : catalog::fields())
    for (const auto& [name, pa] : named_actions(f)) {
      CAPTURE(name);
      CAPTURE(f.name());
      CHECK(all_ok(partial_action_checks(pa)));
      PartialActionOptions weak;
      weak.condition = DomainCondition::containment;
      CHECK(all_ok(partial_action_checks(pa, weak)));
      SmashAlgebra s = smash_product(pa);
      CHECK(all_ok(smash_checks(s)));
      CHECK(associativity_check(*s.algebra).ok());
      CHECK(s.algebra->dim() == domain_total(s));
      CHECK(all_ok(partial_rep_checks(*s.algebra, pa.group, s.pi0)));
    }
}

TEST_CASE("partial smash of K x K with D_g = Kt has dimension 3") {
  SmashAlgebra s = smash_product(kk_partial_z2(Field::rationals()));
  CHECK(s.algebra->dim() == 3);
  CHECK(s.domains[0].dim() == 2);
  CHECK(s.domains[1].dim() == 1);
}

TEST_CASE("restrictions of translation actions are partial actions") {
  gen::Rng r(31);
  for (const Field& f : catalog::fields())
    for (const auto& [name, g] : catalog::groups()) {
      CAPTURE(name);
      for (int t = 0; t < 4; ++t) {
        RestrictedAction ra = gen::random_restricted_action(r, f, g);
        CHECK(all_ok(partial_action_checks(ra.action)));
        SmashAlgebra s = smash_product(ra.action);
        CHECK(all_ok(smash_checks(s)));
      }
    }
}

TEST_CASE("formula product agrees with the structure constants") {
  Field f = Field::prime(3);
  gen::Rng r(6);
  for (const auto& [name, pa] : named_actions(f)) {
    SmashAlgebra s = smash_product(pa);
    const std::size_t d = s.algebra->dim();
    for (int t = 0; t < 30; ++t) {
      Vector x = gen::vector(r, f, d), y = gen::vector(r, f, d);
      CHECK(smash_formula_product(s, x, y) == s.algebra->multiply(x, y));
    }
  }
}

TEST_CASE("broken axioms are reported by name") {
  Field f = Field::rationals();
  PartialAction pa = kk_partial_z2(f);
  // alpha_g sending t to 2t is not multiplicative
  auto alpha = pa.alpha;
  alpha[1] = SparseMatrix(2, 2);
  alpha[1].row(1).push_back({1, f.from_int(2)});
  try {
    make_partial_action(pa.group, pa.algebra, pa.u, alpha);
    FAIL("expected a violated axiom");
  } catch (const ValidationError& e) {
    CHECK(e.code() == "alpha_multiplicative");
  }
  auto u = pa.u;
  u[0] = Vector{f.one(), f.zero()};
  CHECK_THROWS_AS(make_partial_action(pa.group, pa.algebra, u, pa.alpha), ValidationError);
}

TEST_CASE("non-associative example reproduces the witness exactly") {
  for (const Field& f : catalog::fields()) {
    NonAssociativeExample ex = non_associative_example(f);
    RawWitness w = raw_smash_witness(ex.action, ex.probe);
    CHECK_FALSE(w.associative);
    CHECK(w.witness == "(uu)u = 0, u(uu) = xyδ_g");
    CHECK(format_raw(ex.action, w.left) == "0");
    CHECK(format_raw(ex.action, w.right) == "xyδ_g");
    RawWitness scan = raw_smash_witness(ex.action);
    CHECK_FALSE(scan.associative);
    try {
      partial_action_from_domains(ex.action.group, ex.action.algebra, ex.action.domains, ex.action.alpha);
      FAIL("expected NoUnitIdeal");
    } catch (const ValidationError& e) {
      CHECK(e.code() == "NoUnitIdeal");
    }
  }
}

TEST_CASE("a genuine partial action is associative on every raw triple") {
  Field f = Field::rationals();
  PartialAction pa = kk_partial_z2(f);
  SmashAlgebra s = smash_product(pa);
  RawPartialAction raw{pa.group, pa.algebra, s.domains, pa.alpha};
  CHECK(raw_smash_witness(raw).associative);
}

TEST_CASE("covariant pairs and smash modules correspond") {
  for (const Field& f : catalog::fields())
    for (const auto& [name, pa] : named_actions(f)) {
      CAPTURE(name);
      SmashAlgebra s = smash_product(pa);
      AlgModule reg = regular_module(s.algebra);
      CovariantPair cp = module_to_covariant_pair(reg, s);
      CHECK(all_ok(covariant_pair_checks(pa, cp)));
      AlgModule back = covariant_pair_to_module(cp, s);
      CHECK(back.actions() == reg.actions());
    }
}

TEST_CASE("ideal units") {
  Field f = Field::rationals();
  AlgebraPtr k3 = product_algebra(f, 3);
  Subspace two = Subspace::span(f, 3, {unit_vector(f, 3, 0), unit_vector(f, 3, 2)});
  auto u = ideal_unit(*k3, two);
  REQUIRE(u.has_value());
  CHECK(*u == Vector{f.one(), f.zero(), f.one()});
  NonAssociativeExample ex = non_associative_example(f);
  CHECK_FALSE(ideal_unit(*ex.action.algebra, ex.action.domains[1]).has_value());
}
