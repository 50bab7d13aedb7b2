#include <doctest.h>

#include <bit>

#include "gen.hpp"
#include "oracles.hpp"
#include "parsmash/errors.hpp"
#include "parsmash/semilattice.hpp"

using namespace parsmash;

TEST_CASE("semilattice closure is validated") {
  CHECK_NOTHROW(make_semilattice(2, {0b01, 0b10, 0b11}));
  try {
    make_semilattice(3, {0b001, 0b010});
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == "NotClosed");
  }
  CHECK_THROWS_AS(make_semilattice(2, {0b100}), InputError);
  CHECK(make_semilattice(2, {0b11, 0b11}).size() == 1);
}

TEST_CASE("orthogonal basis of Boolean lattices matches the inclusion-exclusion formula") {
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    for (std::size_t n = 0; n <= 4; ++n) {
      Semilattice s = boolean_semilattice(n);
      auto w = orthogonal_idempotent_basis(f, s);
      REQUIRE(w.size() == s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        Vector expect(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) {
          uint64_t t = s.mask(i), u = s.mask(j);
          if ((t & u) != t) continue;
          expect[j] = std::popcount(u & ~t) % 2 ? f.neg(f.one()) : f.one();
        }
        CHECK(w[i] == expect);
      }
    }
  }
}

TEST_CASE("orthogonal basis of a non-Boolean lattice") {
  Field f = Field::rationals();
  // chain-like family closed under union, without the empty set
  Semilattice s = make_semilattice(3, {0b001, 0b011, 0b101, 0b111});
  AlgebraPtr a = semilattice_algebra(f, s);
  auto w = orthogonal_idempotent_basis(f, s);
  Vector total = zero_vector(s.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      Vector p = a->multiply(w[i], w[j]);
      CHECK(p == (i == j ? w[i] : zero_vector(s.size())));
    }
    total = add(f, total, w[i]);
  }
  CHECK(total == a->unit());
  CHECK(oracle::rank(f, w) == s.size());
  gen::Rng r(2);
  for (int t = 0; t < 20; ++t) {
    Vector x = gen::vector(r, f, s.size());
    Vector c = orthogonal_coordinates(f, s, x);
    Vector back = zero_vector(s.size());
    for (std::size_t i = 0; i < w.size(); ++i) axpy(f, back, c[i], w[i]);
    CHECK(back == x);
  }
}

TEST_CASE("principal generator of random ideals") {
  for (const Field& f : {Field::rationals(), Field::prime(2)}) {
    Semilattice s = boolean_semilattice(3);
    AlgebraPtr a = semilattice_algebra(f, s);
    gen::Rng r(17);
    for (int t = 0; t < 50; ++t) {
      std::vector<Vector> gens;
      for (std::size_t i = 0; i < 1 + r.below(3); ++i) gens.push_back(gen::vector(r, f, s.size(), 0.6));
      Vector u = principal_generator(f, s, gens);
      CHECK(a->multiply(u, u) == u);
      Subspace ideal = ideal_closure(*a, gens);
      for (const auto& x : ideal.basis()) CHECK(a->multiply(u, x) == x);
      CHECK(ideal.contains(u));
    }
  }
}
