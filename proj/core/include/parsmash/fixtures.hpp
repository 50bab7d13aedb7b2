#pragma once

#include "parsmash/partial_action.hpp"

namespace parsmash {

// Small named examples used by the tests, the acceptance driver and the
// benchmarks.

/// K^n with basis the orthogonal idempotents; labels s, t for n = 2, else p0, p1, ...
AlgebraPtr product_algebra(const Field& field, std::size_t n);

/// A = K x K = Ks + Kt, G = Z2 = {1, g}, D_g = Kt, alpha_g = id on Kt.
PartialAction kk_partial_z2(const Field& field);
/// Z2 swapping the two factors of K x K.
GlobalAction kk_swap_z2(const Field& field);
/// The trivial group acting on K x K.
PartialAction kk_trivial_group(const Field& field);
/// Z3 cyclically permuting the factors of K^3, restricted to the ideal K^2 x 0.
RestrictedAction k3_restricted_z3(const Field& field);

/// Z2 acting on K[x]/(x^2) by x -> -x.
GlobalAction dual_numbers_z2(const Field& field);

struct NonAssociativeExample {
  RawPartialAction action;
  /// x delta_1 + xy delta_g
  RawElement probe;
};

/// A = K[x,y]/(x^2, y^2), G = Z2, D_g = Ay, alpha_g(y) = xy, alpha_g(xy) = y.
NonAssociativeExample non_associative_example(const Field& field);

}  // namespace parsmash
