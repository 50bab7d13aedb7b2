#include "parsmash/fixtures.hpp"

namespace parsmash {

namespace {

SparseMatrix from_rows(const Field& f, std::size_t n, const std::vector<std::vector<int>>& rows) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = f.from_int(rows[r][c]);
  return SparseMatrix::from_dense(m);
}

}  // namespace

AlgebraPtr product_algebra(const Field& field, std::size_t n) {
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i) table[i * n + i] = {{static_cast<uint32_t>(i), field.one()}};
  AlgebraOptions opts;
  for (std::size_t i = 0; i < n; ++i) opts.labels.push_back(n == 2 ? (i == 0 ? "s" : "t") : "p" + std::to_string(i));
  Vector unit(n, field.one());
  return make_algebra_sparse(field, n, std::move(table), unit, std::move(opts));
}

PartialAction kk_partial_z2(const Field& field) {
  AlgebraPtr a = product_algebra(field, 2);
  FiniteGroup g = standard_group(GroupFamily::cyclic, 2);
  std::vector<Vector> u = {a->unit(), a->basis_element(1)};
  std::vector<SparseMatrix> alpha = {SparseMatrix::identity(field, 2), from_rows(field, 2, {{0, 0}, {0, 1}})};
  return make_partial_action(std::move(g), a, std::move(u), std::move(alpha));
}

GlobalAction kk_swap_z2(const Field& field) {
  AlgebraPtr a = product_algebra(field, 2);
  return GlobalAction{standard_group(GroupFamily::cyclic, 2), a,
                      {SparseMatrix::identity(field, 2), from_rows(field, 2, {{0, 1}, {1, 0}})}};
}

PartialAction kk_trivial_group(const Field& field) {
  AlgebraPtr a = product_algebra(field, 2);
  return make_partial_action(standard_group(GroupFamily::cyclic, 1), a, {a->unit()},
                             {SparseMatrix::identity(field, 2)});
}

RestrictedAction k3_restricted_z3(const Field& field) {
  AlgebraPtr a = product_algebra(field, 3);
  SparseMatrix shift = from_rows(field, 3, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  SparseMatrix shift2 = multiply(field, shift, shift);
  GlobalAction ga{standard_group(GroupFamily::cyclic, 3), a, {SparseMatrix::identity(field, 3), shift, shift2}};
  Vector idem = {field.one(), field.one(), field.zero()};
  return restrict_global_action(ga, idem);
}

GlobalAction dual_numbers_z2(const Field& field) {
  std::vector<SparseVec> table(4);
  table[0] = {{0, field.one()}};
  table[1] = {{1, field.one()}};
  table[2] = {{1, field.one()}};
  AlgebraOptions opts;
  opts.labels = {"1", "x"};
  AlgebraPtr a = make_algebra_sparse(field, 2, std::move(table), unit_vector(field, 2, 0), std::move(opts));
  Matrix sign = Matrix::identity(field, 2);
  sign(1, 1) = field.neg(field.one());
  return GlobalAction{standard_group(GroupFamily::cyclic, 2), a,
                      {SparseMatrix::identity(field, 2), SparseMatrix::from_dense(sign)}};
}

NonAssociativeExample non_associative_example(const Field& field) {
  // basis 1, x, y, xy
  const std::size_t n = 4;
  std::vector<SparseVec> table(n * n);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { table[i * n + j] = {{static_cast<uint32_t>(k), field.one()}}; };
  for (std::size_t i = 0; i < n; ++i) {
    set(0, i, i);
    set(i, 0, i);
  }
  set(1, 2, 3);
  set(2, 1, 3);
  AlgebraOptions opts;
  opts.labels = {"1", "x", "y", "xy"};
  AlgebraPtr a = make_algebra_sparse(field, n, std::move(table), unit_vector(field, n, 0), std::move(opts));

  Matrix alpha_g(n, n);
  alpha_g(3, 2) = field.one();
  alpha_g(2, 3) = field.one();
  NonAssociativeExample ex;
  ex.action.group = standard_group(GroupFamily::cyclic, 2);
  ex.action.algebra = a;
  ex.action.domains = {Subspace::whole(field, n), Subspace::span(field, n, {a->basis_element(2), a->basis_element(3)})};
  ex.action.alpha = {SparseMatrix::identity(field, n), SparseMatrix::from_dense(alpha_g)};
  ex.probe = {a->basis_element(1), a->basis_element(3)};
  return ex;
}

}  // namespace parsmash
