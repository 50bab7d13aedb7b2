#pragma once

#include <vector>

#include "parsmash/algebra.hpp"

namespace parsmash {

struct HochschildOptions {
  std::size_t max_degree = 2;
  /// Cochains vanishing when an argument is 1; arguments then run over a
  /// complement of K1 in A.
  bool normalized = true;
  /// Largest allowed cochain space C^{max_degree + 1}.
  std::size_t max_cochain_dim = 250000;
};

// Bar cochains C^p = Hom(A^{(x)p}, M). A cochain is a vector indexed by
// (argument tuple) * dim M + m, tuples read as base-k numbers with the first
// argument most significant (k = dim A, or dim A - 1 when normalized).
struct HochschildComplex {
  AlgebraPtr algebra;
  std::size_t module_dim = 0;
  bool normalized = true;
  /// Basis of the argument space: A's basis, or the complement of K1.
  std::vector<std::size_t> arguments;
  std::vector<std::size_t> cochain_dims;
  /// differential[p] : C^p -> C^{p+1}
  std::vector<SparseMatrix> differential;
  std::vector<std::size_t> dims;
  /// Cocycles spanning a complement of the coboundaries.
  std::vector<std::vector<Vector>> representatives;
};

/// Errors: BudgetExceeded when C^{max_degree + 1} exceeds the budget.
HochschildComplex hochschild(const Bimodule& m, const HochschildOptions& options = {});
/// d^{p+1} d^p = 0 at every computed degree.
std::vector<Check> hochschild_checks(const HochschildComplex& c);

/// Kronecker product a (x) b.
SparseMatrix kronecker(const Field& field, const SparseMatrix& a, const SparseMatrix& b);

}  // namespace parsmash
