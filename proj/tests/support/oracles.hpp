#pragma once

// Reference computations for the tests: dense naive elimination and literal
// axiom systems, sharing nothing with the library's echelon, kernel or
// hom-space code.

#include <vector>

#include "parsmash/kpar.hpp"

namespace oracle {

using namespace parsmash;
using Rows = std::vector<Vector>;

std::size_t rank(const Field& f, Rows rows);
Rows rows_of(const SparseMatrix& m);
/// Columns of m as vectors.
Rows columns_of(const Matrix& m);
bool in_span(const Field& f, const Rows& rows, const Vector& v);

/// Number of pairs (g, T) with e, g in T, T a subset of a group of this order.
std::size_t kpar_dim_by_enumeration(std::size_t order);

/// dim Hom_A(M, N) from F rho_M(e_i) = rho_N(e_i) F for every basis element.
std::size_t hom_dim(const AlgModule& m, const AlgModule& n);

/// Unknowns delta(x) for every basis x of K_par G; B-linearity and
/// delta(xy) = x delta(y) + delta(x eps(y)) on all basis pairs.
struct DerDims {
  std::size_t der = 0;
  std::size_t inner = 0;
};
DerDims partial_derivations(const Kpar& k, const AlgModule& m);

/// dim {m : a m = m a for every basis a}.
std::size_t center_dim(const Bimodule& m);

/// dim H^0 and H^1 of A with coefficients M: derivations D(ab) = a D(b) + D(a) b
/// modulo inner ones.
struct LowHochschild {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
};
LowHochschild hochschild_low(const Bimodule& m);

/// dim X (x)_B M with B acting on M through e_T -> (prod_{s in T} u_s) # e,
/// with balancing relations over the whole basis of B.
std::size_t tensor_dim(const Kpar& k, const PartialAction& pa, const SparseMatrix& phi0, const AlgModule& x,
                       const Bimodule& m);

}  // namespace oracle
