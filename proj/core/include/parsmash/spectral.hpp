#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parsmash/cohomology.hpp"
#include "parsmash/hochschild.hpp"
#include "parsmash/kpar.hpp"

namespace parsmash {

// A partial action together with its smash product S = A x G and the
// partial group algebra of the same group.
struct SmashContext {
  PartialAction action;
  SmashAlgebra smash;
  Kpar kpar;

  const AlgebraPtr& a() const { return action.algebra; }
  const AlgebraPtr& s() const { return smash.algebra; }
  const Field& field() const { return action.field(); }
};

SmashContext make_smash_context(const PartialAction& pa, const KparOptions& options = {});

/// S-bimodule restricted to an A-bimodule along phi0 on both sides.
Bimodule restrict_to_a(const SmashContext& c, const Bimodule& m);
/// Dual space with (s f t)(x) = f(t x s).
Bimodule dual_bimodule(const Bimodule& m);

// F1(M) = Hom_{A^e}(A, M) with pi(g)(f) = L(u_g # g) R(u_{g^-1} # g^-1) f alpha_{g^-1}(u_g -).
// Coordinates are taken in the canonical basis hom.basis.
struct F1Module {
  HomSpace hom;
  /// hom.basis flattened row-major; used for coordinates.
  Subspace flat;
  std::vector<SparseMatrix> pi;
  AlgModule module;
  std::vector<Check> checks;

  /// f_k(1_A) for every basis map.
  std::vector<Vector> values_at_one;
};

/// Errors: AxiomViolated when some pi(g) leaves Hom_{A^e}(A, M) or the
/// operators are not a partial representation.
F1Module f1(const SmashContext& c, const Bimodule& m);
/// F2(X) = Hom(B, X), identified with the partial invariants.
Subspace f2(const Kpar& k, const AlgModule& x);
/// F(M) = Hom_{S^e}(S, M), identified with the centralizer of S in M.
Subspace f_functor(const Bimodule& m);

struct FactorizationReport {
  std::size_t f_dim = 0;
  std::size_t f2f1_dim = 0;
  std::vector<Check> checks;
};

/// F(M) = F2(F1(M)) through v -> sum_k v_k f_k(1_A).
FactorizationReport factorization_check(const SmashContext& c, const Bimodule& m);

// X (x)_B M for a K_par G-module X and an S-bimodule M, with B acting on M
// through e_s -> u_s # e. Vectors of X (x) M are indexed x * dim M + m; the
// quotient has the classes of the unit vectors at the non-pivot coordinates
// of `relations` as its basis.
struct TensorOverB {
  std::size_t x_dim = 0;
  std::size_t m_dim = 0;
  Subspace relations;
  std::vector<std::size_t> basis;
  Bimodule bimodule;
  std::vector<Check> checks;

  std::size_t dim() const { return basis.size(); }
  /// Class of a vector of X (x) M in quotient coordinates.
  Vector project(const Vector& v) const;
};

TensorOverB tensor_over_b(const SmashContext& c, const AlgModule& x, const Bimodule& m);

struct GammaLambdaReport {
  std::size_t hom_f1_dim = 0;
  std::size_t hom_tensor_dim = 0;
  std::vector<Check> checks;
};

/// Hom_{K_par G}(X, F1(M)) and Hom_{S^e}(X (x)_B S, M) with the maps
/// Gamma(H)(x (x) s) = H(x)(1) s and Lambda(T)(x)(a) = T(x (x) a # e).
GammaLambdaReport gamma_lambda_check(const SmashContext& c, const AlgModule& x, const Bimodule& m);

struct FlatnessReport {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  std::vector<Check> checks;
};

/// id_X (x) f : X (x)_B Y -> X (x)_B Y2 for B-modules and an injective
/// B-map f (dim Y2 x dim Y). Errors: NotInjective.
FlatnessReport flatness_check(const AlgModule& x, const AlgModule& y, const AlgModule& y2, const Matrix& f);
/// f (x) id : Y (x)_B S -> Y2 (x)_B S for an injective K_par G-map f.
FlatnessReport exactness_check(const SmashContext& c, const AlgModule& y, const AlgModule& y2, const Matrix& f);

// Candidate K_par G-structure on H^p(A, M): on unnormalized cochains,
// pi(g)(f)(a_1, ..., a_p) = L(u_g # g) R(u_{g^-1} # g^-1) f(alpha_{g^-1}(u_g a_1), ...).
// Its validity is verified on each instance.
struct CochainAction {
  std::size_t degree = 0;
  HochschildComplex complex;
  std::vector<SparseMatrix> cochain_pi;
  /// Operators induced on H^p in the basis of complex.representatives[p].
  std::vector<SparseMatrix> cohomology_pi;
  std::vector<Check> checks;
  /// Set when the lift verified.
  std::optional<AlgModule> module;
  bool lifted() const { return module.has_value(); }
};

/// A failed verification is reported in checks with a LiftFailed witness and
/// leaves module empty.
CochainAction cochain_partial_action(const SmashContext& c, const Bimodule& m, std::size_t degree,
                                     std::size_t max_cochain_dim = 250000);
/// At degree 0, f -> f(1) intertwines the F1 operators with the cochain ones.
Check cochain_f1_agreement(const SmashContext& c, const Bimodule& m, const F1Module& f, const CochainAction& a);

struct SpectralBounds {
  /// Hochschild degrees of S computed: 0..total_degree.
  std::size_t total_degree = 2;
  /// Hochschild degrees of A computed: 0..a_degree.
  std::size_t a_degree = 2;
  /// Partial cohomology degrees: 0..partial_degree.
  std::size_t partial_degree = 2;
  std::size_t max_cochain_dim = 250000;
  CheckMode mode = CheckMode::strict;
};

struct SpectralReport {
  std::size_t f_dim = 0;
  /// dim H^n(S, M)
  std::vector<std::size_t> total;
  /// dim H^p(A, M)
  std::vector<std::size_t> a_side;
  /// e2[p][q] = dim H^q_par(G, H^p(A, M)) when the structure is available.
  std::vector<std::vector<std::optional<std::size_t>>> e2;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool ok() const { return all_ok(checks); }
};

SpectralReport spectral_low_degree(const SmashContext& c, const Bimodule& m, const SpectralBounds& bounds = {});

}  // namespace parsmash
