#pragma once

#include <optional>
#include <vector>

#include "parsmash/kpar.hpp"
#include "parsmash/resolution.hpp"

namespace parsmash {

/// Common kernel of rho([g]) - rho(e_g) over g in G.
Subspace partial_invariants(const Kpar& k, const AlgModule& m);
/// Hom(B, M) -> M, f -> f(1), lands in the invariants and is bijective onto them.
Check invariants_hom_iso_check(const Kpar& k, const AlgModule& m);

// A B-linear map delta on K_par G is fixed by the values m_g = delta([g]),
// since delta(e_T # g) = e_T m_g. Derivations are stored through these
// parameters, stacked as a vector in M^{|G|} with block g holding m_g.
struct DerivationSpace {
  std::size_t module_dim = 0;
  Subspace der;
  Subspace inner;
  std::size_t outer_dim() const { return der.dim() - inner.dim(); }
};

DerivationSpace partial_derivations(const Kpar& k, const AlgModule& m);
/// dim M x dim K_par G matrix of the B-linear map with the given parameters.
Matrix derivation_matrix(const Kpar& k, const AlgModule& m, const Vector& params);
/// Parameters of the inner derivation ([g]m - e_g m)_g.
Vector inner_parameters(const Kpar& k, const AlgModule& m, const Vector& v);
/// Leibniz rule and B-linearity on every pair of basis elements.
bool is_partial_derivation(const Kpar& k, const AlgModule& m, const Matrix& delta);
/// Every basis derivation satisfies the literal axioms; inner ones lie in Der.
std::vector<Check> derivation_checks(const Kpar& k, const AlgModule& m, const DerivationSpace& d);

/// Hom(IG, M) -> Der, f -> (x -> f(x - eps(x) 1)), is a bijection.
Check hom_ig_check(const Kpar& k, const AlgModule& m);

enum class CheckMode { strict, warn };

struct HparOptions {
  std::size_t max_degree = 3;
  CheckMode mode = CheckMode::strict;
  bool cross_checks = true;
  /// Recompute every degree from a second resolution scanned in shuffled
  /// order. Off by default: shuffled scans give much larger ranks.
  bool independence_check = false;
  ResolutionOptions resolution;
};

struct DegreeReport {
  std::size_t degree = 0;
  std::size_t dim = 0;
  /// Cocycles in M^{n_degree}.
  std::vector<Vector> representatives;
};

struct CohomologyReport {
  std::vector<DegreeReport> degrees;
  std::vector<std::size_t> resolution_ranks;
  std::size_t invariants_dim = 0;
  std::size_t der_dim = 0;
  std::size_t inner_dim = 0;
  std::vector<Check> checks;

  bool ok() const { return all_ok(checks); }
};

// Computes H^n_par(G, M) = Ext^n(B, M) for several coefficient modules over
// the same K_par G, reusing the resolutions of B and IG.
class PartialCohomology {
 public:
  explicit PartialCohomology(const Kpar& k, HparOptions options = {});

  const Resolution& b_resolution();
  const Resolution& ig_resolution();
  CohomologyReport compute(const AlgModule& m);

 private:
  const Resolution& alternate_resolution();

  const Kpar& k_;
  HparOptions options_;
  std::optional<Resolution> b_, b_alt_, ig_;
};

CohomologyReport hpar(const Kpar& k, const AlgModule& m, const HparOptions& options = {});

}  // namespace parsmash
