#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parsmash/algebra.hpp"
#include "parsmash/group.hpp"

namespace parsmash {

// Partial action of G on A with domains D_g = u_g A for central idempotents
// u_g. alpha[g] is the total map a -> alpha_g(u_{g^-1} a), zero off the domain.
struct PartialAction {
  FiniteGroup group;
  AlgebraPtr algebra;
  std::vector<Vector> u;
  std::vector<SparseMatrix> alpha;

  const Field& field() const { return algebra->field(); }
  Vector apply_alpha(std::size_t g, const Vector& a) const { return apply(field(), alpha[g], a); }
};

enum class DomainCondition {
  /// alpha_g(u_{g^-1} u_h) = u_g u_{gh}
  equality,
  /// alpha_h(D_{h^-1} D_{(gh)^-1}) contains D_h D_{g^-1}
  containment,
};

struct PartialActionOptions {
  DomainCondition condition = DomainCondition::equality;
};

/// Every axiom family as a named check. Names double as error codes:
/// identity_axiom, central_idempotents, alpha_support, alpha_multiplicative,
/// alpha_bijective, domain_compatibility, composition.
std::vector<Check> partial_action_checks(const PartialAction& pa, const PartialActionOptions& options = {});
/// Validates and throws ValidationError naming the first violated axiom.
PartialAction make_partial_action(FiniteGroup group, AlgebraPtr algebra, std::vector<Vector> u,
                                  std::vector<SparseMatrix> alpha, const PartialActionOptions& options = {});
/// Domains given as subspaces; each must be an ideal with a central unit
/// idempotent (NoUnitIdeal otherwise). alpha[g] need only be correct on D_{g^-1}.
PartialAction partial_action_from_domains(FiniteGroup group, AlgebraPtr algebra, const std::vector<Subspace>& domains,
                                          const std::vector<SparseMatrix>& alpha,
                                          const PartialActionOptions& options = {});
/// Identity element of an ideal of a finite-dimensional algebra, if any.
std::optional<Vector> ideal_unit(const Algebra& a, const Subspace& ideal);

// A global action by algebra automorphisms.
struct GlobalAction {
  FiniteGroup group;
  AlgebraPtr algebra;
  std::vector<SparseMatrix> automorphism;
};

PartialAction global_partial_action(const GlobalAction& ga);

struct RestrictedAction {
  /// Canonical basis of B = 1_B A inside A.
  Subspace embedding;
  PartialAction action;
};

/// B = 1_B A with u_g = 1_B g(1_B) and beta_g the restriction of g.
RestrictedAction restrict_global_action(const GlobalAction& ga, const Vector& idempotent);

/// Checks the partial representation axioms for operators pi[g] on K^n:
/// pi(e) = id, pi(s)pi(t)pi(t^-1) = pi(st)pi(t^-1), pi(s^-1)pi(s)pi(t) = pi(s^-1)pi(st).
std::vector<Check> partial_rep_checks(const Field& field, const FiniteGroup& g, const std::vector<SparseMatrix>& pi);
/// Same axioms for elements of an algebra.
std::vector<Check> partial_rep_checks(const Algebra& a, const FiniteGroup& g, const std::vector<Vector>& pi);

// ---------------------------------------------------------------- smash

struct SmashAlgebra {
  PartialAction action;
  AlgebraPtr algebra;
  /// D_g with canonical basis (column space of right multiplication by u_g).
  std::vector<Subspace> domains;
  /// Basis element i is domains[g].basis()[k] # g for (g, k) = index[i].
  std::vector<std::pair<std::size_t, std::size_t>> index;
  std::vector<std::size_t> offset;
  /// a -> a u_e # e, a dim(smash) x dim(A) matrix.
  SparseMatrix phi0;
  /// u_g # g
  std::vector<Vector> pi0;

  /// Smash coordinates of a # g for a in D_g.
  Vector element(std::size_t g, const Vector& a) const;
  /// The D_g component of x, as an element of A.
  Vector component(const Vector& x, std::size_t g) const;
};

struct SmashOptions {
  bool check_associativity = true;
};

SmashAlgebra smash_product(const PartialAction& pa, const SmashOptions& options = {});
/// Product formula, general-formula agreement, phi0 an injective algebra map,
/// pi0 a partial representation.
std::vector<Check> smash_checks(const SmashAlgebra& s);
/// (a u_g # g)(b u_h # h) = a alpha_g(b u_h u_{g^-1}) u_{gh} # gh, on smash coordinates.
Vector smash_formula_product(const SmashAlgebra& s, const Vector& x, const Vector& y);

// Unvalidated data for the general product formula
// (a_g # g)(b_h # h) = alpha_g(alpha_{g^-1}(a_g) b_h) # gh.
struct RawPartialAction {
  FiniteGroup group;
  AlgebraPtr algebra;
  std::vector<Subspace> domains;
  std::vector<SparseMatrix> alpha;
};

/// Element of the raw smash space: one vector of A per group element.
using RawElement = std::vector<Vector>;

struct RawWitness {
  bool associative = true;
  std::string witness;
  /// Offending triple (for a probe: u, u, u) and both parenthesisations.
  RawElement x, y, z, left, right;
};

RawElement raw_product(const RawPartialAction& r, const RawElement& x, const RawElement& y);
std::string format_raw(const RawPartialAction& r, const RawElement& x);
/// Checks the probe first, if given, then every basis triple.
RawWitness raw_smash_witness(const RawPartialAction& r, const std::optional<RawElement>& probe = std::nullopt);

// --------------------------------------------------------- covariant pairs

struct CovariantPair {
  AlgModule phi;
  std::vector<SparseMatrix> pi;
};

std::vector<Check> covariant_pair_checks(const PartialAction& pa, const CovariantPair& cp);
/// Errors: CovarianceViolated, AxiomViolated.
AlgModule covariant_pair_to_module(const CovariantPair& cp, const SmashAlgebra& s);
CovariantPair module_to_covariant_pair(const AlgModule& m, const SmashAlgebra& s);

}  // namespace parsmash
