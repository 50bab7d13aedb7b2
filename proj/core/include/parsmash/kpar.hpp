#pragma once

#include <cstdint>
#include <vector>

#include "parsmash/partial_action.hpp"
#include "parsmash/semilattice.hpp"

namespace parsmash {

// Subsets T of G with e in T are stored as masks over G \ {e}: bit g-1 set
// iff g is in T. The mask value is also the index of e_T in the basis of B.
inline uint64_t element_bit(std::size_t g) { return g == 0 ? 0 : uint64_t{1} << (g - 1); }

struct KparOptions {
  std::size_t max_order = 6;
  /// Run associativity and the other structural checks while building.
  bool verify = true;
};

// B, the partial action beta, and the partial group algebra B x_beta G.
struct Kpar {
  FiniteGroup group;
  Semilattice lattice;
  AlgebraPtr b;
  PartialAction beta;
  SmashAlgebra smash;
  /// [g] = e_{e,g} # g in algebra coordinates
  std::vector<Vector> bracket;
  /// e_g = e_{e,g} as an element of B
  std::vector<Vector> e;
  /// algebra basis index -> (g, mask of T)
  std::vector<std::pair<std::size_t, uint64_t>> pairs;
  /// slot[g][mask] = index of e_T # g, or dim() when g is not in T
  std::vector<std::vector<std::size_t>> slot;

  const AlgebraPtr& algebra() const noexcept { return smash.algebra; }
  const Field& field() const { return b->field(); }
  std::size_t dim() const { return smash.algebra->dim(); }
  std::size_t b_dim() const { return b->dim(); }
  /// Index of e_T # g; T must contain e and g.
  std::size_t index_of(std::size_t g, uint64_t mask) const;
  /// T -> gT on masks (T must contain g^-1 for the result to be a valid T).
  uint64_t translate(std::size_t g, uint64_t mask) const;
};

/// dim = 2^{|G|-1}; basis e_T indexed by mask.
AlgebraPtr build_b(const Field& field, const FiniteGroup& g);
/// beta_g(e_T) = e_{gT} for T containing g^-1, zero otherwise.
PartialAction beta_action(const FiniteGroup& g, const AlgebraPtr& b);
/// Throws BudgetExceeded when |G| > options.max_order.
Kpar build_kpar(const Field& field, const FiniteGroup& g, const KparOptions& options = {});
/// 2^{|G|-2}(|G|+1) for |G| >= 2, 1 for the trivial group.
std::size_t kpar_dimension_formula(std::size_t order);

/// e_T # (g_1...g_n) with T = {e, g_1, g_1 g_2, ..., g_1...g_n}.
Vector word_to_element(const Kpar& k, const std::vector<std::size_t>& word);
/// [g] e_h = e_{gh} [g]
bool commutation_check(const Kpar& k, std::size_t g, std::size_t h);
/// x -> [g] x [g^-1] on B; throws if the image leaves B # e.
SparseMatrix conj_rep(const Kpar& k, std::size_t g);

/// B -> K_par G, b -> b # e
Vector embed_b(const Kpar& k, const Vector& b);
/// epsilon(e_T # g) = e_T, a dim(B) x dim(K_par G) matrix.
SparseMatrix epsilon_matrix(const Kpar& k);
Vector epsilon(const Kpar& k, const Vector& x);
/// {e_T # g - e_T # e : g in T, g != e}
std::vector<Vector> ig_spanning_set(const Kpar& k);
/// Canonical basis of ker epsilon.
Subspace ig_subspace(const Kpar& k);

/// Structural invariants of B, beta, K_par G, epsilon and IG.
std::vector<Check> kpar_checks(const Kpar& k);

// ------------------------------------------------------------- modules

/// B with x . b = epsilon(x (b # e)).
AlgModule b_module(const Kpar& k);
AlgModule ig_module(const Kpar& k);
/// Submodule of B generated by e_g B for the first non-identity g (all of B
/// for the trivial group).
AlgModule dg_module(const Kpar& k);
Subspace dg_subspace(const Kpar& k);
/// Regular module modulo the cyclic submodule of a random sparse element.
AlgModule random_quotient_module(const Kpar& k, uint64_t seed);

/// Errors: AxiomViolated (witness s,t) when pi is not a partial representation.
AlgModule partial_rep_to_module(const Kpar& k, const std::vector<SparseMatrix>& pi);
std::vector<SparseMatrix> module_to_partial_rep(const Kpar& k, const AlgModule& m);

}  // namespace parsmash
