#pragma once

#include <cstdint>
#include <vector>

#include "parsmash/algebra.hpp"

namespace parsmash {

// Finite commutative semigroup of idempotents realised as a family of subsets
// of a ground set (bitmasks), closed under union. The product of two
// elements is the union of their masks.
class Semilattice {
 public:
  std::size_t ground_size() const noexcept { return ground_; }
  std::size_t size() const noexcept { return masks_.size(); }
  /// Elements sorted ascending by mask value.
  const std::vector<uint64_t>& masks() const noexcept { return masks_; }
  uint64_t mask(std::size_t i) const { return masks_[i]; }
  /// Index of a mask, or size() when absent.
  std::size_t index_of(uint64_t mask) const;
  std::size_t meet(std::size_t i, std::size_t j) const { return index_of(masks_[i] | masks_[j]); }

 private:
  friend Semilattice make_semilattice(std::size_t, std::vector<uint64_t>);
  std::size_t ground_ = 0;
  std::vector<uint64_t> masks_;
};

/// Errors: InputError for masks outside the ground set, NotClosed (witness
/// the two masks) when a union is missing. Duplicates are removed.
Semilattice make_semilattice(std::size_t ground, std::vector<uint64_t> masks);
/// All subsets of a ground set of the given size (at most 20).
Semilattice boolean_semilattice(std::size_t ground);

/// Algebra with basis the elements of S and product = union. Its unit is
/// the sum of the orthogonal idempotents, which is the empty set when present.
AlgebraPtr semilattice_algebra(const Field& field, const Semilattice& s);

/// w_T = sum over T' >= T in S of mu(T, T') e_{T'}, computed by inverting
/// e_T = sum_{T' >= T} w_{T'} from the largest sets down. Verified before
/// returning (VerificationFailed otherwise).
std::vector<Vector> orthogonal_idempotent_basis(const Field& field, const Semilattice& s);
/// Coordinates of r in the orthogonal idempotent basis (zeta transform).
Vector orthogonal_coordinates(const Field& field, const Semilattice& s, const Vector& r);
/// u = sum of the w_T occurring with nonzero coefficient in some generator.
Vector principal_generator(const Field& field, const Semilattice& s, const std::vector<Vector>& generators);
/// Span-closure of the generators under multiplication by basis elements.
Subspace ideal_closure(const Algebra& a, const std::vector<Vector>& generators);

}  // namespace parsmash
