#pragma once

#include <cstdint>
#include <vector>

#include "parsmash/algebra.hpp"

namespace parsmash {

// Free resolution ... -> L^{n_1} -> L^{n_0} -> M -> 0 over an algebra L.
// Elements of L^n are vectors of length n * dim(L), block j holding the
// j-th coordinate.
struct Resolution {
  AlgebraPtr algebra;
  std::size_t module_dim = 0;
  std::vector<std::size_t> ranks;
  /// M.dim x (n_0 * d)
  SparseMatrix augmentation;
  /// boundary[i] : L^{n_{i+1}} -> L^{n_i}, columns indexed (j, b) -> j * d + b
  std::vector<SparseMatrix> boundary;
  /// generators[0] generate M; generators[i + 1] generate ker of stage i
  std::vector<std::vector<Vector>> generators;

  std::size_t length() const noexcept { return boundary.size(); }
};

/// Order in which the canonical kernel basis is scanned for generators. The
/// canonical order gives by far the smallest ranks on K_par G.
enum class GeneratorOrder { canonical, reversed, shuffled };

struct ResolutionOptions {
  GeneratorOrder order = GeneratorOrder::canonical;
  uint64_t seed = 1;
  /// Largest allowed n_i * dim(L).
  std::size_t max_free_dim = 20000;
};

/// Builds d_1 .. d_length. At each stage the kernel's canonical basis is
/// scanned in the chosen order and a vector is kept when it enlarges the
/// submodule generated so far.
Resolution resolve_module(const AlgModule& m, std::size_t length, const ResolutionOptions& options = {});
/// Exactness at every stage, augmentation surjective, consecutive composites zero.
std::vector<Check> resolution_checks(const Resolution& r, const AlgModule& m);

/// Left action of a basis element on L^n.
SparseMatrix free_action(const Algebra& a, std::size_t basis, std::size_t n);

struct ExtResult {
  std::vector<std::size_t> dims;
  /// Cocycles in M^{n_i} spanning a complement of the coboundaries.
  std::vector<std::vector<Vector>> representatives;
  /// coboundary[i] : M^{n_i} -> M^{n_{i+1}}
  std::vector<SparseMatrix> coboundary;
};

/// Cohomology of Hom_L(F_*, N) = N^{n_*} in degrees 0..max_degree; the
/// resolution must have length >= max_degree + 1.
ExtResult ext_from_resolution(const Resolution& r, const AlgModule& n, std::size_t max_degree);

}  // namespace parsmash
