#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace parsmash {

// A finite group given by its Cayley table. Elements are 0..n-1 and 0 is the
// identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t order() const noexcept { return inv_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * inv_.size() + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  static constexpr std::size_t identity() noexcept { return 0; }

  std::vector<std::vector<std::size_t>> table() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t g) const { return labels_[g]; }
  bool is_abelian() const;

 private:
  friend FiniteGroup make_group(const std::vector<std::vector<std::size_t>>&, std::vector<std::string>);
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inv_;
  std::vector<std::string> labels_;
};

/// Validates a Cayley table. Errors: NoIdentity (row/column 0 not the
/// identity), NotLatin, NoInverse, NotAssociative; each names a witness.
FiniteGroup make_group(const std::vector<std::vector<std::size_t>>& table,
                       std::vector<std::string> labels = {});

enum class GroupFamily { cyclic, dihedral, symmetric };

struct GroupLimits {
  std::size_t max_order = 24;
  std::size_t max_symmetric_degree = 5;
};

/// cyclic n (order n), dihedral n (order 2n, element r^i s^j at index i + n*j),
/// symmetric n (order n!, permutations in lexicographic order, composed as
/// functions: (st)(x) = s(t(x))). Throws BudgetExceeded above the limits.
FiniteGroup standard_group(GroupFamily family, std::size_t n, const GroupLimits& limits = {});

}  // namespace parsmash
