#include "parsmash/group.hpp"

#include <algorithm>
#include <numeric>

#include "parsmash/errors.hpp"

namespace parsmash {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out{"1"};
  for (std::size_t i = 1; i < n; ++i) out.push_back("g" + std::to_string(i));
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> FiniteGroup::table() const {
  const std::size_t n = order();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup make_group(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("NoIdentity", "empty multiplication table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw DimensionError("row " + std::to_string(a) + " of the multiplication table has length " +
                           std::to_string(table[a].size()) + ", expected " + std::to_string(n));
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n)
        throw InputError("table entry out of range", "[" + std::to_string(a) + "][" + std::to_string(b) + "]");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw ValidationError("NoIdentity", "element 0 is not a two-sided identity", "element " + std::to_string(a));

  FiniteGroup g;
  g.inv_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] == n)
      throw ValidationError("NoInverse", "element has no two-sided inverse", "element " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      row[table[a][b]] = 1;
      col[table[b][a]] = 1;
    }
    if (std::count(row.begin(), row.end(), 1) != static_cast<std::ptrdiff_t>(n) ||
        std::count(col.begin(), col.end(), 1) != static_cast<std::ptrdiff_t>(n))
      throw ValidationError("NotLatin", "row or column is not a permutation", "element " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError("NotAssociative", "(ab)c != a(bc)", triple(a, b, c));

  g.table_.reserve(n * n);
  for (const auto& row : table) g.table_.insert(g.table_.end(), row.begin(), row.end());
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw InputError("expected " + std::to_string(n) + " group labels", "labels");
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup standard_group(GroupFamily family, std::size_t n, const GroupLimits& limits) {
  if (n == 0) throw InputError("group parameter must be at least 1");
  std::vector<std::vector<std::size_t>> t;
  std::vector<std::string> labels;
  auto power = [](const std::string& x, std::size_t k) {
    if (k == 0) return std::string();
    return k == 1 ? x : x + "^" + std::to_string(k);
  };

  switch (family) {
    case GroupFamily::cyclic: {
      if (n > limits.max_order) throw BudgetExceeded("cyclic group of order " + std::to_string(n));
      t.assign(n, std::vector<std::size_t>(n));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
      for (std::size_t a = 0; a < n; ++a) labels.push_back(a == 0 ? "1" : power("g", a));
      break;
    }
    case GroupFamily::dihedral: {
      const std::size_t order = 2 * n;
      if (order > limits.max_order) throw BudgetExceeded("dihedral group of order " + std::to_string(order));
      t.assign(order, std::vector<std::size_t>(order));
      for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
          std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
          std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
          t[x][y] = rot + n * ((j + l) % 2);
        }
      for (std::size_t x = 0; x < order; ++x) {
        std::string s = power("r", x % n) + (x / n ? "s" : "");
        labels.push_back(s.empty() ? "1" : s);
      }
      break;
    }
    case GroupFamily::symmetric: {
      if (n > limits.max_symmetric_degree) throw BudgetExceeded("symmetric group of degree " + std::to_string(n));
      std::vector<std::vector<std::size_t>> perms;
      std::vector<std::size_t> p(n);
      std::iota(p.begin(), p.end(), 0);
      do perms.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      if (perms.size() > limits.max_order)
        throw BudgetExceeded("symmetric group of order " + std::to_string(perms.size()));
      auto index_of = [&](const std::vector<std::size_t>& q) {
        return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
      };
      t.assign(perms.size(), std::vector<std::size_t>(perms.size()));
      std::vector<std::size_t> c(n);
      for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
          for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
          t[a][b] = index_of(c);
        }
      for (const auto& q : perms) {
        std::string s = "[";
        for (std::size_t x = 0; x < n; ++x) s += (x ? " " : "") + std::to_string(q[x] + 1);
        labels.push_back(s + "]");
      }
      labels[0] = "1";
      break;
    }
  }
  return make_group(t, std::move(labels));
}

}  // namespace parsmash
