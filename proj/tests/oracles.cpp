#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace oracles {

std::uint64_t count_orders_by_matrix(std::size_t n, bool preorder) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);
  std::uint64_t count = 0;
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells.size()); ++bits) {
    for (std::size_t i = 0; i < n; ++i) std::fill(m[i].begin(), m[i].end(), false);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (bits >> c & 1) m[cells[c].first][cells[c].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (!preorder && i != j && m[i][j] && m[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (m[i][j] && m[j][k] && !m[i][k]) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

std::uint64_t count_topologies_by_closure(std::size_t n) {
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> middle;
  for (std::uint64_t s = 1; s < all; ++s) middle.push_back(s);
  std::set<std::vector<std::uint64_t>> seen;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << middle.size()); ++choice) {
    std::set<std::uint64_t> family = {0, all};
    for (std::size_t i = 0; i < middle.size(); ++i)
      if (choice >> i & 1) family.insert(middle[i]);
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<std::uint64_t> current(family.begin(), family.end());
      for (auto a : current)
        for (auto b : current)
          grew = family.insert(a | b).second | family.insert(a & b).second | grew;
    }
    seen.emplace(family.begin(), family.end());
  }
  return seen.size();
}

}  // namespace oracles
