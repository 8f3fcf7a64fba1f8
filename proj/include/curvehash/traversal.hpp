#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "curvehash/curve.hpp"

namespace curvehash {

inline bool is_valid_traversal(const traversal& t, std::size_t m1, std::size_t m2) {
  const auto& p = t.pairs;
  if (p.empty()) return false;
  if (p.front() != std::pair<std::size_t, std::size_t>{0, 0}) return false;
  if (p.back() != std::pair<std::size_t, std::size_t>{m1 - 1, m2 - 1}) return false;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    if (p[k + 1].first < p[k].first || p[k + 1].second < p[k].second) return false;
    const std::size_t di = p[k + 1].first - p[k].first;
    const std::size_t dj = p[k + 1].second - p[k].second;
    if (di > 1 || dj > 1 || di + dj == 0) return false;
  }
  return true;
}

/// True when every pair (i, j) satisfies |i - j| <= w/2.
inline bool is_anchored_traversal(const traversal& t, std::size_t w) {
  for (const auto& [i, j] : t.pairs) {
    const std::size_t diff = i > j ? i - j : j - i;
    if (diff > w / 2) return false;
  }
  return true;
}

/// True when no vertex of either curve is paired with more than w partners.
inline bool is_speed_traversal(const traversal& t, std::size_t m1, std::size_t m2,
                               std::size_t w) {
  std::vector<std::size_t> deg1(m1, 0), deg2(m2, 0);
  for (const auto& [i, j] : t.pairs) {
    if (++deg1[i] > w || ++deg2[j] > w) return false;
  }
  return true;
}

inline double traversal_cost_max(const curve& P, const curve& Q, const traversal& t) {
  double c = 0;
  for (const auto& [i, j] : t.pairs)
    c = std::max(c, vertex_distance(P.vertex(i), Q.vertex(j)));
  return c;
}

inline double traversal_cost_sum(const curve& P, const curve& Q, const traversal& t) {
  double c = 0;
  for (const auto& [i, j] : t.pairs)
    c += vertex_distance(P.vertex(i), Q.vertex(j));
  return c;
}

/// Enumerates every valid traversal of two index ranges exactly once.
/// Exhaustive, so both lengths are capped at 8.
inline std::vector<traversal> enumerate_traversals(std::size_t m1, std::size_t m2) {
  if (m1 == 0 || m2 == 0) throw std::invalid_argument("enumerate_traversals: empty curve");
  if (m1 > 8 || m2 > 8)
    throw std::invalid_argument("enumerate_traversals: lengths above the m <= 8 guard");
  std::vector<traversal> out;
  traversal cur;
  cur.pairs.push_back({0, 0});
  // Iterative DFS over the three step types.
  struct frame {
    std::size_t i, j;
    int next_step;
  };
  std::vector<frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    frame& f = stack.back();
    if (f.i == m1 - 1 && f.j == m2 - 1) {
      out.push_back(cur);
      cur.pairs.pop_back();
      stack.pop_back();
      continue;
    }
    static constexpr int DI[3] = {1, 0, 1};
    static constexpr int DJ[3] = {0, 1, 1};
    bool advanced = false;
    while (f.next_step < 3) {
      const std::size_t ni = f.i + DI[f.next_step];
      const std::size_t nj = f.j + DJ[f.next_step];
      ++f.next_step;
      if (ni < m1 && nj < m2) {
        cur.pairs.push_back({ni, nj});
        stack.push_back({ni, nj, 0});
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      cur.pairs.pop_back();
      stack.pop_back();
    }
  }
  return out;
}

/// Splits a traversal into its connected components: consecutive pairs belong
/// to the same component iff they share a vertex index on either curve.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
traversal_components(const traversal& t) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> comps;
  for (std::size_t k = 0; k < t.pairs.size(); ++k) {
    const bool linked =
        k > 0 && (t.pairs[k].first == t.pairs[k - 1].first ||
                  t.pairs[k].second == t.pairs[k - 1].second);
    if (!linked) comps.emplace_back();
    comps.back().push_back(t.pairs[k]);
  }
  return comps;
}

/// Removes redundant middle pairs until every component is a star: whenever a
/// step that advances only one curve is followed by a step advancing only the
/// other, the shared middle pair can be dropped without raising the max or
/// sum cost. The output pairs are a subset of the input pairs.
inline traversal normalize_traversal(traversal t) {
  auto& p = t.pairs;
  for (std::size_t k = 0; k + 2 < p.size();) {
    const bool a1 = p[k + 1].first == p[k].first;        // first step advances j only
    const bool b1 = p[k + 1].second == p[k].second;      // first step advances i only
    const bool a2 = p[k + 2].first == p[k + 1].first;
    const bool b2 = p[k + 2].second == p[k + 1].second;
    if ((a1 && b2 && !b1 && !a2) || (b1 && a2 && !a1 && !b2)) {
      // The dropped pair merges the two single-axis steps into one diagonal
      // step; no new removable pattern can appear left of k.
      p.erase(p.begin() + static_cast<std::ptrdiff_t>(k) + 1);
    } else {
      ++k;
    }
  }
  return t;
}

}  // namespace curvehash
