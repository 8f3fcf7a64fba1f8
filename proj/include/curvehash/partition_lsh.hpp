#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "curvehash/curve.hpp"
#include "curvehash/grid_lsh.hpp"
#include "curvehash/rand.hpp"

namespace curvehash {

/// How a curve is split into blocks of consecutive vertices.
///
/// Overlapping kinds describe K blocks by K-1 interior cut points (1-based
/// vertex numbers); consecutive blocks share the cut vertex, and repeated
/// cuts produce legal single-vertex blocks. The disjoint kind (used by the
/// constrained schemes) stores every block's final vertex number including m,
/// and blocks do not overlap.
struct partition_spec {
  enum class kind_t { sampled_input, deterministic_query, disjoint };

  std::size_t m = 0;
  kind_t kind = kind_t::sampled_input;
  std::vector<std::size_t> cuts;

  std::size_t num_blocks() const {
    return kind == kind_t::disjoint ? cuts.size() : cuts.size() + 1;
  }

  /// 0-based inclusive vertex range of block b.
  std::pair<std::size_t, std::size_t> block(std::size_t b) const {
    if (kind == kind_t::disjoint) {
      const std::size_t first = b == 0 ? 0 : cuts[b - 1];
      return {first, cuts[b] - 1};
    }
    const std::size_t first = b == 0 ? 1 : cuts[b - 1];
    const std::size_t last = b == cuts.size() ? m : cuts[b];
    return {first - 1, last - 1};
  }
};

/// Samples the cut multiset uniformly over all monotone non-decreasing
/// sequences in [1..m]^(K-1): a uniform (K-1)-subset of [1..m+K-2] is drawn
/// and pulled back through the stars-and-bars bijection, so every multiset is
/// equally likely.
inline partition_spec sample_partition(std::size_t m, std::size_t K, rng_engine& g) {
  if (m < 1 || K < 1) throw std::invalid_argument("sample_partition: m, K >= 1");
  partition_spec p;
  p.m = m;
  p.kind = partition_spec::kind_t::sampled_input;
  if (K == 1) return p;
  std::set<std::uint64_t> combo;
  while (combo.size() < K - 1)
    combo.insert(uniform_int(g, 1, m + K - 2));
  std::size_t offset = 0;
  for (std::uint64_t a : combo)
    p.cuts.push_back(static_cast<std::size_t>(a) - offset++);
  return p;
}

/// Deterministic query partition: K blocks of size ceil((m-1)/K) + 1 with
/// consecutive blocks sharing one vertex; the last block may be shorter.
inline partition_spec query_partition(std::size_t m, std::size_t K) {
  if (m < 1 || K < 1) throw std::invalid_argument("query_partition: m, K >= 1");
  partition_spec p;
  p.m = m;
  p.kind = partition_spec::kind_t::deterministic_query;
  if (K == 1) return p;
  const std::size_t stride = (m - 1 + K - 1) / K;  // block size minus the shared vertex
  for (std::size_t i = 1; i < K; ++i)
    p.cuts.push_back(std::min(1 + i * std::max<std::size_t>(stride, 1), m));
  return p;
}

/// delta = 4dr ceil(M/K), c = 4 d^{3/2} ceil(M/K).
inline scheme_params plan_tradeoff(double r, std::size_t d, std::size_t M,
                                   std::size_t K) {
  detail::check_plan_inputs(r, d, M);
  if (K < 1) throw std::invalid_argument("plan_tradeoff: K >= 1");
  const double blocks = static_cast<double>((M + K - 1) / K);
  const double dd = static_cast<double>(d);
  scheme_params p;
  p.variant = scheme_variant::tradeoff;
  p.r = r;
  p.d = d;
  p.m_bound = M;
  p.k_blocks = K;
  p.delta = 4.0 * dd * r * blocks;
  p.c = 4.0 * std::pow(dd, 1.5) * blocks;
  return p;
}

/// Concatenation of per-block shifted-grid hashes into a single flat key.
/// Duplicates are removed within blocks only; block boundaries keep their
/// snapped values, so the flat key is exactly the sequence of per-block keys
/// laid end to end.
inline lattice_key tradeoff_hash(const curve& P, const scheme_params& params,
                                 std::span<const grid_shift> shifts,
                                 const partition_spec& part,
                                 std::uint64_t scheme_id) {
  if (part.m != P.size())
    throw std::invalid_argument("tradeoff_hash: partition does not match curve length");
  if (part.kind == partition_spec::kind_t::disjoint)
    throw std::invalid_argument("tradeoff_hash: needs an overlapping partition");
  if (shifts.size() < part.num_blocks())
    throw std::invalid_argument("tradeoff_hash: not enough shifts");
  const std::size_t d = P.dim();
  lattice_key key{scheme_id, d, {}};
  std::vector<std::int64_t> cell(d);
  for (std::size_t b = 0; b < part.num_blocks(); ++b) {
    const auto [first, last] = part.block(b);
    const grid_shift& shift = shifts[b];
    bool have_prev = false;
    std::vector<std::int64_t> prev(d);
    for (std::size_t i = first; i <= last; ++i) {
      const auto v = P.vertex(i);
      for (std::size_t k = 0; k < d; ++k)
        cell[k] = grid_cell(v[k], shift.t[k], shift.delta);
      if (have_prev && cell == prev) continue;
      key.cells.insert(key.cells.end(), cell.begin(), cell.end());
      prev = cell;
      have_prev = true;
    }
  }
  return key;
}

}  // namespace curvehash
