#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "curvehash/curve.hpp"
#include "curvehash/rand.hpp"

namespace curvehash {

enum class scheme_variant : std::uint32_t {
  basic = 0,
  constant = 1,
  tradeoff = 2,
  anchored = 3,
  speed = 4,
  continuous1d = 5,
};

/// A grid of resolution delta whose origin is shifted by t, one coordinate
/// per dimension, each in [0, delta).
struct grid_shift {
  double delta = 0;
  std::vector<double> t;
};

/// Per-vertex offsets for the perturbation scheme, one d-vector per vertex,
/// each coordinate in [-delta/2, delta/2). Stored row-major.
struct perturbation_seq {
  double delta = 0;
  std::size_t dim = 0;
  std::vector<double> offsets;

  std::size_t length() const { return dim ? offsets.size() / dim : 0; }
};

/// A hash value: the sequence of integer grid-cell indices of a curve's
/// snapped vertices after consecutive-duplicate removal. Keys are only
/// comparable within one sampled scheme instance, identified by scheme_id;
/// keys with different scheme_ids never compare equal.
struct lattice_key {
  std::uint64_t scheme_id = 0;
  std::size_t dim = 0;
  std::vector<std::int64_t> cells;  // row-major, length() * dim entries

  std::size_t length() const { return dim ? cells.size() / dim : 0; }
  bool operator==(const lattice_key&) const = default;
};

/// Planned parameters of one hashing scheme: query radius r, approximation
/// factor c, grid resolution delta, and the integer knobs the variant uses.
struct scheme_params {
  scheme_variant variant = scheme_variant::basic;
  double r = 0;
  double c = 0;
  double delta = 0;
  std::size_t d = 0;
  std::size_t m_bound = 0;  // curve-length bound the plan was made for
  std::size_t k_blocks = 0; // partition count K (tradeoff)
  std::size_t w = 0;        // alignment width/speed (constrained variants)
  std::size_t ell = 0;      // block length (constrained variants)
};

/// Identifies one sampled scheme instance so that keys from unrelated
/// instances cannot collide by accident.
inline std::uint64_t make_scheme_id(scheme_variant variant, double delta,
                                    std::uint64_t seed, std::uint64_t table_index) {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(variant) + 1);
  h = mix64(h ^ std::bit_cast<std::uint64_t>(delta));
  h = mix64(h ^ seed);
  h = mix64(h ^ table_index);
  return h;
}

/// Index of the nearest shifted grid point along one axis. Ties round half up
/// so hashing stays deterministic.
inline std::int64_t grid_cell(double x, double t, double delta) {
  return static_cast<std::int64_t>(std::floor((x - t) / delta + 0.5));
}

namespace detail {

inline void append_dedup(lattice_key& key, const std::int64_t* cell, std::size_t d) {
  const std::size_t n = key.cells.size();
  if (n >= d) {
    bool same = true;
    for (std::size_t k = 0; k < d; ++k)
      same = same && key.cells[n - d + k] == cell[k];
    if (same) return;
  }
  key.cells.insert(key.cells.end(), cell, cell + d);
}

}  // namespace detail

/// Snaps each vertex to its nearest grid point and removes consecutive
/// duplicate cells.
inline lattice_key snap_to_grid(const curve& P, const grid_shift& shift,
                                std::uint64_t scheme_id) {
  const std::size_t d = P.dim();
  if (shift.t.size() != d)
    throw std::invalid_argument("snap_to_grid: shift dimension mismatch");
  lattice_key key{scheme_id, d, {}};
  key.cells.reserve(P.size() * d);
  std::vector<std::int64_t> cell(d);
  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto v = P.vertex(i);
    for (std::size_t k = 0; k < d; ++k)
      cell[k] = grid_cell(v[k], shift.t[k], shift.delta);
    detail::append_dedup(key, cell.data(), d);
  }
  return key;
}

/// The randomly-shifted-grid hash: snap and deduplicate.
inline lattice_key basic_hash(const curve& P, const scheme_params& params,
                              const grid_shift& shift, std::uint64_t scheme_id) {
  (void)params;
  return snap_to_grid(P, shift, scheme_id);
}

/// The perturbation hash: add an independent offset to every vertex, snap to
/// the canonical (unshifted) grid, deduplicate. Input and query curves must
/// use independently sampled offsets of matching length.
inline lattice_key constant_hash(const curve& P, const scheme_params& params,
                                 const perturbation_seq& pert,
                                 std::uint64_t scheme_id) {
  const std::size_t d = P.dim();
  if (pert.dim != d || pert.length() != P.size())
    throw std::invalid_argument("constant_hash: perturbation does not match curve");
  lattice_key key{scheme_id, d, {}};
  key.cells.reserve(P.size() * d);
  std::vector<std::int64_t> cell(d);
  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto v = P.vertex(i);
    for (std::size_t k = 0; k < d; ++k)
      cell[k] = grid_cell(v[k] + pert.offsets[i * d + k], 0.0, params.delta);
    detail::append_dedup(key, cell.data(), d);
  }
  return key;
}

namespace detail {

inline void check_plan_inputs(double r, std::size_t d, std::size_t m) {
  if (r <= 0) throw std::invalid_argument("plan: radius must be positive");
  if (d < 1 || m < 1) throw std::invalid_argument("plan: d and m must be >= 1");
}

}  // namespace detail

/// delta = 4dmr, c = 4 d^{3/2} m; m is the smaller curve length the
/// guarantee should cover.
inline scheme_params plan_basic(double r, std::size_t d, std::size_t m) {
  detail::check_plan_inputs(r, d, m);
  const double dd = static_cast<double>(d);
  scheme_params p;
  p.variant = scheme_variant::basic;
  p.r = r;
  p.d = d;
  p.m_bound = m;
  p.delta = 4.0 * dd * static_cast<double>(m) * r;
  p.c = 4.0 * std::pow(dd, 1.5) * static_cast<double>(m);
  return p;
}

/// delta = 4dr, c = 4 d^{3/2}; length-independent approximation at the cost
/// of an exponentially smaller collision rate.
inline scheme_params plan_constant(double r, std::size_t d) {
  detail::check_plan_inputs(r, d, 1);
  const double dd = static_cast<double>(d);
  scheme_params p;
  p.variant = scheme_variant::constant;
  p.r = r;
  p.d = d;
  p.m_bound = 1;
  p.delta = 4.0 * dd * r;
  p.c = 4.0 * std::pow(dd, 1.5);
  return p;
}

/// DTW parameters for the shifted-grid hash: delta = 2dr, c = 4 d^{3/2} M
/// with M the larger curve length.
inline scheme_params plan_basic_dtw(double r, std::size_t d, std::size_t M) {
  detail::check_plan_inputs(r, d, M);
  const double dd = static_cast<double>(d);
  scheme_params p;
  p.variant = scheme_variant::basic;
  p.r = r;
  p.d = d;
  p.m_bound = M;
  p.delta = 2.0 * dd * r;
  p.c = 4.0 * std::pow(dd, 1.5) * static_cast<double>(M);
  return p;
}

inline grid_shift sample_shift(double delta, std::size_t d, rng_engine& g) {
  if (delta <= 0) throw std::invalid_argument("sample_shift: delta must be positive");
  grid_shift s;
  s.delta = delta;
  s.t.resize(d);
  for (double& x : s.t) x = uniform_in(g, 0.0, delta);
  return s;
}

inline perturbation_seq sample_perturbation(double delta, std::size_t m,
                                            std::size_t d, rng_engine& g) {
  if (delta <= 0)
    throw std::invalid_argument("sample_perturbation: delta must be positive");
  perturbation_seq p;
  p.delta = delta;
  p.dim = d;
  p.offsets.resize(m * d);
  for (double& x : p.offsets) x = uniform_in(g, -delta / 2, delta / 2);
  return p;
}

}  // namespace curvehash
