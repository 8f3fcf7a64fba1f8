#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "curvehash/curve.hpp"

namespace curvehash {

/// Thrown when a constrained distance is requested for curve lengths that
/// admit no traversal under the constraint.
class no_valid_traversal : public std::runtime_error {
 public:
  no_valid_traversal() : std::runtime_error("no valid traversal exists") {}
};

namespace detail {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kNoBand = static_cast<std::size_t>(-1);

inline void check_same_dim(const curve& P, const curve& Q) {
  if (P.dim() != Q.dim())
    throw std::invalid_argument("curves have different dimensions");
}

/// Row-rolling DP over the m1 x m2 pair grid. Sum=false keeps the maximum
/// paired distance, Sum=true accumulates it. A finite band restricts cells to
/// |i - j| <= band.
template <bool Sum>
double dp_distance(const curve& P, const curve& Q, std::size_t band) {
  const std::size_t m1 = P.size(), m2 = Q.size();
  std::vector<double> prev(m2, kInf), cur(m2, kInf);
  for (std::size_t i = 0; i < m1; ++i) {
    std::fill(cur.begin(), cur.end(), kInf);
    for (std::size_t j = 0; j < m2; ++j) {
      if (band != kNoBand && (i > j ? i - j : j - i) > band) continue;
      double best = kInf;
      if (i == 0 && j == 0) {
        best = Sum ? 0.0 : -kInf;
      } else {
        if (i > 0) best = std::min(best, prev[j]);
        if (j > 0) best = std::min(best, cur[j - 1]);
        if (i > 0 && j > 0) best = std::min(best, prev[j - 1]);
        if (best == kInf) continue;
      }
      const double c = vertex_distance(P.vertex(i), Q.vertex(j));
      cur[j] = Sum ? best + c : std::max(best, c);
    }
    std::swap(prev, cur);
  }
  return prev[m2 - 1];
}

/// DP for speed-constrained distances. Each cell keeps the best cost by the
/// direction and length of the trailing run of single-axis steps: a vertex
/// paired with k partners corresponds to a run of k-1 same-direction steps,
/// so runs are capped at w-1.
template <bool Sum>
double dp_speed(const curve& P, const curve& Q, std::size_t w) {
  const std::size_t m1 = P.size(), m2 = Q.size();
  const std::size_t R = w - 1;
  const std::size_t S = 1 + 2 * R;  // [0] diagonal, [1..R] horiz run, [R+1..2R] vert run
  auto comb = [](double a, double c) { return Sum ? a + c : std::max(a, c); };

  std::vector<double> prev(m2 * S, kInf), cur(m2 * S, kInf);
  auto best_of = [&](const std::vector<double>& row, std::size_t j) {
    double b = kInf;
    for (std::size_t s = 0; s < S; ++s) b = std::min(b, row[j * S + s]);
    return b;
  };
  auto best_vert = [&](const std::vector<double>& row, std::size_t j) {
    double b = kInf;
    for (std::size_t k = 0; k < R; ++k) b = std::min(b, row[j * S + 1 + R + k]);
    return b;
  };
  auto best_horiz = [&](const std::vector<double>& row, std::size_t j) {
    double b = kInf;
    for (std::size_t k = 0; k < R; ++k) b = std::min(b, row[j * S + 1 + k]);
    return b;
  };

  for (std::size_t i = 0; i < m1; ++i) {
    std::fill(cur.begin(), cur.end(), kInf);
    for (std::size_t j = 0; j < m2; ++j) {
      const double c = vertex_distance(P.vertex(i), Q.vertex(j));
      if (i == 0 && j == 0) {
        cur[0] = c;
      } else {
        if (i > 0 && j > 0) {
          const double b = best_of(prev, j - 1);
          if (b != kInf) cur[j * S] = comb(b, c);
        }
        if (i > 0 && R >= 1) {
          // run of horizontal steps: the vertex q_j gains another partner
          const double fresh = std::min(prev[j * S], best_vert(prev, j));
          if (fresh != kInf) cur[j * S + 1] = comb(fresh, c);
          for (std::size_t k = 2; k <= R; ++k) {
            const double b = prev[j * S + 1 + (k - 2)];
            if (b != kInf) cur[j * S + 1 + (k - 1)] = comb(b, c);
          }
        }
        if (j > 0 && R >= 1) {
          const double fresh = std::min(cur[(j - 1) * S], best_horiz(cur, j - 1));
          if (fresh != kInf) cur[j * S + 1 + R] = comb(fresh, c);
          for (std::size_t k = 2; k <= R; ++k) {
            const double b = cur[(j - 1) * S + 1 + R + (k - 2)];
            if (b != kInf) cur[j * S + 1 + R + (k - 1)] = comb(b, c);
          }
        }
      }
    }
    std::swap(prev, cur);
  }
  return best_of(prev, m2 - 1);
}

}  // namespace detail

/// Minimum over traversals of the maximum paired vertex distance.
inline double discrete_frechet(const curve& P, const curve& Q) {
  detail::check_same_dim(P, Q);
  return detail::dp_distance<false>(P, Q, detail::kNoBand);
}

/// Minimum over traversals of the summed paired vertex distances.
inline double dtw(const curve& P, const curve& Q) {
  detail::check_same_dim(P, Q);
  return detail::dp_distance<true>(P, Q, detail::kNoBand);
}

namespace detail {

struct span_interval {
  double lo = 0, hi = -1;
  bool empty() const { return lo > hi; }
  bool contains(double x) const { return !empty() && lo <= x && x <= hi; }
};

/// Parameter interval of segment a->b whose points lie within eps of p.
inline span_interval segment_window(double a, double b, double p, double eps) {
  if (a == b) {
    if (std::abs(a - p) <= eps) return {0.0, 1.0};
    return {};
  }
  double lo = (p - eps - a) / (b - a);
  double hi = (p + eps - a) / (b - a);
  if (lo > hi) std::swap(lo, hi);
  lo = std::max(lo, 0.0);
  hi = std::min(hi, 1.0);
  if (lo > hi) return {};
  return {lo, hi};
}

}  // namespace detail

/// Decision procedure for the continuous Frechet distance of 1D curves:
/// propagates reachable intervals across the free-space cell grid.
inline bool continuous_frechet_within(const curve& P, const curve& Q, double eps) {
  using detail::span_interval;
  const std::size_t m1 = P.size(), m2 = Q.size();
  if (std::abs(P.value(0) - Q.value(0)) > eps) return false;
  if (std::abs(P.value(m1 - 1) - Q.value(m2 - 1)) > eps) return false;
  if (m1 == 1) {
    for (std::size_t j = 0; j < m2; ++j)
      if (std::abs(P.value(0) - Q.value(j)) > eps) return false;
    return true;
  }
  if (m2 == 1) {
    for (std::size_t i = 0; i < m1; ++i)
      if (std::abs(P.value(i) - Q.value(0)) > eps) return false;
    return true;
  }

  // L[i][j]: reachable part of edge {P vertex i} x Q segment j, in segment
  // parameters; B[i][j]: reachable part of P segment i x {Q vertex j}.
  auto lidx = [m2](std::size_t i, std::size_t j) { return i * (m2 - 1) + j; };
  auto bidx = [m2](std::size_t i, std::size_t j) { return i * m2 + j; };
  std::vector<span_interval> L(m1 * (m2 - 1)), B((m1 - 1) * m2);

  auto free_l = [&](std::size_t i, std::size_t j) {
    return detail::segment_window(Q.value(j), Q.value(j + 1), P.value(i), eps);
  };
  auto free_b = [&](std::size_t i, std::size_t j) {
    return detail::segment_window(P.value(i), P.value(i + 1), Q.value(j), eps);
  };

  // Along the two starting boundaries only monotone walks from the corner count.
  for (std::size_t j = 0; j < m2 - 1; ++j) {
    const span_interval f = free_l(0, j);
    const bool connected = (j == 0 || L[lidx(0, j - 1)].contains(1.0)) && f.contains(0.0);
    L[lidx(0, j)] = connected ? f : span_interval{};
  }
  for (std::size_t i = 0; i < m1 - 1; ++i) {
    const span_interval f = free_b(i, 0);
    const bool connected = (i == 0 || B[bidx(i - 1, 0)].contains(1.0)) && f.contains(0.0);
    B[bidx(i, 0)] = connected ? f : span_interval{};
  }

  for (std::size_t i = 0; i + 1 < m1; ++i) {
    for (std::size_t j = 0; j + 1 < m2; ++j) {
      const span_interval left = L[lidx(i, j)];
      const span_interval bottom = B[bidx(i, j)];
      span_interval right = free_l(i + 1, j);
      span_interval top = free_b(i, j + 1);
      if (!bottom.empty()) {
        // reachable from below: the whole free part of the right edge opens up
      } else if (!left.empty()) {
        right.lo = std::max(right.lo, left.lo);
      } else {
        right = {};
      }
      if (!left.empty()) {
        // reachable from the left: the whole free part of the top edge opens up
      } else if (!bottom.empty()) {
        top.lo = std::max(top.lo, bottom.lo);
      } else {
        top = {};
      }
      L[lidx(i + 1, j)] = right.empty() ? span_interval{} : right;
      B[bidx(i, j + 1)] = top.empty() ? span_interval{} : top;
    }
  }
  return L[lidx(m1 - 1, m2 - 2)].contains(1.0) || B[bidx(m1 - 2, m2 - 1)].contains(1.0);
}

/// Continuous Frechet distance of two curves on the real line, to absolute
/// tolerance 1e-9, by binary search over the decision procedure.
inline double continuous_frechet_1d(const curve& P, const curve& Q) {
  detail::check_same_dim(P, Q);
  if (P.dim() != 1)
    throw std::invalid_argument("continuous_frechet_1d: curves must be 1-dimensional");
  if (continuous_frechet_within(P, Q, 0.0)) return 0.0;
  double hi = 0;
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = 0; j < Q.size(); ++j)
      hi = std::max(hi, std::abs(P.value(i) - Q.value(j)));
  double lo = 0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (continuous_frechet_within(P, Q, mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

/// Exact distance under the given kind. Anchored kinds require
/// |m1 - m2| <= w/2 and restrict the DP to the band |i - j| <= w/2; speed
/// kinds require 1/w <= m1/m2 <= w and bound per-vertex pairing counts.
inline double constrained_distance(const curve& P, const curve& Q,
                                   const distance_kind& kind) {
  using fam = distance_kind::family;
  detail::check_same_dim(P, Q);
  const std::size_t m1 = P.size(), m2 = Q.size();
  switch (kind.fam) {
    case fam::frechet:
      return discrete_frechet(P, Q);
    case fam::dtw:
      return dtw(P, Q);
    case fam::continuous_frechet_1d:
      return continuous_frechet_1d(P, Q);
    case fam::anchored_frechet:
    case fam::anchored_dtw: {
      const std::size_t diff = m1 > m2 ? m1 - m2 : m2 - m1;
      if (diff > kind.w / 2) throw no_valid_traversal();
      const double v = kind.fam == fam::anchored_dtw
                           ? detail::dp_distance<true>(P, Q, kind.w / 2)
                           : detail::dp_distance<false>(P, Q, kind.w / 2);
      if (v == detail::kInf) throw no_valid_traversal();
      return v;
    }
    case fam::speed_frechet:
    case fam::speed_dtw: {
      if (m1 > kind.w * m2 || m2 > kind.w * m1) throw no_valid_traversal();
      const double v = kind.fam == fam::speed_dtw
                           ? detail::dp_speed<true>(P, Q, kind.w)
                           : detail::dp_speed<false>(P, Q, kind.w);
      if (v == detail::kInf) throw no_valid_traversal();
      return v;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace curvehash
