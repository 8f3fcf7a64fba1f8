#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curvehash {

/// A polygonal curve: an id plus an ordered sequence of vertices in R^d,
/// stored row-major. Consecutive duplicate vertices are legal input; a
/// single-vertex curve is legal everywhere.
class curve {
 public:
  curve() = default;

  curve(std::string id, std::size_t dim, std::vector<double> coords)
      : id_(std::move(id)), dim_(dim), coords_(std::move(coords)) {
    if (dim_ == 0) throw std::invalid_argument("curve: dimension must be positive");
    if (coords_.empty() || coords_.size() % dim_ != 0)
      throw std::invalid_argument("curve: need a positive multiple of dim coordinates");
    for (double x : coords_)
      if (!std::isfinite(x))
        throw std::invalid_argument("curve: coordinates must be finite");
  }

  curve(std::string id, const std::vector<std::vector<double>>& points)
      : curve(std::move(id), points.empty() ? 0 : points.front().size(),
              flatten(points)) {}

  const std::string& id() const { return id_; }
  std::size_t dim() const { return dim_; }

  /// Vertex count m.
  std::size_t size() const { return dim_ ? coords_.size() / dim_ : 0; }

  std::span<const double> vertex(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }

  /// Coordinate of vertex i on the first axis; convenience for 1D curves.
  double value(std::size_t i) const { return coords_[i * dim_]; }

  const std::vector<double>& coords() const { return coords_; }

 private:
  static std::vector<double> flatten(const std::vector<std::vector<double>>& pts) {
    std::vector<double> out;
    if (pts.empty()) return out;
    const std::size_t d = pts.front().size();
    out.reserve(pts.size() * d);
    for (const auto& p : pts) {
      if (p.size() != d)
        throw std::invalid_argument("curve: ragged vertex dimensions");
      out.insert(out.end(), p.begin(), p.end());
    }
    return out;
  }

  std::string id_;
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

/// Shorthand for 1D curves.
inline curve curve1d(std::string id, std::vector<double> values) {
  return curve(std::move(id), 1, std::move(values));
}

inline double vertex_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

/// A monotone pairing of vertex indices (0-based) of two curves. Valid
/// traversals start at (0,0), end at (m1-1, m2-1), and advance each index by
/// 0 or 1 per step with at least one advancing.
struct traversal {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  bool operator==(const traversal&) const = default;
};

/// Selects one of the supported distances. The width parameter w constrains
/// alignment for the anchored variants (paired indices differ by at most w/2,
/// w even) and the speed variants (each vertex paired with at most w
/// partners).
struct distance_kind {
  enum class family {
    frechet,
    dtw,
    anchored_frechet,
    anchored_dtw,
    speed_frechet,
    speed_dtw,
    continuous_frechet_1d,
  };

  family fam = family::frechet;
  std::size_t w = 0;

  static distance_kind frechet() { return {family::frechet, 0}; }
  static distance_kind dtw() { return {family::dtw, 0}; }
  static distance_kind continuous_frechet_1d() {
    return {family::continuous_frechet_1d, 0};
  }
  static distance_kind anchored_frechet(std::size_t w) {
    check_anchored(w);
    return {family::anchored_frechet, w};
  }
  static distance_kind anchored_dtw(std::size_t w) {
    check_anchored(w);
    return {family::anchored_dtw, w};
  }
  static distance_kind speed_frechet(std::size_t w) {
    check_speed(w);
    return {family::speed_frechet, w};
  }
  static distance_kind speed_dtw(std::size_t w) {
    check_speed(w);
    return {family::speed_dtw, w};
  }

  bool sums_costs() const {
    return fam == family::dtw || fam == family::anchored_dtw ||
           fam == family::speed_dtw;
  }

 private:
  static void check_anchored(std::size_t w) {
    if (w < 2 || w % 2 != 0)
      throw std::invalid_argument("anchored width must be even and >= 2");
  }
  static void check_speed(std::size_t w) {
    if (w < 1) throw std::invalid_argument("speed bound must be >= 1");
  }
};

}  // namespace curvehash
