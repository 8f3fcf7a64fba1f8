#pragma once

#include <string>
#include <vector>

#include "curvehash/curve.hpp"
#include "curvehash/rand.hpp"

namespace testutil {

using curvehash::curve;
using curvehash::rng_engine;

inline curve random_curve(rng_engine& g, std::size_t m, std::size_t d,
                          double lo = 0.0, double hi = 10.0,
                          std::string id = "c") {
  std::vector<double> coords(m * d);
  for (double& x : coords) x = curvehash::uniform_in(g, lo, hi);
  return curve(std::move(id), d, std::move(coords));
}

/// Shifts every coordinate by an independent uniform draw in [-s, s].
inline curve perturbed(const curve& c, rng_engine& g, double s,
                       std::string id = "p") {
  std::vector<double> coords = c.coords();
  for (double& x : coords) x += curvehash::uniform_in(g, -s, s);
  return curve(std::move(id), c.dim(), std::move(coords));
}

/// Translates every vertex by the same offset on each axis.
inline curve translated(const curve& c, double offset, std::string id = "t") {
  std::vector<double> coords = c.coords();
  for (double& x : coords) x += offset;
  return curve(std::move(id), c.dim(), std::move(coords));
}

}  // namespace testutil
