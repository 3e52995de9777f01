#pragma once

#include <random>

#include "logsig/path.hpp"
#include "logsig/tensor.hpp"

namespace testutil {

inline logsig::GradedTensor random_tensor(int d, int depth, std::uint64_t seed, double scalar = 0.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  logsig::GradedTensor t(d, depth);
  for (auto& c : t.data()) c = {u(rng), u(rng)};
  t.scalar() = scalar;
  return t;
}

inline logsig::PiecewisePath random_path(int dim, int segments, std::uint64_t seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<logsig::Point> v{logsig::Point(dim, 0.0)};
  for (int s = 0; s < segments; ++s) {
    logsig::Point p(dim);
    for (auto& c : p) c = u(rng);
    v.push_back(p);
  }
  return logsig::PiecewisePath(dim, v, "random");
}

}  // namespace testutil
