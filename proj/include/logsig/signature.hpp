#pragma once

#include <string>
#include <vector>

#include "logsig/path.hpp"
#include "logsig/tensor.hpp"

namespace logsig {

GradedTensor signature(const PiecewisePath& p, int depth);
GradedTensor signature_interval(const PiecewisePath& p, PathTime s, PathTime t, int depth);
GradedTensor log_signature(const PiecewisePath& p, int depth);

// Max coefficient gap between the signature and the adjoint-series form; planar path with
// x0 = 0 and x1 = 1.
double verify_adjoint_rep(const PiecewisePath& p, int depth);

enum class RocVerdict { FiniteConsistent, InfiniteConsistent, DegenerateTail };
std::string to_string(RocVerdict v);

inline constexpr double kRocDegenerateCutoff = 1e-14;
inline constexpr double kRocRhoMin = 1.05;
inline constexpr int kRocMinDegree = 6;

struct RocProfile {
  std::vector<double> level_norms;  // index n = 1..N, entry 0 unused
  std::vector<double> roots;        // level_norm^(1/n)
  double slope = 0.0;               // least-squares slope of log level_norm over ceil(N/2)..N
  RocVerdict verdict = RocVerdict::DegenerateTail;
};

RocProfile roc_profile(const GradedTensor& log_sig);

}  // namespace logsig
