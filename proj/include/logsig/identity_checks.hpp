#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "logsig/path.hpp"
#include "logsig/signature.hpp"

namespace logsig {

enum class Verdict { FiniteRocCertified, Inconclusive, NotApplicable };
std::string to_string(Verdict v);

struct ResidualRow {
  std::string id;
  std::vector<std::pair<std::string, double>> params;
  double residual = 0.0;
  bool exceeds = false;
};

struct IdentityReport {
  std::string path;
  std::string battery;
  std::vector<ResidualRow> rows;
  Verdict verdict = Verdict::Inconclusive;
  double engine_tol = 0.0;
  double threshold = 0.0;
  std::string note;
};

struct BatteryOptions {
  int kmax = 5;       // line-integral frequencies 0 < |k| <= kmax
  int pq_bound = 3;   // double-integral frequencies p, q in [-K, K]
  int mmax = 3;
  int kbound = 3;
  std::size_t budget = 5000;  // cap on iterated-integral sequences
  double engine_tol = 1e-12;
};

inline constexpr double kQuadratureTol = 1e-10;
double certification_threshold(double engine_tol);

bool is_nondegenerate(const std::vector<int>& seq);

IdentityReport thm_lineint_battery(const PiecewisePath& p, const BatteryOptions& opt = {});
IdentityReport doubint_battery(const PiecewisePath& p, const BatteryOptions& opt = {});
IdentityReport iterint_battery(const PiecewisePath& p, const BatteryOptions& opt = {});
IdentityReport gen_lineint_battery(const PiecewisePath& p, const BatteryOptions& opt = {});
IdentityReport all_batteries(const PiecewisePath& p, const BatteryOptions& opt = {});
IdentityReport run_battery(const std::string& name, const PiecewisePath& p, const BatteryOptions& opt = {});

// b values used for the full second-order identity rows.
std::vector<cplx> doubint_b_grid();

struct ConjugationReport {
  RocProfile profile;
  double identity_residual = 0.0;  // log S(a.g.a^-1) vs S(a) log S(g) S(a)^-1
  int identity_depth = 0;
};
// alpha, the unit step, alpha reversed; pass a single-vertex alpha for the bare line.
ConjugationReport conjugation_decay_check(const PiecewisePath& alpha, int depth);

// |int sin(2 pi x/x1) dy| on the x-normalized path.
double sine_line_integral(const PiecewisePath& p);

struct BrownianSanity {
  int samples = 0;
  int exceeding = 0;
  double fraction = 0.0;
  bool certified = false;
};
inline constexpr double kBrownianCutoff = 1e-3;
inline constexpr double kBrownianRate = 0.95;
BrownianSanity brownian_sanity(int samples, int steps, std::uint64_t seed0);

}  // namespace logsig
