#include "logsig/signature.hpp"

#include <cmath>
#include <limits>

#include "logsig/exp_integrals.hpp"
#include "logsig/free_lie.hpp"

namespace logsig {

GradedTensor signature(const PiecewisePath& p, int depth) {
  if (depth < 0) throw ShapeError("negative truncation depth");
  GradedTensor s = GradedTensor::unit(p.dim(), depth);
  std::vector<cplx> v(p.dim());
  for (int k = 0; k < p.segment_count(); ++k) {
    const Point d = p.increment(k);
    for (int i = 0; i < p.dim(); ++i) v[i] = d[i];
    s = mul_exp_increment(s, v);
  }
  return s;
}

GradedTensor signature_interval(const PiecewisePath& p, PathTime s, PathTime t, int depth) {
  return signature(restrict_path(p, s, t), depth);
}

GradedTensor log_signature(const PiecewisePath& p, int depth) { return log_t(signature(p, depth)); }

namespace {

struct AdjointWalk {
  const PiecewisePath& path;
  int depth;
  std::vector<GradedTensor> bracket_terms;  // ad_{e1}^m(e2)/m!
  GradedTensor acc;
  std::vector<Weight> word;

  void visit(const GradedTensor& prefix, int degree) {
    if (!word.empty()) acc += iterated_weight_integral(path, word) * prefix;
    for (int m = 0; degree + m + 1 <= depth; ++m) {
      word.push_back({m, 0.0});
      visit(mul(prefix, bracket_terms[m]), degree + m + 1);
      word.pop_back();
    }
  }
};

}  // namespace

double verify_adjoint_rep(const PiecewisePath& p, int depth) {
  if (p.dim() != 2) throw ShapeError("adjoint representation check needs a planar path");
  if (std::abs(p.start()[0]) > kEndpointTol || std::abs(p.end()[0] - 1.0) > kEndpointTol)
    throw DomainError("path is not normalized: need x0 = 0 and x1 = 1");
  AdjointWalk walk{p, depth, {}, GradedTensor::unit(2, depth), {}};
  const GradedTensor e2 = GradedTensor::letter(2, depth, 1);
  double fact = 1.0;
  for (int m = 0; m < depth; ++m) {
    if (m > 0) fact *= m;
    walk.bracket_terms.push_back((1.0 / fact) * ad_letter_power(0, e2, m));
  }
  walk.visit(GradedTensor::unit(2, depth), 0);
  const GradedTensor rhs = mul(walk.acc, exp_t(GradedTensor::letter(2, depth, 0)));
  return max_abs_diff(signature(p, depth), rhs);
}

std::string to_string(RocVerdict v) {
  switch (v) {
    case RocVerdict::FiniteConsistent: return "finite-consistent";
    case RocVerdict::InfiniteConsistent: return "infinite-consistent";
    case RocVerdict::DegenerateTail: return "degenerate-tail";
  }
  return "unknown";
}

RocProfile roc_profile(const GradedTensor& log_sig) {
  const int N = log_sig.depth();
  if (N < kRocMinDegree) throw DomainError("insufficient degrees: ROC profiling needs N >= 6");
  if (std::abs(log_sig.scalar()) > 1e-12) throw DomainError("log-signature must have zero scalar part");
  RocProfile r;
  r.level_norms.assign(N + 1, 0.0);
  r.roots.assign(N + 1, 0.0);
  bool degenerate = true;
  for (int n = 1; n <= N; ++n) {
    r.level_norms[n] = level_norm(log_sig, n);
    r.roots[n] = std::pow(r.level_norms[n], 1.0 / n);
    if (n > 2 && r.level_norms[n] > kRocDegenerateCutoff) degenerate = false;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int n = (N + 1) / 2; n <= N; ++n) {
    if (r.level_norms[n] <= 0.0) continue;
    const double y = std::log(r.level_norms[n]);
    sx += n, sy += y, sxx += double(n) * n, sxy += n * y;
    ++cnt;
  }
  r.slope = cnt >= 2 ? (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx) : -std::numeric_limits<double>::infinity();
  if (degenerate)
    r.verdict = RocVerdict::DegenerateTail;
  else if (r.slope >= std::log(kRocRhoMin))
    r.verdict = RocVerdict::FiniteConsistent;
  else
    r.verdict = RocVerdict::InfiniteConsistent;
  return r;
}

}  // namespace logsig
