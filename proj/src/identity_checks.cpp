#include "logsig/identity_checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "logsig/exp_integrals.hpp"

namespace logsig {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const cplx kI{0.0, 1.0};

cplx freq(int k) { return kTwoPi * kI * static_cast<double>(k); }

IdentityReport start_report(const PiecewisePath& p, const char* battery, double engine_tol) {
  IdentityReport r;
  r.path = p.name();
  r.battery = battery;
  r.engine_tol = engine_tol;
  r.threshold = certification_threshold(engine_tol);
  return r;
}

IdentityReport not_applicable(IdentityReport r, std::string why) {
  r.verdict = Verdict::NotApplicable;
  r.note = std::move(why);
  return r;
}

void finish(IdentityReport& r) {
  bool any = false;
  for (auto& row : r.rows) {
    row.exceeds = row.residual > r.threshold;
    any = any || row.exceeds;
  }
  r.verdict = any ? Verdict::FiniteRocCertified : Verdict::Inconclusive;
}

// Rejects paths with no x-increment; otherwise rescales x to run from 0 to 1.
bool normalized_or_none(const PiecewisePath& p, PiecewisePath& out) {
  if (p.dim() != 2) throw ShapeError("identity batteries need a planar path");
  if (std::abs(p.end()[0] - p.start()[0]) <= kEndpointTol) return false;
  out = x_normalize(p);
  return true;
}

const char* kNoXIncrement = "x1 = x0: the path has no x-increment";

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::FiniteRocCertified: return "finite-roc-certified";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

double certification_threshold(double engine_tol) { return std::max(1e-6, 100.0 * engine_tol); }

bool is_nondegenerate(const std::vector<int>& seq) {
  if (seq.empty()) throw ShapeError("empty sequence");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    long long s = 0;
    for (std::size_t j = i; j < seq.size(); ++j) {
      s += seq[j];
      if (s == 0) return false;
    }
  }
  return true;
}

IdentityReport thm_lineint_battery(const PiecewisePath& p, const BatteryOptions& opt) {
  IdentityReport r = start_report(p, "lineint", opt.engine_tol);
  PiecewisePath q;
  if (!normalized_or_none(p, q)) return not_applicable(std::move(r), kNoXIncrement);
  for (int k = -opt.kmax; k <= opt.kmax; ++k) {
    if (k == 0) continue;
    r.rows.push_back({"S1", {{"k", double(k)}}, std::abs(exp_line_integral(q, freq(k))), false});
  }
  finish(r);
  return r;
}

std::vector<cplx> doubint_b_grid() {
  // Integer multiples of 2 pi i kill both prefactors, so the imaginary points sit between them.
  const double pi = std::numbers::pi;
  std::vector<cplx> g{1.0, -1.0, 2.0, -2.0, cplx(0, pi), cplx(0, -pi)};
  for (double r : {0.25, 0.75, 1.25, 1.75}) {
    g.push_back(cplx(0, kTwoPi * r));
    g.push_back(cplx(0, -kTwoPi * r));
  }
  return g;
}

IdentityReport doubint_battery(const PiecewisePath& p, const BatteryOptions& opt) {
  IdentityReport r = start_report(p, "doubint", opt.engine_tol);
  PiecewisePath q;
  if (!normalized_or_none(p, q)) return not_applicable(std::move(r), kNoXIncrement);
  const int K = opt.pq_bound;
  for (int a = -K; a <= K; ++a)
    for (int b = -K; b <= K; ++b) {
      if (a == 0 || b == 0 || a + b == 0) continue;
      r.rows.push_back({"pq", {{"p", double(a)}, {"q", double(b)}}, 0.0, false});
    }
  const auto grid = doubint_b_grid();
  for (int k = -K; k <= K; ++k) {
    if (k == 0) continue;
    for (cplx b : grid) r.rows.push_back({"doubint", {{"k", double(k)}, {"b_re", b.real()}, {"b_im", b.imag()}}, 0.0, false});
  }
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    auto& row = r.rows[i];
    if (row.id == "pq")
      row.residual = std::abs(pq_double_integral(q, int(row.params[0].second), int(row.params[1].second)));
    else
      row.residual = std::abs(
          doubint_expression(q, int(row.params[0].second), cplx(row.params[1].second, row.params[2].second)));
  }
  finish(r);
  return r;
}

IdentityReport iterint_battery(const PiecewisePath& p, const BatteryOptions& opt) {
  IdentityReport r = start_report(p, "iterint", opt.engine_tol);
  PiecewisePath q;
  if (!normalized_or_none(p, q)) return not_applicable(std::move(r), kNoXIncrement);
  if (opt.mmax > kMaxSmOrder) throw CapacityError("iterint battery supports m <= 6");
  std::vector<std::vector<int>> seqs;
  bool truncated = false;
  std::vector<int> values;
  for (int k = -opt.kbound; k <= opt.kbound; ++k)
    if (k != 0) values.push_back(k);
  for (int m = 1; m <= opt.mmax && !truncated && !values.empty(); ++m) {
    std::vector<int> digit(m, 0);
    while (true) {
      std::vector<int> seq(m);
      for (int j = 0; j < m; ++j) seq[j] = values[digit[j]];
      if (is_nondegenerate(seq)) {
        if (seqs.size() == opt.budget) {
          truncated = true;
          break;
        }
        seqs.push_back(seq);
      }
      int j = m - 1;
      while (j >= 0 && ++digit[j] == static_cast<int>(values.size())) digit[j--] = 0;
      if (j < 0) break;
    }
  }
  r.rows.resize(seqs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    RateWord rates;
    ResidualRow row{"S" + std::to_string(seqs[i].size()), {}, 0.0, false};
    for (std::size_t j = 0; j < seqs[i].size(); ++j) {
      rates.push_back(freq(seqs[i][j]));
      row.params.push_back({"k" + std::to_string(j + 1), double(seqs[i][j])});
    }
    row.residual = std::abs(s_m(q, rates));
    r.rows[i] = std::move(row);
  }
  if (truncated) r.note = "enumeration truncated at " + std::to_string(seqs.size()) + " sequences";
  finish(r);
  return r;
}

IdentityReport gen_lineint_battery(const PiecewisePath& p, const BatteryOptions& opt) {
  IdentityReport r = start_report(p, "genform", std::max(opt.engine_tol, kQuadratureTol));
  PiecewisePath q;
  if (!normalized_or_none(p, q)) return not_applicable(std::move(r), kNoXIncrement);
  if (std::abs(q.end()[1]) > 1e-10) return not_applicable(std::move(r), "y1 != y0: the form identity needs a closed y-coordinate");
  for (int k = -4; k <= 4; ++k) {
    if (k == 0) continue;
    for (int deg = 0; deg <= 2; ++deg) {
      std::vector<cplx> poly(deg + 1, 0.0);
      poly[deg] = 1.0;
      FourierOneForm fx, fy;
      fx.f[k] = poly;
      fy.g[k] = poly;
      r.rows.push_back({"form-dx", {{"k", double(k)}, {"deg", double(deg)}}, std::abs(one_form_integral(q, fx)), false});
      r.rows.push_back({"form-dy", {{"k", double(k)}, {"deg", double(deg)}}, std::abs(one_form_integral(q, fy)), false});
    }
  }
  finish(r);
  return r;
}

IdentityReport all_batteries(const PiecewisePath& p, const BatteryOptions& opt) {
  const IdentityReport parts[] = {thm_lineint_battery(p, opt), doubint_battery(p, opt), iterint_battery(p, opt),
                                  gen_lineint_battery(p, opt)};
  IdentityReport r = start_report(p, "all", opt.engine_tol);
  bool certified = false, all_na = true;
  std::ostringstream note;
  for (const auto& part : parts) {
    r.engine_tol = std::max(r.engine_tol, part.engine_tol);
    r.threshold = std::max(r.threshold, part.threshold);
    certified = certified || part.verdict == Verdict::FiniteRocCertified;
    all_na = all_na && part.verdict == Verdict::NotApplicable;
    if (!part.note.empty()) note << (note.tellp() > 0 ? "; " : "") << part.battery << ": " << part.note;
    for (auto row : part.rows) {
      row.id = part.battery + "/" + row.id;
      r.rows.push_back(std::move(row));
    }
  }
  r.note = note.str();
  r.verdict = certified ? Verdict::FiniteRocCertified : all_na ? Verdict::NotApplicable : Verdict::Inconclusive;
  return r;
}

IdentityReport run_battery(const std::string& name, const PiecewisePath& p, const BatteryOptions& opt) {
  if (name == "lineint") return thm_lineint_battery(p, opt);
  if (name == "doubint") return doubint_battery(p, opt);
  if (name == "iterint") return iterint_battery(p, opt);
  if (name == "genform") return gen_lineint_battery(p, opt);
  if (name == "all") return all_batteries(p, opt);
  throw ShapeError("unknown battery: " + name);
}

ConjugationReport conjugation_decay_check(const PiecewisePath& alpha, int depth) {
  if (alpha.dim() != 2) throw ShapeError("planar alpha required");
  ConjugationReport r;
  const PiecewisePath conj = conjugated_line(alpha);
  r.profile = roc_profile(log_signature(conj, depth));
  r.identity_depth = std::min(depth, 8);
  const int n = r.identity_depth;
  const GradedTensor sa = signature(alpha, n);
  const GradedTensor rhs = mul(mul(sa, log_signature(line({1.0, 0.0}), n)), inv(sa));
  r.identity_residual = max_abs_diff(log_signature(conj, n), rhs);
  return r;
}

double sine_line_integral(const PiecewisePath& p) {
  PiecewisePath q;
  if (!normalized_or_none(p, q)) throw DomainError(kNoXIncrement);
  return std::abs((exp_line_integral(q, freq(1)) - exp_line_integral(q, freq(-1))) / (2.0 * kI));
}

BrownianSanity brownian_sanity(int samples, int steps, std::uint64_t seed0) {
  BrownianSanity s;
  s.samples = samples;
  int hits = 0;
#pragma omp parallel for reduction(+ : hits)
  for (int i = 0; i < samples; ++i)
    if (sine_line_integral(brownian_sample(steps, seed0 + i, 2)) > kBrownianCutoff) ++hits;
  s.exceeding = hits;
  s.fraction = samples > 0 ? double(hits) / samples : 0.0;
  s.certified = s.fraction >= kBrownianRate;
  return s;
}

}  // namespace logsig
