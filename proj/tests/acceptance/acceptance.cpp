// Acceptance gate: one PASS/FAIL line per criterion, each with its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "logsig/cartan.hpp"
#include "logsig/exp_integrals.hpp"
#include "logsig/free_lie.hpp"
#include "logsig/identity_checks.hpp"
#include "logsig/signature.hpp"
#include "logsig/winding.hpp"

using namespace logsig;

namespace {

const cplx kI{0.0, 1.0};
constexpr double kTau = 2.0 * std::numbers::pi;
// Tails below this are roundoff and do not count against monotone decrease.
constexpr double kTailFloor = 1e-14;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[violated: " << what << "] ";
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<void(Outcome&)> body;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void figure_eight_value(Outcome& o) {
  const cplx v = pq_double_integral(figure_eight(), 1, 2);
  const cplx stated{-0.05, -0.08};
  o.detail << "value " << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i; ";
  o.require(std::abs(v.real() - stated.real()) <= 0.01 && std::abs(v.imag() - stated.imag()) <= 0.01,
            "within 0.01 of -0.05-0.08i per component");
  const cplx frozen{0.0, -0.05066059182116886};
  o.require(std::abs(v - frozen) <= 1e-10, "frozen engine fixture to 1e-10");
}

void bch_hausdorff(Outcome& o) {
  const int N = 8;
  const auto v = GradedTensor::letter(2, N, 0), w = GradedTensor::letter(2, N, 1);
  GradedTensor sum(2, N);
  for (int n = 0; n <= N; ++n) sum += hausdorff_hn(n, v, 1);
  const auto b = bch(v, w);
  const double d = max_abs_diff(sum, b);
  o.detail << "series gap " << sci(d) << "; ";
  o.require(d <= 1e-10, "sum of H_n equals BCH at N=8");
  const auto vw = commutator(v, w);
  const GradedTensor printed = v + w + cplx(0.5) * vw + cplx(1.0 / 12) * commutator(v, vw) -
                               cplx(1.0 / 12) * commutator(w, vw);
  const double low = max_abs_diff(with_depth(b, 3), with_depth(printed, 3));
  o.detail << "degree<=3 gap " << sci(low);
  o.require(low <= 1e-10, "degree <= 3 terms");
}

void lineint_consistency(Outcome& o) {
  const PiecewisePath fixtures[] = {line({1.0, 1.0}), conjugated_line(PiecewisePath(2, {{0, 0}, {0.3, 0.6}}))};
  double worst = 0.0;
  for (const auto& p : fixtures)
    for (int k = -5; k <= 5; ++k)
      if (k != 0) worst = std::max(worst, std::abs(exp_line_integral(p, kTau * kI * double(k))));
  o.detail << "max |S1| " << sci(worst);
  o.require(worst <= 1e-10, "|S1(2 pi i k)| <= 1e-10");
}

void two_dim_identity(Outcome& o) {
  const auto p = conjugated_line(PiecewisePath(2, {{0, 0}, {0.3, 0.6}}));
  double worst = 0.0;
  for (cplx lambda : {cplx(0.5), cplx(1, 1), cplx(0, 0.25 * kTau)}) {
    double prev = 0.0;
    bool monotone = true;
    const auto profile = develop_2d_identity_profile(p, lambda, 1.0, 16, 20);
    for (std::size_t i = 0; i < profile.size(); ++i) {
      if (i > 0 && profile[i].tail > prev && profile[i].tail > kTailFloor) monotone = false;
      prev = profile[i].tail;
    }
    worst = std::max(worst, profile.back().residual);
    o.require(monotone, "monotone tail for lambda index");
  }
  o.detail << "max residual at N=20 " << sci(worst);
  o.require(worst <= 1e-6, "residual <= 1e-6");
}

std::vector<PiecewisePath> dm_fixtures() {
  return {figure_eight(), random_normalized_path(3, 2024), x_normalize(brownian_sample(12, 7))};
}

std::vector<cplx> small_rates(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  std::vector<cplx> r(m);
  for (auto& z : r) z = {u(rng), u(rng)};
  return r;
}

void dm_dev_form(Outcome& o) {
  double w2 = 0.0, w3 = 0.0;
  std::uint64_t seed = 50;
  for (const auto& p : dm_fixtures()) {
    w2 = std::max(w2, dm_dev_coeff_residual(p, small_rates(2, seed++), {0, 1}, 14).residual);
    w3 = std::max(w3, dm_dev_coeff_residual(p, small_rates(3, seed++), {0, 1, 2}, 14).residual);
  }
  o.detail << "m=2 " << sci(w2) << ", m=3 " << sci(w3);
  o.require(w2 <= 1e-6, "m=2 <= 1e-6");
  o.require(w3 <= 1e-5, "m=3 <= 1e-5");
}

void fdk(Outcome& o) {
  const auto p = random_normalized_path(3, 77);
  const auto rates = small_rates(3, 99);
  double worst = 0.0;
  for (int k = 1; k <= 3; ++k) worst = std::max(worst, fdk_residual(p, rates, k, 14).residual);
  o.detail << "max residual " << sci(worst);
  o.require(worst <= 1e-6, "residual <= 1e-6");
}

bool sums_bounded(const std::vector<cplx>& c, int s) {
  const int R = static_cast<int>(c.size()) - 1;
  for (int p = 0; p <= R; ++p) {
    cplx acc = 0.0;
    for (int q = p; q <= R; ++q) {
      acc += c[q];
      if (std::abs(acc) < 0.1) return false;
    }
  }
  for (int a = 0; a <= s; ++a)
    for (int b = 0; b <= R - s; ++b) {
      if (a + b == 0) continue;
      cplx acc = 0.0;
      for (int j = s - a; j < s; ++j) acc += c[j];
      for (int j = s + 1; j < s + 1 + b; ++j) acc += c[j];
      if (std::abs(acc) < 0.1) return false;
    }
  return true;
}

void com_lem(Outcome& o) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int R = 1; R <= 6; ++R)
    for (int s = 0; s <= R; ++s)
      for (int done = 0; done < 100;) {
        std::vector<cplx> c(R + 1);
        for (auto& z : c) z = {u(rng), u(rng)};
        if (!sums_bounded(c, s)) continue;
        const cplx rhs = consecutive_shuffle_closed(c, s);
        worst = std::max(worst, std::abs(consecutive_shuffle_sum(c, s) - rhs) / std::abs(rhs));
        ++done;
      }
  o.detail << "max relative error " << sci(worst);
  o.require(worst <= 1e-10, "relative error <= 1e-10");
}

void lie_mon(Outcome& o) {
  long mismatches = 0, words = 0;
  for (int len = 2; len <= 6; ++len)
    for (std::size_t idx = 0; idx < ipow(3, len); ++idx) {
      const Word J = index_word(idx, len, 3);
      WordPoly a = liemon_expand(J), b = right_nested_bracket_poly(J);
      prune(a);
      prune(b);
      ++words;
      if (a != b) ++mismatches;
    }
  o.detail << words << " words, " << mismatches << " mismatches";
  o.require(mismatches == 0, "exact equality");
}

void hn_recur(Outcome& o) {
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (int depth = 1; depth <= 5; ++depth)
      worst = std::max(worst, max_abs_diff(hn_vector_recursive(n, depth), hn_vector_direct(n, depth)));
  o.detail << "max gap " << sci(worst);
  o.require(worst <= 1e-12, "recursion equals direct definition");
}

void invariants(Outcome& o) {
  const PiecewisePath builders[] = {line({0.4, -1.1}),
                                    square_loop(),
                                    figure_eight(),
                                    brownian_sample(64, 3),
                                    regular_polygon(64),
                                    conjugated_line(PiecewisePath(2, {{0, 0}, {0.3, 0.6}})),
                                    random_normalized_path(5, 11)};
  const int N = 6;
  double gl = 0.0, lie = 0.0, chen = 0.0, rev = 0.0;
  bool decay = true;
  for (const auto& p : builders) {
    const auto s = signature(p, N);
    gl = std::max(gl, is_group_like(s, 1e-10).residual);
    lie = std::max(lie, dynkin_is_lie(log_signature(p, N), 1e-10).residual);
    const PathTime mid{p.segment_count() / 2, 0.37};
    chen = std::max(chen, max_abs_diff(mul(signature_interval(p, p.start_time(), mid, N),
                                           signature_interval(p, mid, p.end_time(), N)),
                                       s));
    rev = std::max(rev, max_abs_diff(signature(reverse(p), N), inv(s)));
    double bound = 1.0;
    for (int n = 1; n <= N; ++n) {
      bound *= p.total_variation() / n;
      if (level_norm(s, n) > bound + 1e-12) decay = false;
    }
  }
  o.detail << "group-like " << sci(gl) << ", lie " << sci(lie) << ", chen " << sci(chen) << ", reverse " << sci(rev);
  o.require(gl <= 1e-10, "group-like");
  o.require(lie <= 1e-10, "Dynkin");
  o.require(chen <= 1e-12, "Chen splice");
  o.require(rev <= 1e-12, "reversal inverse");
  o.require(decay, "factorial decay");
}

void winding(Outcome& o) {
  o.require(winding_number(regular_polygon(64), 0.0, 0.0) == 1, "64-gon winding 1");
  const GridSpec coarse{-0.5, 1.5, -0.5, 1.5, 400, 400}, fine{-0.5, 1.5, -0.5, 1.5, 800, 800};
  const GaussianBump centered{0.5, 0.5, 0.15, 1.0};
  const auto c1 = green_residual(square_loop(), centered, centered, coarse);
  const auto c2 = green_residual(square_loop(), centered, centered, fine);
  o.require(c1.residual <= 1e-3, "centered Green residual at 400");
  o.require(c2.residual <= c1.residual || c2.residual <= kTailFloor, "centered refinement decrease");
  // Off-center bumps make both sides nonzero.
  const GaussianBump f{0.6, 0.45, 0.2, 1.0}, g{0.45, 0.6, 0.2, 1.0};
  const auto o1 = green_residual(square_loop(), f, g, coarse);
  const auto o2 = green_residual(square_loop(), f, g, fine);
  o.require(o1.residual <= 1e-3, "off-center Green residual at 400");
  o.require(o2.residual < o1.residual, "off-center refinement decrease");
  const auto field = winding_field(tilde(figure_eight()), {-0.2, 1.2, -0.5, 0.5, 50, 50});
  int nonzero = 0;
  for (std::size_t i = 0; i < field.values.size(); ++i)
    if (!field.masked[i] && field.values[i] != 0) ++nonzero;
  o.require(nonzero == 0, "tilde(figure8) field vanishes");
  o.detail << "green centered " << sci(c1.residual) << "->" << sci(c2.residual) << ", off-center "
           << sci(o1.residual) << "->" << sci(o2.residual) << ", nonzero cells " << nonzero;
}

void neo_classical(Outcome& o) {
  int bad = 0;
  for (int p = 1; p <= 3; ++p)
    for (int m = 0; m <= 30; ++m) {
      const auto s = neo_classical_sides(p, m);
      if (s.lhs > s.rhs * (1 + 1e-12)) ++bad;
    }
  o.detail << bad << " violations";
  o.require(bad == 0, "inequality holds");
}

void brownian(Outcome& o) {
  const auto s = brownian_sanity(200, 1024, 1000);
  o.detail << s.exceeding << "/" << s.samples << " above cutoff";
  o.require(s.certified, ">= 95% above 1e-3");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "figure-eight double integral", 1, figure_eight_value},
      {2, "BCH and Hausdorff series", 5, bch_hausdorff},
      {3, "line-integral consistency on infinite-ROC fixtures", 1, lineint_consistency},
      {4, "2D development identity", 10, two_dim_identity},
      {5, "D_m development coefficient", 60, dm_dev_form},
      {6, "F(D_k) versus S_k", 60, fdk},
      {7, "consecutive shuffle closed form", 5, com_lem},
      {8, "Lie monomial expansion", 10, lie_mon},
      {9, "Hausdorff vector recursion", 10, hn_recur},
      {10, "algebraic invariants", 10, invariants},
      {11, "winding and Green", 30, winding},
      {12, "neo-classical inequality", 1, neo_classical},
      {13, "Brownian sanity", 60, brownian},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "] ";
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(dt <= c.budget_s, "time budget " + std::to_string(static_cast<int>(c.budget_s)) + " s");
    std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.str().c_str(), dt);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
