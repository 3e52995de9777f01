#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "helpers.hpp"
#include "logsig/exp_integrals.hpp"
#include "logsig/word_poly.hpp"
#include "oracles.hpp"

using namespace logsig;

namespace {

const cplx kI{0.0, 1.0};
constexpr double kTau = 2.0 * std::numbers::pi;

RateWord random_rates(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  RateWord r(m);
  for (auto& z : r) z = {u(rng), u(rng)};
  return r;
}

// The closed form divides by rate * dx, so it is only compared where every |dx| is moderate.
bool well_conditioned(const PiecewisePath& p) {
  for (int s = 0; s < p.segment_count(); ++s)
    if (std::abs(p.increment(s)[0]) < 0.05) return false;
  return true;
}

}  // namespace

TEST(IteratedExp, TaylorMatchesClosedForm) {
  std::mt19937_64 rng(4);
  int checked = 0;
  for (int trial = 0; checked < 20; ++trial) {
    const auto p = random_normalized_path(2 + trial % 4, 100 + trial);
    if (!well_conditioned(p)) continue;
    ++checked;
    for (int m = 1; m <= 4; ++m) {
      const auto r = random_rates(m, rng);
      const cplx a = iterated_exp_integral(p, r), b = iterated_exp_integral_closed_form(p, r);
      EXPECT_LE(std::abs(a - b), 1e-11 * std::max(1.0, std::abs(b))) << "trial " << trial << " m " << m;
    }
  }
}

TEST(IteratedExp, SteepSegmentsMatchQuadratureOracle) {
  const PiecewisePath p(2, {{0, 0}, {0.7, 0.7}, {0.701, -0.5}, {0.7015, 0.8}, {1, 0}});
  for (const auto& [a, b] : std::vector<std::pair<cplx, cplx>>{{cplx(2.2, -0.3), cplx(2.0, -0.3)}, {kI, -3.0}}) {
    EXPECT_LE(std::abs(iterated_exp_integral(p, {a, b}) - oracle::pair_integral(p, a, b)), 1e-13);
  }
}

TEST(IteratedExp, ResonantRatesMatchClosedForm) {
  // Rate sums that cancel exercise the polynomial branch of the closed form.
  const auto p = figure_eight();
  for (const RateWord& r : {RateWord{kTau * kI, -kTau * kI}, RateWord{0.0, 0.0, 1.0},
                            RateWord{2.0, -2.0, 2.0}, RateWord{kI, kI, -2.0 * kI, 0.0}}) {
    EXPECT_LE(std::abs(iterated_exp_integral(p, r) - iterated_exp_integral_closed_form(p, r)), 1e-12);
  }
}

TEST(IteratedExp, ZeroRatesGiveMonomialSignature) {
  const auto p = testutil::random_path(2, 5, 9);
  double y = 1.0;
  for (int m = 1; m <= 4; ++m) {
    y *= (p.end()[1] - p.start()[1]) / m;
    EXPECT_NEAR(std::abs(iterated_exp_integral(p, RateWord(m, 0.0)) - y), 0.0, 1e-14);
  }
}

TEST(IteratedExp, ShuffleRelation) {
  const auto p = random_normalized_path(4, 5);
  const std::vector<Weight> pool{{0, 1.5 * kI}, {1, -0.7}, {2, 0.0}, {0, cplx(0.3, -2.0)}};
  auto word_of = [&](const Word& w) {
    std::vector<Weight> out;
    for (int a : w) out.push_back(pool[a]);
    return out;
  };
  for (int lu = 1; lu <= 2; ++lu)
    for (int lv = 1; lv <= 4 - lu; ++lv)
      for (std::size_t iu = 0; iu < ipow(4, lu); ++iu)
        for (std::size_t iv = 0; iv < ipow(4, lv); iv += 3) {
          const Word u = index_word(iu, lu, 4), v = index_word(iv, lv, 4);
          cplx rhs = 0.0;
          for (const auto& [w, c] : shuffle(u, v)) rhs += static_cast<double>(c) * iterated_weight_integral(p, word_of(w));
          const cplx lhs = iterated_weight_integral(p, word_of(u)) * iterated_weight_integral(p, word_of(v));
          ASSERT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(lhs)));
        }
}

TEST(IteratedExp, ContiguousTableConsistent) {
  const auto p = random_normalized_path(3, 77);
  const std::vector<Weight> w{{0, kI}, {1, 0.5}, {0, -2.0 * kI}};
  const auto Q = contiguous_iterated_integrals(p, w);
  EXPECT_EQ(Q[1][1], cplx(1.0));
  EXPECT_LE(std::abs(Q[0][3] - iterated_weight_integral(p, w)), 1e-15);
  EXPECT_LE(std::abs(Q[1][3] - iterated_weight_integral(p, {w[1], w[2]})), 1e-13);
}

TEST(PqIntegral, FigureEightAgainstOracle) {
  const auto p = figure_eight();
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {-1, 3}, {1, 1}}) {
    const cplx ref = oracle::pair_integral(p, kTau * kI * double(a), kTau * kI * double(b));
    EXPECT_LE(std::abs(pq_double_integral(p, a, b) - ref), 1e-12) << a << "," << b;
  }
  // Value frozen from the oracle above.
  EXPECT_LE(std::abs(pq_double_integral(p, 1, 2) - cplx(0.0, -0.05066059182116886)), 1e-10);
}

TEST(LineIntegral, FigureEightModesVanish) {
  for (int k : {-2, -1, 1, 2}) EXPECT_LE(std::abs(exp_line_integral(figure_eight(), kTau * kI * double(k))), 1e-14);
}

TEST(LineIntegral, AffineFormsAgree) {
  const auto p = testutil::random_path(2, 6, 31);
  const cplx a{0.4, 2.0};
  EXPECT_LE(std::abs(exp_line_integral(p, a) - exp_affine_line_integral(p, a, 0.0, 1)), 1e-14);
  EXPECT_THROW(exp_affine_line_integral(p, a, 0.0, 2), ShapeError);
}

TEST(LineIntegral, ExactFormIntegratesToEndpoints) {
  // d exp(ax x + ay y) = exp(...)(ax dx + ay dy).
  const auto p = testutil::random_path(2, 5, 12);
  const cplx ax{1.0, -0.5}, ay{0.25, 3.0};
  const cplx lhs = ax * exp_affine_line_integral(p, ax, ay, 0) + ay * exp_affine_line_integral(p, ax, ay, 1);
  const cplx rhs = std::exp(ax * p.end()[0] + ay * p.end()[1]) - std::exp(ax * p.start()[0] + ay * p.start()[1]);
  EXPECT_LE(std::abs(lhs - rhs), 1e-13);
}

TEST(Sm, AntisymmetricAtOrderTwo) {
  const auto p = random_normalized_path(3, 2);
  const cplx a{0.5, 1.0}, b{-1.0, 2.0};
  EXPECT_LE(std::abs(s_m(p, {a, b}) + s_m(p, {b, a})), 1e-14);
}

TEST(Sm, EqualRatesVanish) {
  const auto p = random_normalized_path(4, 6);
  const cplx a{0.3, -1.7};
  for (int m = 2; m <= 4; ++m) EXPECT_LE(std::abs(s_m(p, RateWord(m, a))), 1e-13) << m;
}

TEST(Sm, LogarithmRouteMatchesChenStrichartz) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    const auto p = random_normalized_path(3, 300 + trial);
    for (int m = 1; m <= 4; ++m) {
      const auto r = random_rates(m, rng);
      const cplx a = s_m(p, r), b = s_m_chen_strichartz(p, r);
      EXPECT_LE(std::abs(a - b), 1e-11 * std::max(1.0, std::abs(a))) << "m " << m;
    }
  }
}

TEST(Sm, CapacityAndShape) {
  const auto p = figure_eight();
  EXPECT_THROW(s_m(p, RateWord(7, 1.0)), CapacityError);
  EXPECT_THROW(s_m(p, {}), ShapeError);
}

TEST(Sm, BPathSignatureLogMatches) {
  const auto p = random_normalized_path(3, 41);
  const RateWord r{cplx(0, 2), cplx(-1, 0.5), cplx(0.7, -3)};
  const auto L = log_t(b_path_signature(p, r, 3));
  EXPECT_LE(std::abs(L.coeff({0}) - s_m(p, {r[0]})), 1e-13);
  EXPECT_LE(std::abs(L.coeff({0, 1}) - s_m(p, {r[0], r[1]})), 1e-13);
  EXPECT_LE(std::abs(L.coeff({0, 1, 2}) - s_m(p, r)), 1e-13);
  EXPECT_LE(std::abs(L.coeff({2, 0, 1}) - b_path_log_coefficient(p, r, {2, 0, 1})), 1e-13);
}

TEST(Doubint, ZeroBVanishes) {
  EXPECT_EQ(doubint_expression(figure_eight(), 2, 0.0), cplx(0.0));
}

TEST(Doubint, FigureEightFrozen) {
  const auto p = figure_eight();
  // Oracle values from pair_integral and segment_line.
  EXPECT_LE(std::abs(doubint_expression(p, 3, 1.0) - cplx(-0.020875064599993567, -9.8653587062440604e-05)), 1e-12);
  EXPECT_LE(std::abs(doubint_expression(p, 3, -0.5 * kTau * kI) - cplx(0.0, -0.2130989877588895)), 1e-12);
}

TEST(Doubint, ConjugatedLineVanishes) {
  EXPECT_LE(std::abs(doubint_expression(conjugated_line(square_loop()), 1, 1.0)), 1e-9);
}

TEST(Doubint, Preconditions) {
  EXPECT_THROW(doubint_expression(figure_eight(), 0, 1.0), DomainError);
  EXPECT_THROW(doubint_expression(square_loop(), 1, 1.0), DomainError);
}

TEST(OneForm, ExactOnLine) {
  // g = y exp(2 pi i x) along x = y/4 for y in [0,1].
  const PiecewisePath p(2, {{0, 0}, {0.25, 1}});
  FourierOneForm form;
  form.g[1] = {0.0, 1.0};
  const cplx c = 0.5 * std::numbers::pi * kI;
  const cplx expect = std::exp(c) * (1.0 / c - 1.0 / (c * c)) + 1.0 / (c * c);
  EXPECT_LE(std::abs(one_form_integral(p, form) - expect), 1e-12);
}

TEST(OneForm, ClosedLoopExact) {
  FourierOneForm form;
  form.f[1] = {1.0};
  form.g[0] = {0.0, 1.0};
  EXPECT_LE(std::abs(one_form_integral(regular_polygon(7, 0.4), form)), 1e-12);
}

TEST(OneForm, Preconditions) {
  FourierOneForm bad;
  bad.f[0] = {1.0};
  EXPECT_THROW(one_form_integral(figure_eight(), bad), DomainError);
  FourierOneForm big;
  big.g[1] = std::vector<cplx>(10, 1.0);
  EXPECT_THROW(one_form_integral(figure_eight(), big), ShapeError);
}
