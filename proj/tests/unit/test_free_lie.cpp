#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "logsig/free_lie.hpp"
#include "logsig/signature.hpp"
#include "oracles.hpp"

using namespace logsig;

TEST(Bernoulli, KnownValues) {
  EXPECT_DOUBLE_EQ(bernoulli(0), 1.0);
  EXPECT_DOUBLE_EQ(bernoulli(1), -0.5);
  EXPECT_NEAR(bernoulli(2), 1.0 / 6, 1e-15);
  EXPECT_EQ(bernoulli(3), 0.0);
  EXPECT_NEAR(bernoulli(4), -1.0 / 30, 1e-15);
  EXPECT_NEAR(bernoulli(12), -691.0 / 2730, 1e-15);
  EXPECT_NEAR(bernoulli(30) / 8615841276005.0 * 14322, 1.0, 1e-13);
  EXPECT_THROW(bernoulli(65), DomainError);
}

TEST(Bch, MatchesSeriesOracle) {
  const int N = 8;
  oracle::Series prod = oracle::product(oracle::exp_letter(2, N, 0), oracle::exp_letter(2, N, 1), N);
  const auto ref = oracle::to_tensor(oracle::log(prod, N), 2, N);
  EXPECT_LE(max_abs_diff(bch(GradedTensor::letter(2, N, 0), GradedTensor::letter(2, N, 1)), ref), 1e-13);
}

TEST(Bch, LowDegreeTerms) {
  const int N = 3;
  const auto v = GradedTensor::letter(2, N, 0), w = GradedTensor::letter(2, N, 1);
  const auto vw = commutator(v, w);
  GradedTensor expect = v + w + cplx(0.5) * vw + cplx(1.0 / 12) * commutator(v, vw) - cplx(1.0 / 12) * commutator(w, vw);
  EXPECT_LE(max_abs_diff(bch(v, w), expect), 1e-15);
}

TEST(Hausdorff, H1IsBernoulliAdSeries) {
  const int N = 7;
  const auto v = GradedTensor::letter(2, N, 1);
  GradedTensor ref(2, N);
  double f = 1.0;
  for (int m = 0; m < N; ++m) {
    if (m > 0) f *= m;
    ref += cplx(bernoulli(m) / f) * ad_letter_power(0, v, m);
  }
  EXPECT_LE(max_abs_diff(hausdorff_h1(v, 0), ref), 1e-15);
}

TEST(Hausdorff, SeriesSumsToBch) {
  const int N = 8;
  const auto v = GradedTensor::letter(2, N, 0);
  GradedTensor sum(2, N);
  for (int n = 0; n <= N; ++n) sum += hausdorff_hn(n, v, 1);
  EXPECT_LE(max_abs_diff(sum, bch(v, GradedTensor::letter(2, N, 1))), 1e-10);
}

TEST(Hausdorff, PartialDegreeInV) {
  const int N = 7;
  const auto v = GradedTensor::letter(2, N, 1);  // counted by the e2 projection
  for (int n = 1; n <= 4; ++n) {
    const auto h = hausdorff_hn(n, v, 0);
    EXPECT_LE(max_abs_diff(dm_project(h, n), h), 1e-15) << "n = " << n;
    EXPECT_GT(max_abs(h), 0.0);
  }
}

TEST(Hausdorff, RecursionMatchesDirect) {
  for (int n = 1; n <= 3; ++n)
    for (int depth = n + 1; depth <= 5; ++depth)
      EXPECT_LE(max_abs_diff(hn_vector_recursive(n, depth), hn_vector_direct(n, depth)), 1e-12)
          << "n = " << n << " depth = " << depth;
}

TEST(Substitute, IsAlgebraHomomorphism) {
  const auto a = testutil::random_tensor(3, 4, 1, 0.0);
  const auto b = testutil::random_tensor(3, 4, 2, 0.0);
  const auto sym = GradedTensor::word(2, 4, {0, 1, 1}, 2.0) + GradedTensor::word(2, 4, {1}, -1.0);
  const auto got = substitute(sym, {a, b});
  const auto expect = cplx(2.0) * mul(mul(a, b), b) - b;
  EXPECT_LE(max_abs_diff(got, expect), 1e-13);
}

TEST(LieMonomial, ExpansionMatchesNestedBracketExhaustive) {
  for (int len = 2; len <= 6; ++len) {
    const int total = static_cast<int>(ipow(3, len));
    for (int idx = 0; idx < total; ++idx) {
      const Word J = index_word(idx, len, 3);
      WordPoly a = liemon_expand(J), b = right_nested_bracket_poly(J);
      prune(a);
      prune(b);
      ASSERT_EQ(a, b) << "word index " << idx << " length " << len;
    }
  }
}

TEST(NestedBracket, TwoLetters) {
  const auto p = right_nested_bracket_poly({0, 1});
  EXPECT_EQ(p.at({0, 1}), 1);
  EXPECT_EQ(p.at({1, 0}), -1);
}

TEST(Dynkin, LogSignatureIsLieAndWordIsNot) {
  const auto L = log_signature(testutil::random_path(3, 4, 3), 6);
  EXPECT_TRUE(dynkin_is_lie(L, 1e-10).is_lie);
  const auto notlie = GradedTensor::word(2, 3, {0, 1});
  EXPECT_FALSE(dynkin_is_lie(notlie, 1e-10).is_lie);
}

TEST(ChenStrichartz, Coefficients) {
  EXPECT_DOUBLE_EQ(chen_strichartz_coeff({0, 1}), 0.25);
  EXPECT_DOUBLE_EQ(chen_strichartz_coeff({1, 0}), -0.25);
  EXPECT_DOUBLE_EQ(chen_strichartz_coeff({0, 1, 2}), 1.0 / 9);
  EXPECT_DOUBLE_EQ(chen_strichartz_coeff({1, 0, 2}), -1.0 / 18);
  EXPECT_EQ(all_permutations(4).size(), 24u);
  EXPECT_EQ(descent_count({2, 1, 0}), 2);
}

TEST(ChenStrichartz, ReproducesLogSignatureOfThreeSegments) {
  // Distinct letters per segment: the log coefficient of e0 e1 e2 equals the permutation sum.
  const PiecewisePath p(3, {{0, 0, 0}, {0.7, 0, 0}, {0.7, -0.4, 0}, {0.7, -0.4, 1.3}});
  const double I = 0.7 * -0.4 * 1.3;  // the only nonzero ordered integral with distinct times
  const double coeff = log_signature(p, 3).coeff({0, 1, 2}).real();
  double expect = 0.0;
  for (const auto& sigma : all_permutations(3)) {
    const auto rnb = right_nested_bracket_poly(sigma);
    // Time-ordered integral is nonzero only when letter q sits at time q.
    auto it = rnb.find({0, 1, 2});
    if (it != rnb.end()) expect += chen_strichartz_coeff(sigma) * it->second * I;
  }
  EXPECT_NEAR(coeff, expect, 1e-14);
}

namespace {

bool sums_bounded(const std::vector<cplx>& c, int s) {
  const int R = static_cast<int>(c.size()) - 1;
  for (int p = 0; p <= R; ++p) {
    cplx acc = 0.0;
    for (int q = p; q <= R; ++q) {
      acc += c[q];
      if (std::abs(acc) < 0.1) return false;
    }
  }
  // Two-block sums that appear on the enumerated side.
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

}  // namespace

TEST(ConsecutiveShuffle, EnumerationMatchesClosedForm) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int R = 1; R <= 6; ++R)
    for (int s = 0; s <= R; ++s) {
      int done = 0;
      while (done < 100) {
        std::vector<cplx> c(R + 1);
        for (auto& z : c) z = {u(rng), u(rng)};
        if (!sums_bounded(c, s)) continue;
        const cplx lhs = consecutive_shuffle_sum(c, s), rhs = consecutive_shuffle_closed(c, s);
        ASSERT_LE(std::abs(lhs - rhs), 1e-10 * std::abs(rhs)) << "R=" << R << " s=" << s;
        ++done;
      }
    }
}

TEST(ConsecutiveShuffle, SingularInputRejected) {
  EXPECT_THROW(consecutive_shuffle_closed({1.0, 2.0, -2.0}, 0), DomainError);
  EXPECT_THROW(consecutive_shuffle_sum({1.0, 2.0}, 3), DomainError);
}

TEST(NeoClassical, HoldsForSmallP) {
  for (int p = 1; p <= 3; ++p)
    for (int m = 0; m <= 30; ++m) {
      const auto s = neo_classical_sides(p, m);
      EXPECT_LE(s.lhs, s.rhs * (1 + 1e-12)) << "p=" << p << " m=" << m;
    }
}
