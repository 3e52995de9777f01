#include <gtest/gtest.h>

#include "helpers.hpp"
#include "logsig/free_lie.hpp"
#include "logsig/signature.hpp"
#include "oracles.hpp"

using namespace logsig;

TEST(Signature, LineIsTensorExponential) {
  const Point v{0.3, -1.2, 0.7};
  const auto s = signature(line(v), 6);
  const auto e = exp_t(GradedTensor::vector(3, 6, std::span<const double>(v)));
  EXPECT_LE(max_abs_diff(s, e), 1e-15);
}

TEST(Signature, MatchesWordwiseOracle) {
  const auto p = testutil::random_path(3, 5, 11);
  const auto ref = oracle::to_tensor(oracle::signature(p, 5), 3, 5);
  EXPECT_LE(max_abs_diff(signature(p, 5), ref), 1e-13);
}

TEST(Signature, ClosedPathHasZeroIncrement) {
  const auto s = signature(square_loop(), 4);
  EXPECT_EQ(s.coeff({0}), cplx(0.0));
  EXPECT_EQ(s.coeff({1}), cplx(0.0));
  // Levy area of the counter-clockwise unit square.
  EXPECT_NEAR(s.coeff({0, 1}).real() - s.coeff({1, 0}).real(), 2.0, 1e-15);
  EXPECT_NEAR(s.coeff({0, 1}).real(), 1.0, 1e-15);
}

TEST(Signature, ChenSplice) {
  const auto p = testutil::random_path(2, 6, 3);
  const PathTime mid{2, 0.3};
  const auto a = signature_interval(p, p.start_time(), mid, 7);
  const auto b = signature_interval(p, mid, p.end_time(), 7);
  EXPECT_LE(max_abs_diff(mul(a, b), signature(p, 7)), 1e-13);
}

TEST(Signature, ReverseIsInverse) {
  const auto p = testutil::random_path(2, 4, 8);
  EXPECT_LE(max_abs_diff(signature(reverse(p), 7), inv(signature(p, 7))), 1e-13);
}

TEST(Signature, FactorialDecay) {
  const auto p = testutil::random_path(3, 4, 21);
  const auto s = signature(p, 8);
  const double L = p.total_variation();
  double bound = 1.0;
  for (int n = 1; n <= 8; ++n) {
    bound *= L / n;
    EXPECT_LE(level_norm(s, n), bound * (1 + 1e-12));
  }
}

TEST(Signature, GroupLikeAndLieOnBuilders) {
  for (const auto& p : {square_loop(), figure_eight(), brownian_sample(50, 2), conjugated_line(square_loop())}) {
    const auto s = signature(p, 8);
    EXPECT_TRUE(is_group_like(s, 1e-10).group_like) << p.name();
    EXPECT_TRUE(dynkin_is_lie(log_signature(p, 8), 1e-10).is_lie) << p.name();
  }
}

TEST(AdjointRepresentation, HoldsOnFixtures) {
  EXPECT_LE(verify_adjoint_rep(figure_eight(), 8), 1e-10);
  EXPECT_LE(verify_adjoint_rep(random_normalized_path(4, 17), 8), 1e-10);
  EXPECT_THROW(verify_adjoint_rep(square_loop(), 4), DomainError);
}

TEST(Roc, Verdicts) {
  EXPECT_EQ(roc_profile(log_signature(line({1.0, 0.5}), 8)).verdict, RocVerdict::DegenerateTail);
  EXPECT_EQ(roc_profile(log_signature(square_loop(), 14)).verdict, RocVerdict::FiniteConsistent);
  EXPECT_EQ(roc_profile(log_signature(conjugated_line(square_loop()), 14)).verdict,
            RocVerdict::InfiniteConsistent);
  EXPECT_THROW(roc_profile(log_signature(square_loop(), 5)), DomainError);
}

TEST(Roc, ProfileShape) {
  const auto prof = roc_profile(log_signature(square_loop(), 10));
  ASSERT_EQ(prof.level_norms.size(), 11u);
  EXPECT_NEAR(prof.level_norms[2], 2.0, 1e-14);  // area 1 times [e1,e2]
  EXPECT_NEAR(prof.roots[2], std::sqrt(prof.level_norms[2]), 1e-15);
  EXPECT_EQ(to_string(prof.verdict), "finite-consistent");
}
