#pragma once

#include <vector>

#include "logsig/tensor.hpp"
#include "logsig/word_poly.hpp"

namespace logsig {

inline constexpr int kBernoulliCache = 64;

// Bernoulli numbers of z/(e^z - 1), so B_1 = -1/2.
double bernoulli(int m);

GradedTensor bch(const GradedTensor& v, const GradedTensor& w);

// ad_w^m(v) for a single letter w.
GradedTensor ad_letter_power(int w_letter, const GradedTensor& v, int m);

// Sum_m B_m/m! ad_w^m(v), truncated at v's depth.
GradedTensor hausdorff_h1(const GradedTensor& v, int w_letter);
// (1/n!)(H_1 d/dw)^n (w); the derivation sees only explicit w letters, v stays opaque.
// n = 0 returns the letter w itself.
GradedTensor hausdorff_hn(int n, const GradedTensor& v, int w_letter);

// Algebra homomorphism from the free algebra on images.size() symbols.
GradedTensor substitute(const GradedTensor& symbolic, const std::vector<GradedTensor>& images);

// Replace r occurrences of `letter` by As[sigma(0)], ..., As[sigma(r-1)] in word order,
// summed over placements and permutations sigma.
GradedTensor symmetrized_derivation_product(const std::vector<GradedTensor>& As, const GradedTensor& target,
                                            int letter = 0);

// Vector Hausdorff series over the alphabet {e1, X_1..X_n} (letter 0 is e1, letter i is X_i).
// The symbols X_i are opaque and carry degree one.
GradedTensor hn_vector_direct(int n, int depth);
GradedTensor hn_vector_recursive(int n, int depth);

WordPoly right_nested_bracket_poly(const Word& J);
GradedTensor right_nested_bracket(const Word& J, int d, int depth);
WordPoly liemon_expand(const Word& J);

using Permutation = std::vector<int>;  // zero-based images
int descent_count(const Permutation& sigma);
double chen_strichartz_coeff(const Permutation& sigma);
std::vector<Permutation> all_permutations(int m);

// Left side by enumeration of the admissible shuffles; c holds c_1..c_{R+1}.
cplx consecutive_shuffle_sum(const std::vector<cplx>& c, int s);
// Product of inverse consecutive sums.
cplx consecutive_shuffle_closed(const std::vector<cplx>& c, int s);

struct LieTest {
  bool is_lie;
  double residual;
};
// Right bracketing x_1...x_n -> [x_1,[x_2,...,x_n]] per level.
GradedTensor dynkin_map(const GradedTensor& x);
LieTest dynkin_is_lie(const GradedTensor& x, double tol);

struct NeoSides {
  double lhs;
  double rhs;
};
NeoSides neo_classical_sides(int p, int m);

}  // namespace logsig
