#pragma once

#include <map>
#include <vector>

#include "logsig/path.hpp"
#include "logsig/tensor.hpp"

namespace logsig {

using RateWord = std::vector<cplx>;

// Weight x^power * exp(rate * x) attached to one dy integrator.
struct Weight {
  int power = 0;
  cplx rate = 0.0;
};

// Finite sum of c * s^p * exp(beta * s).
class ExpPolynomial {
 public:
  struct Term {
    int power;
    cplx rate;
    cplx coeff;
  };

  ExpPolynomial() = default;
  static ExpPolynomial constant(cplx c);

  void add(int power, cplx rate, cplx coeff);
  const std::vector<Term>& terms() const { return terms_; }
  cplx operator()(double s) const;

  ExpPolynomial times_exp(cplx rate, cplx scale) const;
  // Integral from 0 to s; rates with |beta| <= zero_tol are integrated as polynomials.
  ExpPolynomial antiderivative(double zero_tol) const;
  ExpPolynomial& operator+=(const ExpPolynomial& o);

 private:
  std::vector<Term> terms_;
};

inline constexpr double kRateMergeTol = 1e-12;

// Table Q with Q[i][j] (i <= j) the iterated integral of weights i..j-1 over the whole path;
// Q[i][i] = 1.
std::vector<std::vector<cplx>> contiguous_iterated_integrals(const PiecewisePath& p,
                                                             const std::vector<Weight>& word);
cplx iterated_weight_integral(const PiecewisePath& p, const std::vector<Weight>& word);
cplx iterated_exp_integral(const PiecewisePath& p, const RateWord& rates);
// Segmentwise ExpPolynomial recursion; independent of the main engine.
cplx iterated_exp_integral_closed_form(const PiecewisePath& p, const RateWord& rates);

cplx exp_line_integral(const PiecewisePath& p, cplx a);
// Integral of exp(ax * x + ay * y) d(component), component 0 = dx, 1 = dy.
cplx exp_affine_line_integral(const PiecewisePath& p, cplx ax, cplx ay, int component);

inline constexpr int kMaxSmOrder = 6;

// Log-signature coefficient of the word `letters` for the path B with dB^j = exp(rates[j] x) dy.
cplx b_path_log_coefficient(const PiecewisePath& p, const RateWord& rates, const Word& letters);
// Full truncated signature of B (all words), for small alphabets.
GradedTensor b_path_signature(const PiecewisePath& p, const RateWord& rates, int depth);
cplx s_m(const PiecewisePath& p, const RateWord& rates);
cplx s_m_chen_strichartz(const PiecewisePath& p, const RateWord& rates);

cplx pq_double_integral(const PiecewisePath& p, int pk, int qk);
cplx doubint_expression(const PiecewisePath& p, int k, cplx b);

// f dx + g dy with f(x,y) = sum_k f_k(y) exp(2 pi i k x); f_k, g_k are polynomial
// coefficient lists in y (lowest degree first).
struct FourierOneForm {
  std::map<int, std::vector<cplx>> f;
  std::map<int, std::vector<cplx>> g;
};
inline constexpr int kMaxOneFormDegree = 8;
cplx one_form_integral(const PiecewisePath& p, const FourierOneForm& form);

}  // namespace logsig
