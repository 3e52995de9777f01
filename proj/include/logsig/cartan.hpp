#pragma once

#include <vector>

#include <Eigen/Dense>

#include "logsig/exp_integrals.hpp"
#include "logsig/path.hpp"
#include "logsig/tensor.hpp"

namespace logsig {

using ComplexMatrix = Eigen::MatrixXcd;

// Images of e1 and e2 under a linear map into square matrices.
struct DevelopmentMap {
  ComplexMatrix image_e1;
  ComplexMatrix image_e2;
  DevelopmentMap(ComplexMatrix a, ComplexMatrix b);
  int size() const { return static_cast<int>(image_e1.rows()); }
};

// Traceless diagonal A with A_kk - A_{k+1,k+1} = rates[k].
ComplexMatrix cartan_element(const std::vector<cplx>& rates);
// Superdiagonal of ones, size m+1.
ComplexMatrix nilpotent_sum(int m);
// Matrix unit E_{ij}, zero-based indices.
ComplexMatrix matrix_unit(int size, int i, int j);
double max_entry(const ComplexMatrix& m);

// Contribution of each level of x; entry n is the image of the degree-n part.
std::vector<ComplexMatrix> hat_f_levels(const GradedTensor& x, const DevelopmentMap& f);
std::vector<ComplexMatrix> hat_f_levels_serial(const GradedTensor& x, const DevelopmentMap& f);
ComplexMatrix hat_f(const GradedTensor& x, const DevelopmentMap& f);

// Value of a truncated series development together with |value_N - value_{N-2}|.
struct DevResult {
  double residual = 0.0;
  double tail = 0.0;
};

// Log-signature of the path followed by the step -e1.
GradedTensor tilde_log_signature(const PiecewisePath& p, int depth);

// Development A = diag(1/2, -1/2), D = E_12 with e1 -> lambda A, e2 -> mu D.
DevelopmentMap two_dim_development(cplx lambda, cplx mu);
inline constexpr double kPoleGuard = 1e-6;
// Near lambda = 2k pi i (|e^lambda - 1| < kPoleGuard) the truncated series is not
// evaluated and the residual is |lambda mu S1(lambda)|.
DevResult develop_2d_identity_residual(const PiecewisePath& p, cplx lambda, cplx mu, int depth);
// Results for every truncation N in [n_lo, n_hi] from a single depth-n_hi development.
std::vector<DevResult> develop_2d_identity_profile(const PiecewisePath& p, cplx lambda, cplx mu, int n_lo, int n_hi);
// Coefficient of D in the development of the truncated tilde log-signature, and its
// closed form mu * sum_{j<N} lambda^j int x^j/j! dy.
cplx cn_coefficient(const PiecewisePath& p, cplx lambda, cplx mu, int depth);
cplx cn_formula(const PiecewisePath& p, cplx lambda, cplx mu, int depth);

DevResult fdk_residual(const PiecewisePath& p, const std::vector<cplx>& rates, int k, int depth);
// `letters` indexes into `rates` (zero-based); the development uses rates[letters[k]].
DevResult dm_dev_coeff_residual(const PiecewisePath& p, const std::vector<cplx>& rates, const Word& letters,
                                int depth);

// Series forms of D1 L and D2 L built from moments int x^m dy and int int x_s^m x_t^l dy dy.
GradedTensor d1_closed_form(const PiecewisePath& p, int depth);
GradedTensor d2_closed_form(const PiecewisePath& p, int depth);

}  // namespace logsig
