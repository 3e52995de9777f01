#include "logsig/cartan.hpp"

#include <cmath>

#include <omp.h>

#include "logsig/free_lie.hpp"
#include "logsig/signature.hpp"

namespace logsig {

DevelopmentMap::DevelopmentMap(ComplexMatrix a, ComplexMatrix b) : image_e1(std::move(a)), image_e2(std::move(b)) {
  if (image_e1.rows() != image_e1.cols() || image_e2.rows() != image_e2.cols() ||
      image_e1.rows() != image_e2.rows())
    throw ShapeError("development images must be square matrices of one size");
}

ComplexMatrix cartan_element(const std::vector<cplx>& rates) {
  const int m = static_cast<int>(rates.size());
  if (m < 1) throw ShapeError("need at least one rate");
  ComplexMatrix a = ComplexMatrix::Zero(m + 1, m + 1);
  cplx first = 0.0;
  for (int j = 0; j < m; ++j) first += static_cast<double>(m - j) * rates[j];
  a(0, 0) = first / static_cast<double>(m + 1);
  for (int k = 0; k < m; ++k) a(k + 1, k + 1) = a(k, k) - rates[k];
  return a;
}

ComplexMatrix nilpotent_sum(int m) {
  if (m < 1) throw ShapeError("need m >= 1");
  ComplexMatrix d = ComplexMatrix::Zero(m + 1, m + 1);
  for (int k = 0; k < m; ++k) d(k, k + 1) = 1.0;
  return d;
}

ComplexMatrix matrix_unit(int size, int i, int j) {
  ComplexMatrix e = ComplexMatrix::Zero(size, size);
  e(i, j) = 1.0;
  return e;
}

double max_entry(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

namespace {

// Depth-first walk of the word prefix tree; stack[k] holds the image of the current prefix.
struct PrefixWalk {
  const GradedTensor& x;
  const ComplexMatrix* images[2];
  std::vector<ComplexMatrix>& levels;
  std::vector<ComplexMatrix> stack;
  int top;

  PrefixWalk(const GradedTensor& x_, const DevelopmentMap& f, std::vector<ComplexMatrix>& out, int top_)
      : x(x_), images{&f.image_e1, &f.image_e2}, levels(out), stack(top_ + 1), top(top_) {
    for (auto& s : stack) s.resize(f.size(), f.size());
  }

  void visit(int k, std::size_t idx, std::size_t stride) {
    const cplx c = x.level(k)[idx];
    if (c != 0.0) levels[k] += c * stack[k];
    if (k == top) return;
    for (int a = 0; a < 2; ++a) {
      stack[k + 1].noalias() = stack[k] * *images[a];
      visit(k + 1, idx + a * stride, stride * 2);
    }
  }
};

void check_dev_input(const GradedTensor& x) {
  if (x.dim() != 2) throw ShapeError("development expects a two-letter tensor");
}

std::vector<ComplexMatrix> zero_levels(int depth, int size) {
  return std::vector<ComplexMatrix>(depth + 1, ComplexMatrix::Zero(size, size));
}

}  // namespace

std::vector<ComplexMatrix> hat_f_levels_serial(const GradedTensor& x, const DevelopmentMap& f) {
  check_dev_input(x);
  auto levels = zero_levels(x.depth(), f.size());
  PrefixWalk walk(x, f, levels, x.depth());
  walk.stack[0] = ComplexMatrix::Identity(f.size(), f.size());
  walk.visit(0, 0, 1);
  return levels;
}

std::vector<ComplexMatrix> hat_f_levels(const GradedTensor& x, const DevelopmentMap& f) {
  check_dev_input(x);
  const int N = x.depth();
  int split = 0;
  while (split < N && (std::size_t{1} << split) < std::size_t(8) * omp_get_max_threads()) ++split;
  if (split < 4 || omp_get_max_threads() == 1) return hat_f_levels_serial(x, f);

  // Levels below the split are walked serially; each prefix of length `split` owns a subtree.
  auto levels = zero_levels(N, f.size());
  {
    PrefixWalk head(x, f, levels, split - 1);
    head.stack[0] = ComplexMatrix::Identity(f.size(), f.size());
    head.visit(0, 0, 1);
  }
  const int prefixes = 1 << split;
  std::vector<std::vector<ComplexMatrix>> parts(prefixes);
#pragma omp parallel for schedule(dynamic)
  for (int pfx = 0; pfx < prefixes; ++pfx) {
    auto local = zero_levels(N, f.size());
    PrefixWalk walk(x, f, local, N);
    ComplexMatrix prod = ComplexMatrix::Identity(f.size(), f.size());
    for (int i = 0; i < split; ++i) prod = prod * *walk.images[(pfx >> i) & 1];
    walk.stack[split] = prod;
    walk.visit(split, static_cast<std::size_t>(pfx), std::size_t{1} << split);
    parts[pfx] = std::move(local);
  }
  for (int pfx = 0; pfx < prefixes; ++pfx)
    for (int n = split; n <= N; ++n) levels[n] += parts[pfx][n];
  return levels;
}

ComplexMatrix hat_f(const GradedTensor& x, const DevelopmentMap& f) {
  ComplexMatrix s = ComplexMatrix::Zero(f.size(), f.size());
  for (const auto& l : hat_f_levels(x, f)) s += l;
  return s;
}

GradedTensor tilde_log_signature(const PiecewisePath& p, int depth) {
  if (p.dim() != 2) throw ShapeError("planar path required");
  return log_signature(concat(p, line({-1.0, 0.0}), true), depth);
}

DevelopmentMap two_dim_development(cplx lambda, cplx mu) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 0.5;
  a(1, 1) = -0.5;
  return DevelopmentMap(lambda * a, mu * matrix_unit(2, 0, 1));
}

namespace {

void require_normalized(const PiecewisePath& p) {
  if (p.dim() != 2) throw ShapeError("planar path required");
  if (std::abs(p.start()[0]) > kEndpointTol || std::abs(p.end()[0] - 1.0) > kEndpointTol)
    throw DomainError("path must satisfy x0 = 0 and x1 = 1");
}

cplx expm1_c(cplx z) {
  const double s = std::sin(0.5 * z.imag());
  return {std::expm1(z.real()) * std::cos(z.imag()) - 2.0 * s * s, std::exp(z.real()) * std::sin(z.imag())};
}

struct Sums {
  ComplexMatrix total;
  ComplexMatrix head;  // levels up to N-2
};

Sums level_sums(const std::vector<ComplexMatrix>& levels) {
  const int N = static_cast<int>(levels.size()) - 1;
  Sums s{ComplexMatrix::Zero(levels[0].rows(), levels[0].cols()), {}};
  for (int n = 0; n <= N; ++n) {
    if (n == N - 1) s.head = s.total;
    s.total += levels[n];
  }
  if (N < 1) s.head = s.total;
  return s;
}

}  // namespace

std::vector<DevResult> develop_2d_identity_profile(const PiecewisePath& p, cplx lambda, cplx mu, int n_lo,
                                                   int n_hi) {
  require_normalized(p);
  if (n_lo < 0 || n_lo > n_hi) throw ShapeError("need 0 <= n_lo <= n_hi");
  const cplx s1 = exp_line_integral(p, lambda);
  const cplx em1 = expm1_c(lambda);
  if (lambda != 0.0 && std::abs(em1) < kPoleGuard)
    return std::vector<DevResult>(n_hi - n_lo + 1, DevResult{std::abs(lambda * mu * s1), 0.0});
  // The identity is stated for the Hausdorff terms n >= 1, so the H_0 = e1 part is removed.
  GradedTensor L = log_signature(p, n_hi);
  if (n_hi >= 1) L.at({0}) -= 1.0;
  // Truncating L to depth N keeps its levels, so one development serves every N.
  const auto levels = hat_f_levels(L, two_dim_development(lambda, mu));
  const ComplexMatrix rhs = lambda * mu * s1 * matrix_unit(2, 0, 1);
  std::vector<ComplexMatrix> partial{levels[0]};
  for (int n = 1; n <= n_hi; ++n) partial.push_back(partial.back() + levels[n]);
  std::vector<DevResult> out;
  for (int N = n_lo; N <= n_hi; ++N) {
    const ComplexMatrix head = N >= 2 ? partial[N - 2] : N == 1 ? ComplexMatrix::Zero(2, 2) : partial[0];
    out.push_back({max_entry(em1 * partial[N] - rhs), max_entry(em1 * (partial[N] - head))});
  }
  return out;
}

DevResult develop_2d_identity_residual(const PiecewisePath& p, cplx lambda, cplx mu, int depth) {
  return develop_2d_identity_profile(p, lambda, mu, depth, depth).front();
}

cplx cn_coefficient(const PiecewisePath& p, cplx lambda, cplx mu, int depth) {
  require_normalized(p);
  return hat_f(tilde_log_signature(p, depth), two_dim_development(lambda, mu))(0, 1);
}

cplx cn_formula(const PiecewisePath& p, cplx lambda, cplx mu, int depth) {
  require_normalized(p);
  cplx s = 0.0, lp = 1.0;
  double fact = 1.0;
  for (int j = 0; j < depth; ++j) {
    if (j > 0) fact *= j;
    s += lp * iterated_weight_integral(p, {{j, 0.0}}) / fact;
    lp *= lambda;
  }
  return mu * s;
}

DevResult fdk_residual(const PiecewisePath& p, const std::vector<cplx>& rates, int k, int depth) {
  require_normalized(p);
  const int m = static_cast<int>(rates.size());
  if (k < 1 || k > m) throw ShapeError("need 1 <= k <= m");
  const DevelopmentMap f(cartan_element(rates), nilpotent_sum(m));
  const Sums s = level_sums(hat_f_levels(dm_project(tilde_log_signature(p, depth), k), f));
  ComplexMatrix rhs = ComplexMatrix::Zero(m + 1, m + 1);
  for (int j = 0; j + k <= m; ++j)
    rhs(j, j + k) = s_m(p, RateWord(rates.begin() + j, rates.begin() + j + k));
  return {max_entry(s.total - rhs), max_entry(s.total - s.head)};
}

DevResult dm_dev_coeff_residual(const PiecewisePath& p, const std::vector<cplx>& rates, const Word& letters,
                                int depth) {
  require_normalized(p);
  const int m = static_cast<int>(letters.size());
  if (m < 1) throw ShapeError("empty word");
  std::vector<cplx> word_rates;
  for (int j : letters) {
    if (j < 0 || j >= static_cast<int>(rates.size())) throw ShapeError("letter outside the rate alphabet");
    word_rates.push_back(rates[j]);
  }
  const DevelopmentMap f(cartan_element(word_rates), nilpotent_sum(m));
  const Sums s = level_sums(hat_f_levels(dm_project(tilde_log_signature(p, depth), m), f));
  const cplx exact = b_path_log_coefficient(p, rates, letters);
  return {std::abs(s.total(0, m) - exact), std::abs(s.total(0, m) - s.head(0, m))};
}

namespace {

// ad_{e1}^j(v) for j = 0..depth.
std::vector<GradedTensor> ad_powers(const GradedTensor& v, int depth) {
  std::vector<GradedTensor> out{v};
  for (int j = 1; j <= depth; ++j) out.push_back(ad_letter_power(0, out.back(), 1));
  return out;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

GradedTensor bernoulli_ad_sum(const GradedTensor& v, int depth) {
  const auto pw = ad_powers(v, depth);
  GradedTensor out(2, depth);
  for (int m = 0; m < depth; ++m)
    if (bernoulli(m) != 0.0) out += (bernoulli(m) / factorial(m)) * pw[m];
  return out;
}

// int_0^1 e^{x ad e1}(e2) dy truncated at depth.
GradedTensor d1_tilde(const PiecewisePath& p, int depth) {
  const auto e2_pows = ad_powers(GradedTensor::letter(2, depth, 1), depth);
  GradedTensor v(2, depth);
  for (int j = 0; j + 1 <= depth; ++j)
    v += (iterated_weight_integral(p, {{j, 0.0}}) / factorial(j)) * e2_pows[j];
  return v;
}

}  // namespace

GradedTensor d1_closed_form(const PiecewisePath& p, int depth) {
  require_normalized(p);
  return bernoulli_ad_sum(d1_tilde(p, depth), depth);
}

GradedTensor d2_closed_form(const PiecewisePath& p, int depth) {
  require_normalized(p);
  const auto e2_pows = ad_powers(GradedTensor::letter(2, depth, 1), depth);
  GradedTensor dbl(2, depth);
  for (int a = 0; a + 2 <= depth; ++a)
    for (int b = 0; a + b + 2 <= depth; ++b) {
      const cplx w = iterated_weight_integral(p, {{a, 0.0}, {b, 0.0}}) / (factorial(a) * factorial(b));
      dbl += w * commutator(e2_pows[a], e2_pows[b]);
    }
  GradedTensor out = 0.5 * bernoulli_ad_sum(dbl, depth);

  const auto v_pows = ad_powers(d1_tilde(p, depth), depth);
  for (int m = 1; m < depth; ++m) {
    if (bernoulli(m) == 0.0) continue;
    for (int l = 0; l + m + 1 <= depth; ++l) {
      if (bernoulli(l) == 0.0) continue;
      const double c = 0.5 * bernoulli(m) * bernoulli(l) / (factorial(m) * factorial(l));
      for (int k = 1; k <= m; ++k) {
        out += c * ad_letter_power(0, commutator(v_pows[l], v_pows[m - k]), k - 1);
      }
    }
  }
  return out;
}

}  // namespace logsig
