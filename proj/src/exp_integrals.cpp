#include "logsig/exp_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "logsig/free_lie.hpp"

namespace logsig {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const cplx kI{0.0, 1.0};

void require_planar(const PiecewisePath& p) {
  if (p.dim() != 2) throw ShapeError("planar path required");
}

// e^z - 1 without cancellation for small |z|.
cplx expm1_c(cplx z) {
  const double x = z.real(), y = z.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

// (e^z - 1)/z with the z -> 0 limit 1.
cplx phi1(cplx z) {
  if (std::abs(z) < 1e-5) return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
  return expm1_c(z) / z;
}

using Poly = std::vector<cplx>;

// Truncated product keeping degrees <= K.
Poly mul_trunc(const Poly& a, const Poly& b, int K) {
  Poly out(std::min<std::size_t>(a.size() + b.size() - 1, K + 1), 0.0);
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i] == 0.0) continue;
    const std::size_t lim = std::min(b.size(), out.size() - i);
    for (std::size_t j = 0; j < lim; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

cplx eval_at_one(const Poly& a) {
  cplx s = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) s += a[i];
  return s;
}

// Weight x^p e^{a x} on x = x0 + dx v, v in [0,1], as a degree-K Taylor polynomial in v.
Poly weight_poly(const Weight& w, double x0, double dx, int K) {
  Poly base{1.0};
  for (int i = 0; i < w.power; ++i) base = mul_trunc(base, Poly{x0, dx}, K);
  if (w.rate == 0.0) return base;
  Poly ex(K + 1);
  const cplx z = w.rate * dx;
  ex[0] = std::exp(w.rate * x0);
  for (int t = 1; t <= K; ++t) ex[t] = ex[t - 1] * z / static_cast<double>(t);
  return mul_trunc(base, ex, K);
}

using Table = std::vector<std::vector<cplx>>;

Table identity_table(int n) {
  Table t(n + 1, std::vector<cplx>(n + 1, 0.0));
  for (int i = 0; i <= n; ++i) t[i][i] = 1.0;
  return t;
}

// Contiguous sub-word integrals over one straight piece.
Table local_table(const std::vector<Weight>& word, double x0, double dx, double dy, int K) {
  const int n = static_cast<int>(word.size());
  Table q = identity_table(n);
  if (dy == 0.0) return q;
  std::vector<Poly> w(n);
  for (int k = 0; k < n; ++k) w[k] = weight_poly(word[k], x0, dx, K);
  for (int l = 0; l < n; ++l) {
    Poly g{1.0};
    for (int k = l; k < n; ++k) {
      Poly h = mul_trunc(w[k], g, K);
      Poly integ(std::min<std::size_t>(h.size() + 1, K + 1), 0.0);
      for (std::size_t i = 0; i + 1 < integ.size(); ++i) integ[i + 1] = dy * h[i] / static_cast<double>(i + 1);
      g = std::move(integ);
      q[l][k + 1] = eval_at_one(g);
    }
  }
  return q;
}

void chen_glue(Table& acc, const Table& q) {
  const int n = static_cast<int>(acc.size()) - 1;
  Table out(n + 1, std::vector<cplx>(n + 1, 0.0));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      cplx s = 0.0;
      for (int l = i; l <= j; ++l) s += acc[i][l] * q[l][j];
      out[i][j] = s;
    }
  acc = std::move(out);
}

bool close_rate(cplx a, cplx b) { return std::abs(a - b) <= kRateMergeTol; }

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

ExpPolynomial ExpPolynomial::constant(cplx c) {
  ExpPolynomial e;
  e.add(0, 0.0, c);
  return e;
}

void ExpPolynomial::add(int power, cplx rate, cplx coeff) {
  for (auto& t : terms_)
    if (t.power == power && close_rate(t.rate, rate)) {
      t.coeff += coeff;
      return;
    }
  terms_.push_back({power, rate, coeff});
}

cplx ExpPolynomial::operator()(double s) const {
  cplx v = 0.0;
  for (const auto& t : terms_) v += t.coeff * std::pow(s, t.power) * std::exp(t.rate * s);
  return v;
}

ExpPolynomial ExpPolynomial::times_exp(cplx rate, cplx scale) const {
  ExpPolynomial out;
  for (const auto& t : terms_) out.add(t.power, t.rate + rate, t.coeff * scale);
  return out;
}

ExpPolynomial ExpPolynomial::antiderivative(double zero_tol) const {
  ExpPolynomial out;
  for (const auto& t : terms_) {
    const int q = t.power;
    if (std::abs(t.rate) <= zero_tol) {
      out.add(q + 1, 0.0, t.coeff / static_cast<double>(q + 1));
      continue;
    }
    // int_0^s u^q e^{bu} du = e^{bs} sum_j (-1)^j q!/(q-j)! s^{q-j} / b^{j+1} - (-1)^q q!/b^{q+1}
    const cplx b = t.rate;
    cplx binv_pow = 1.0 / b;
    double falling = 1.0;
    for (int j = 0; j <= q; ++j) {
      const double sign = j % 2 == 0 ? 1.0 : -1.0;
      out.add(q - j, b, t.coeff * sign * falling * binv_pow);
      falling *= (q - j);
      binv_pow /= b;
    }
    const double sign = q % 2 == 0 ? 1.0 : -1.0;
    out.add(0, 0.0, -t.coeff * sign * factorial(q) * std::pow(1.0 / b, q + 1));
  }
  return out;
}

ExpPolynomial& ExpPolynomial::operator+=(const ExpPolynomial& o) {
  for (const auto& t : o.terms_) add(t.power, t.rate, t.coeff);
  return *this;
}

std::vector<std::vector<cplx>> contiguous_iterated_integrals(const PiecewisePath& p,
                                                             const std::vector<Weight>& word) {
  require_planar(p);
  if (word.empty()) throw ShapeError("empty weight word");
  const int n = static_cast<int>(word.size());
  int total_power = 0;
  double rate_sum = 0.0;
  for (const auto& w : word) {
    if (w.power < 0) throw ShapeError("negative weight power");
    total_power += w.power;
    rate_sum += std::abs(w.rate);
  }
  const int K = 22 + total_power + n;
  Table acc = identity_table(n);
  for (int s = 0; s < p.segment_count(); ++s) {
    const double x0 = p.vertex(s)[0], y0 = p.vertex(s)[1];
    const double dx = p.vertex(s + 1)[0] - x0, dy = p.vertex(s + 1)[1] - y0;
    if (dy == 0.0) continue;
    const int pieces = std::max(1, static_cast<int>(std::ceil(rate_sum * std::abs(dx))));
    for (int k = 0; k < pieces; ++k) {
      const double a = x0 + dx * k / pieces;
      chen_glue(acc, local_table(word, a, dx / pieces, dy / pieces, K));
    }
  }
  return acc;
}

cplx iterated_weight_integral(const PiecewisePath& p, const std::vector<Weight>& word) {
  return contiguous_iterated_integrals(p, word)[0][word.size()];
}

cplx iterated_exp_integral(const PiecewisePath& p, const RateWord& rates) {
  std::vector<Weight> word;
  for (cplx a : rates) word.push_back({0, a});
  return iterated_weight_integral(p, word);
}

cplx iterated_exp_integral_closed_form(const PiecewisePath& p, const RateWord& rates) {
  require_planar(p);
  if (rates.empty()) throw ShapeError("empty rate word");
  const std::size_t n = rates.size();
  std::vector<cplx> level(n + 1, 0.0);
  level[0] = 1.0;
  for (int s = 0; s < p.segment_count(); ++s) {
    const double x0 = p.vertex(s)[0];
    const double dx = p.vertex(s + 1)[0] - x0, dy = p.vertex(s + 1)[1] - p.vertex(s)[1];
    if (dy == 0.0) continue;
    double scale = 1.0;
    for (cplx a : rates) scale = std::max(scale, std::abs(a) * std::abs(dx));
    const double zero_tol = 1e-12 * scale;
    ExpPolynomial g = ExpPolynomial::constant(1.0);
    std::vector<cplx> next(level);
    for (std::size_t k = 1; k <= n; ++k) {
      const cplx a = rates[k - 1];
      ExpPolynomial h = g.times_exp(a * dx, dy * std::exp(a * x0)).antiderivative(zero_tol);
      // g_k restricted to the segment: value at segment start plus the running integral of g_{k-1}.
      ExpPolynomial gk = ExpPolynomial::constant(level[k]);
      gk += h;
      next[k] = gk(1.0);
      g = std::move(gk);
    }
    level = std::move(next);
  }
  return level[n];
}

cplx exp_line_integral(const PiecewisePath& p, cplx a) {
  require_planar(p);
  cplx s = 0.0;
  for (int k = 0; k < p.segment_count(); ++k) {
    const Point d = p.increment(k);
    if (d[1] == 0.0) continue;
    s += d[1] * std::exp(a * p.vertex(k)[0]) * phi1(a * d[0]);
  }
  return s;
}

cplx exp_affine_line_integral(const PiecewisePath& p, cplx ax, cplx ay, int component) {
  require_planar(p);
  if (component != 0 && component != 1) throw ShapeError("component must be 0 (dx) or 1 (dy)");
  cplx s = 0.0;
  for (int k = 0; k < p.segment_count(); ++k) {
    const Point d = p.increment(k);
    if (d[component] == 0.0) continue;
    const cplx e0 = ax * p.vertex(k)[0] + ay * p.vertex(k)[1];
    s += d[component] * std::exp(e0) * phi1(ax * d[0] + ay * d[1]);
  }
  return s;
}

cplx b_path_log_coefficient(const PiecewisePath& p, const RateWord& rates, const Word& letters) {
  const int d = static_cast<int>(rates.size());
  const int m = static_cast<int>(letters.size());
  if (m == 0) return 0.0;
  std::vector<Weight> word;
  for (int j : letters) {
    if (j < 0 || j >= d) throw ShapeError("letter outside the rate alphabet");
    word.push_back({0, rates[j]});
  }
  const auto q = contiguous_iterated_integrals(p, word);
  // The log coefficient of a word only involves its contiguous factors.
  GradedTensor sig = GradedTensor::unit(d, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j <= m; ++j) sig.at(Word(letters.begin() + i, letters.begin() + j)) = q[i][j];
  return log_t(sig).coeff(letters);
}

GradedTensor b_path_signature(const PiecewisePath& p, const RateWord& rates, int depth) {
  const int d = static_cast<int>(rates.size());
  GradedTensor sig = GradedTensor::unit(d, depth);
  for (int n = 1; n <= depth; ++n) {
    auto lvl = sig.level(n);
    for (std::size_t idx = 0; idx < lvl.size(); ++idx) {
      RateWord r;
      for (int j : index_word(idx, n, d)) r.push_back(rates[j]);
      lvl[idx] = iterated_exp_integral(p, r);
    }
  }
  return sig;
}

cplx s_m(const PiecewisePath& p, const RateWord& rates) {
  const int m = static_cast<int>(rates.size());
  if (m < 1) throw ShapeError("S_m needs at least one rate");
  if (m > kMaxSmOrder) throw CapacityError("S_m is limited to m <= 6");
  Word letters(m);
  for (int j = 0; j < m; ++j) letters[j] = j;
  return b_path_log_coefficient(p, rates, letters);
}

cplx s_m_chen_strichartz(const PiecewisePath& p, const RateWord& rates) {
  const int m = static_cast<int>(rates.size());
  if (m < 1) throw ShapeError("S_m needs at least one rate");
  if (m > kMaxSmOrder) throw CapacityError("S_m is limited to m <= 6");
  // Collect the weight of each time-to-letter assignment before integrating.
  std::map<Word, double> by_time_order;
  for (const auto& sigma : all_permutations(m)) {
    const double c = chen_strichartz_coeff(sigma);
    for (const auto& [tau, eps] : right_nested_bracket_poly(sigma)) by_time_order[tau] += c * eps;
  }
  cplx total = 0.0;
  for (const auto& [tau, c] : by_time_order) {
    if (c == 0.0) continue;
    RateWord r(m);
    for (int q = 0; q < m; ++q) r[tau[q]] = rates[q];
    total += c * iterated_exp_integral(p, r);
  }
  return total;
}

cplx pq_double_integral(const PiecewisePath& p, int pk, int qk) {
  return iterated_exp_integral(p, {kTwoPi * kI * static_cast<double>(pk), kTwoPi * kI * static_cast<double>(qk)});
}

cplx doubint_expression(const PiecewisePath& p, int k, cplx b) {
  require_planar(p);
  if (k == 0) throw DomainError("k must be nonzero");
  if (std::abs(p.start()[0]) > kEndpointTol || std::abs(p.end()[0] - 1.0) > kEndpointTol)
    throw DomainError("path must satisfy x0 = 0 and x1 = 1");
  const cplx c = kTwoPi * kI * static_cast<double>(k);
  const cplx phi = iterated_exp_integral(p, {c - b, b}) - iterated_exp_integral(p, {b, c - b});
  const cplx psi = exp_line_integral(p, b) * exp_line_integral(p, c - b);
  return (1.0 - std::cosh(b)) * phi + std::sinh(b) * psi;
}

namespace {

cplx eval_mode(const std::map<int, std::vector<cplx>>& modes, double x, double y) {
  cplx s = 0.0;
  for (const auto& [k, poly] : modes) {
    cplx py = 0.0;
    for (std::size_t i = poly.size(); i-- > 0;) py = py * y + poly[i];
    s += py * std::exp(kTwoPi * kI * (static_cast<double>(k) * x));
  }
  return s;
}

void check_modes(const std::map<int, std::vector<cplx>>& modes) {
  for (const auto& [k, poly] : modes)
    if (poly.size() > kMaxOneFormDegree + 1) throw ShapeError("one-form y-degree exceeds 8");
}

}  // namespace

cplx one_form_integral(const PiecewisePath& p, const FourierOneForm& form) {
  require_planar(p);
  check_modes(form.f);
  check_modes(form.g);
  if (auto it = form.f.find(0); it != form.f.end())
    for (cplx c : it->second)
      if (c != 0.0) throw DomainError("the dx coefficient has a nonzero k = 0 mode");
  using Rule = boost::math::quadrature::gauss<double, 32>;
  cplx total = 0.0;
  for (int s = 0; s < p.segment_count(); ++s) {
    const Point a = p.vertex(s);
    const Point d = p.increment(s);
    auto integrand = [&](double u) {
      const double x = a[0] + u * d[0], y = a[1] + u * d[1];
      cplx v = 0.0;
      if (d[0] != 0.0) v += eval_mode(form.f, x, y) * d[0];
      if (d[1] != 0.0) v += eval_mode(form.g, x, y) * d[1];
      return v;
    };
    auto panels = [&](int n) {
      cplx sum = 0.0;
      for (int i = 0; i < n; ++i)
        sum += Rule::integrate(integrand, static_cast<double>(i) / n, static_cast<double>(i + 1) / n);
      return sum;
    };
    cplx prev = panels(1);
    for (int n = 2; n <= 4096; n *= 2) {
      const cplx cur = panels(n);
      const bool done = std::abs(cur - prev) < 1e-10;
      prev = cur;
      if (done) break;
    }
    total += prev;
  }
  return total;
}

}  // namespace logsig
