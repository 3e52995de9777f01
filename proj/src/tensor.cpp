#include "logsig/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "logsig/kernels.hpp"

namespace logsig {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::size_t word_index(const Word& w, int d) {
  std::size_t idx = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] < 0 || w[i] >= d) throw ShapeError("letter out of range");
    idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(w[i]);
  }
  return idx;
}

Word index_word(std::size_t idx, int length, int d) {
  Word w(length);
  for (int i = 0; i < length; ++i) {
    w[i] = static_cast<int>(idx % static_cast<std::size_t>(d));
    idx /= static_cast<std::size_t>(d);
  }
  return w;
}

GradedTensor::GradedTensor(int d, int depth) : d_(d), depth_(depth) {
  if (d < 1) throw ShapeError("alphabet size must be positive");
  if (d > kMaxAlphabet) throw CapacityError("alphabets above 8 letters are not supported");
  if (depth < 0) throw ShapeError("negative truncation");
  if (ipow(d, depth) > kMaxTopLevelSize)
    throw CapacityError("truncation " + std::to_string(depth) + " exceeds the dense cap for d=" +
                        std::to_string(d));
  offsets_.resize(depth + 2);
  offsets_[0] = 0;
  for (int n = 0; n <= depth; ++n) offsets_[n + 1] = offsets_[n] + ipow(d, n);
  data_.assign(offsets_[depth + 1], cplx{});
}

GradedTensor GradedTensor::unit(int d, int depth) {
  GradedTensor t(d, depth);
  t.data_[0] = 1.0;
  return t;
}

GradedTensor GradedTensor::letter(int d, int depth, int a, cplx c) {
  GradedTensor t(d, depth);
  if (a < 0 || a >= d) throw ShapeError("letter out of range");
  if (depth >= 1) t.level(1)[a] = c;
  return t;
}

GradedTensor GradedTensor::vector(int d, int depth, std::span<const cplx> v) {
  if (static_cast<int>(v.size()) != d) throw ShapeError("vector length differs from alphabet size");
  GradedTensor t(d, depth);
  if (depth >= 1) std::copy(v.begin(), v.end(), t.level(1).begin());
  return t;
}

GradedTensor GradedTensor::vector(int d, int depth, std::span<const double> v) {
  std::vector<cplx> c(v.begin(), v.end());
  return vector(d, depth, std::span<const cplx>(c));
}

GradedTensor GradedTensor::word(int d, int depth, const Word& w, cplx c) {
  GradedTensor t(d, depth);
  if (static_cast<int>(w.size()) <= depth) t.at(w) = c;
  return t;
}

cplx GradedTensor::coeff(const Word& w) const {
  int n = static_cast<int>(w.size());
  if (n > depth_) return 0.0;
  return data_[offsets_[n] + word_index(w, d_)];
}

cplx& GradedTensor::at(const Word& w) {
  int n = static_cast<int>(w.size());
  if (n > depth_) throw ShapeError("word longer than truncation");
  return data_[offsets_[n] + word_index(w, d_)];
}

GradedTensor GradedTensor::truncated(int n) const {
  GradedTensor t = *this;
  if (n < depth_) std::fill(t.data_.begin() + offsets_[std::max(n, -1) + 1], t.data_.end(), cplx{});
  return t;
}

GradedTensor GradedTensor::homogeneous(int n) const {
  GradedTensor t(d_, depth_);
  if (n >= 0 && n <= depth_) std::copy(level(n).begin(), level(n).end(), t.level(n).begin());
  return t;
}

void check_same_shape(const GradedTensor& a, const GradedTensor& b) {
  if (!a.same_shape(b)) throw ShapeError("alphabet size or truncation mismatch");
}

GradedTensor& GradedTensor::operator+=(const GradedTensor& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

GradedTensor& GradedTensor::operator-=(const GradedTensor& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

GradedTensor& GradedTensor::operator*=(cplx c) {
  for (auto& x : data_) x *= c;
  return *this;
}

GradedTensor operator+(GradedTensor a, const GradedTensor& b) { return a += b; }
GradedTensor operator-(GradedTensor a, const GradedTensor& b) { return a -= b; }
GradedTensor operator*(cplx c, GradedTensor a) { return a *= c; }
GradedTensor operator-(GradedTensor a) { return a *= -1.0; }

GradedTensor mul_upto(const GradedTensor& a, const GradedTensor& b, int top) {
  check_same_shape(a, b);
  top = std::min(top, a.depth());
  GradedTensor out(a.dim(), a.depth());
  if (top < 0) return out;
  if (a.level_size(top) >= kernels::kParallelThreshold)
    kernels::mul_omp(a, b, out, top);
  else
    kernels::mul_serial(a, b, out, top);
  return out;
}

GradedTensor mul(const GradedTensor& a, const GradedTensor& b) { return mul_upto(a, b, a.depth()); }

GradedTensor commutator(const GradedTensor& a, const GradedTensor& b) { return mul(a, b) - mul(b, a); }

GradedTensor exp_t(const GradedTensor& x) {
  if (std::abs(x.scalar()) > 1e-13) throw DomainError("exp_t requires a zero scalar component");
  const int N = x.depth();
  GradedTensor q = GradedTensor::unit(x.dim(), N);
  // Horner: the factor nested j deep only feeds levels up to N-j+1.
  for (int j = N; j >= 1; --j) {
    GradedTensor next = mul_upto(x, q, N - j + 1);
    next *= 1.0 / j;
    next.scalar() += 1.0;
    q = std::move(next);
  }
  return q;
}

namespace {

void require_unit_scalar(const GradedTensor& x, const char* op) {
  if (std::abs(x.scalar() - 1.0) > 1e-12)
    throw DomainError(std::string(op) + " requires scalar component 1");
}

}  // namespace

GradedTensor log_t(const GradedTensor& x) {
  require_unit_scalar(x, "log_t");
  const int N = x.depth();
  GradedTensor y = x;
  y.scalar() = 0.0;
  if (N == 0) return y;
  auto c = [](int j) { return (j % 2 == 1 ? 1.0 : -1.0) / j; };
  GradedTensor r = GradedTensor::unit(x.dim(), N);
  r.scalar() = c(N);
  for (int j = N - 1; j >= 1; --j) {
    GradedTensor next = mul_upto(y, r, N - j);
    next.scalar() += c(j);
    r = std::move(next);
  }
  return mul_upto(y, r, N);
}

GradedTensor inv(const GradedTensor& x) {
  require_unit_scalar(x, "inv");
  const int N = x.depth();
  GradedTensor ny = x;
  ny.scalar() = 0.0;
  ny *= -1.0;
  GradedTensor r = GradedTensor::unit(x.dim(), N);
  for (int j = N - 1; j >= 0; --j) {
    GradedTensor next = mul_upto(ny, r, N - j);
    next.scalar() += 1.0;
    r = std::move(next);
  }
  return r;
}

GradedTensor mul_exp_increment(const GradedTensor& x, std::span<const cplx> v) {
  const int d = x.dim();
  if (static_cast<int>(v.size()) != d) throw ShapeError("increment length differs from alphabet size");
  GradedTensor out(d, x.depth());
  out.scalar() = x.scalar();
  std::vector<cplx> t, next;
  for (int n = x.depth(); n >= 1; --n) {
    // Horner in v: x_0 v^n/n! + x_1 v^{n-1}/(n-1)! + ... + x_n.
    t.assign(1, x.scalar());
    for (int j = 1; j <= n; ++j) {
      const double scale = 1.0 / (n - j + 1);
      const std::size_t sz = t.size();
      auto xj = x.level(j);
      next.resize(sz * d);
      for (int a = 0; a < d; ++a) {
        const cplx va = v[a] * scale;
        for (std::size_t i = 0; i < sz; ++i) next[i + sz * a] = t[i] * va + xj[i + sz * a];
      }
      t.swap(next);
    }
    std::copy(t.begin(), t.end(), out.level(n).begin());
  }
  return out;
}

GradedTensor dm_project(const GradedTensor& x, int m) {
  if (x.dim() != 2) throw DomainError("dm_project requires a two-letter alphabet");
  GradedTensor out(2, x.depth());
  for (int n = 0; n <= x.depth(); ++n) {
    auto src = x.level(n);
    auto dst = out.level(n);
    for (std::size_t i = 0; i < src.size(); ++i)
      if (std::popcount(i) == m) dst[i] = src[i];
  }
  return out;
}

double level_norm(const GradedTensor& x, int n) {
  if (n < 0 || n > x.depth()) throw ShapeError("level outside truncation");
  double s = 0.0;
  for (const auto& c : x.level(n)) s += std::abs(c);
  return s;
}

double max_abs_diff(const GradedTensor& a, const GradedTensor& b) {
  check_same_shape(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double max_abs(const GradedTensor& a) {
  double m = 0.0;
  for (const auto& c : a.data()) m = std::max(m, std::abs(c));
  return m;
}

GroupLikeResult is_group_like(const GradedTensor& x, double tol) {
  const int N = x.depth();
  const int d = x.dim();
  double worst = std::abs(x.scalar() - 1.0);
  for (int n = 2; n <= N; ++n) {
    auto lvl = x.level(n);
    for (int la = 1; la < n; ++la) {
      const int lb = n - la;
      auto lu = x.level(la);
      auto lv = x.level(lb);
      // Interleavings are the n-bit masks with la ones (positions taken from u).
      std::vector<unsigned> masks;
      for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == la) masks.push_back(mask);
      for (std::size_t iu = 0; iu < lu.size(); ++iu) {
        Word u = index_word(iu, la, d);
        for (std::size_t iv = 0; iv < lv.size(); ++iv) {
          Word v = index_word(iv, lb, d);
          cplx rhs = 0.0;
          for (unsigned mask : masks) {
            std::size_t idx = 0, place = 1;
            int pu = 0, pv = 0;
            for (int p = 0; p < n; ++p, place *= d)
              idx += place * static_cast<std::size_t>((mask >> p) & 1u ? u[pu++] : v[pv++]);
            rhs += lvl[idx];
          }
          worst = std::max(worst, std::abs(lu[iu] * lv[iv] - rhs));
        }
      }
    }
  }
  return {worst <= tol, worst};
}

GradedTensor with_depth(const GradedTensor& x, int depth) {
  GradedTensor out(x.dim(), depth);
  for (int n = 0; n <= std::min(depth, x.depth()); ++n)
    std::copy(x.level(n).begin(), x.level(n).end(), out.level(n).begin());
  return out;
}

}  // namespace logsig
