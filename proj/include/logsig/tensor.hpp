#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "logsig/errors.hpp"

namespace logsig {

using cplx = std::complex<double>;
using Word = std::vector<int>;

// Dense storage is capped at 2^20 coefficients in the top level, so d=2
// reaches N=20.
inline constexpr std::size_t kMaxTopLevelSize = std::size_t{1} << 20;
inline constexpr int kMaxAlphabet = 8;

std::size_t ipow(std::size_t base, int exp);

// Little-endian base-d index: the first letter is the least significant digit.
std::size_t word_index(const Word& w, int d);
Word index_word(std::size_t idx, int length, int d);

class GradedTensor {
 public:
  GradedTensor() = default;
  GradedTensor(int d, int depth);

  static GradedTensor unit(int d, int depth);
  static GradedTensor letter(int d, int depth, int a, cplx c = 1.0);
  static GradedTensor vector(int d, int depth, std::span<const cplx> v);
  static GradedTensor vector(int d, int depth, std::span<const double> v);
  static GradedTensor word(int d, int depth, const Word& w, cplx c = 1.0);

  int dim() const { return d_; }
  int depth() const { return depth_; }
  std::size_t level_size(int n) const { return ipow(d_, n); }
  std::size_t offset(int n) const { return offsets_[n]; }

  std::span<cplx> level(int n) { return {data_.data() + offsets_[n], level_size(n)}; }
  std::span<const cplx> level(int n) const { return {data_.data() + offsets_[n], level_size(n)}; }

  cplx scalar() const { return data_[0]; }
  cplx& scalar() { return data_[0]; }

  // Coefficient of a word; words longer than the truncation read as 0.
  cplx coeff(const Word& w) const;
  cplx& at(const Word& w);

  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  // Zero every level above n (depth unchanged).
  GradedTensor truncated(int n) const;
  GradedTensor homogeneous(int n) const;

  GradedTensor& operator+=(const GradedTensor& o);
  GradedTensor& operator-=(const GradedTensor& o);
  GradedTensor& operator*=(cplx c);

  bool same_shape(const GradedTensor& o) const { return d_ == o.d_ && depth_ == o.depth_; }

 private:
  int d_ = 0;
  int depth_ = -1;
  std::vector<std::size_t> offsets_;
  std::vector<cplx> data_;
};

GradedTensor operator+(GradedTensor a, const GradedTensor& b);
GradedTensor operator-(GradedTensor a, const GradedTensor& b);
GradedTensor operator*(cplx c, GradedTensor a);
GradedTensor operator-(GradedTensor a);

void check_same_shape(const GradedTensor& a, const GradedTensor& b);

GradedTensor mul(const GradedTensor& a, const GradedTensor& b);
// Product whose levels above `top` are left zero.
GradedTensor mul_upto(const GradedTensor& a, const GradedTensor& b, int top);
GradedTensor commutator(const GradedTensor& a, const GradedTensor& b);

GradedTensor exp_t(const GradedTensor& x);
GradedTensor log_t(const GradedTensor& x);
GradedTensor inv(const GradedTensor& x);

// x ⊗ exp(v) for a level-one increment v, without forming exp(v).
GradedTensor mul_exp_increment(const GradedTensor& x, std::span<const cplx> v);

GradedTensor dm_project(const GradedTensor& x, int m);
double level_norm(const GradedTensor& x, int n);
double max_abs_diff(const GradedTensor& a, const GradedTensor& b);
double max_abs(const GradedTensor& a);

struct GroupLikeResult {
  bool group_like;
  double residual;
};
GroupLikeResult is_group_like(const GradedTensor& x, double tol);

// Re-embed a tensor at another truncation (levels beyond the new depth dropped).
GradedTensor with_depth(const GradedTensor& x, int depth);

}  // namespace logsig
