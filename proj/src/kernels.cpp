#include "logsig/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace logsig::kernels {

namespace {

std::vector<char> nonzero_levels(const GradedTensor& t, int top) {
  std::vector<char> nz(top + 1, 0);
  for (int n = 0; n <= std::min(top, t.depth()); ++n) {
    auto l = t.level(n);
    nz[n] = std::any_of(l.begin(), l.end(), [](const cplx& c) { return c != cplx{}; });
  }
  return nz;
}

}  // namespace

void mul_serial(const GradedTensor& a, const GradedTensor& b, GradedTensor& out, int top) {
  const std::size_t d = a.dim();
  const auto nza = nonzero_levels(a, top);
  const auto nzb = nonzero_levels(b, top);
  for (int n = 0; n <= top; ++n) {
    auto o = out.level(n);
    std::fill(o.begin(), o.end(), cplx{});
    for (int k = 0; k <= n; ++k) {
      if (!nza[k] || !nzb[n - k]) continue;
      auto ak = a.level(k);
      auto bj = b.level(n - k);
      const std::size_t stride = ipow(d, k);
      for (std::size_t j = 0; j < bj.size(); ++j) {
        const cplx bv = bj[j];
        cplx* dst = o.data() + stride * j;
        for (std::size_t i = 0; i < stride; ++i) dst[i] += ak[i] * bv;
      }
    }
  }
}

void mul_omp(const GradedTensor& a, const GradedTensor& b, GradedTensor& out, int top) {
  const std::size_t d = a.dim();
  const auto nza = nonzero_levels(a, top);
  const auto nzb = nonzero_levels(b, top);
  for (int n = 0; n <= top; ++n) {
    auto o = out.level(n);
    std::fill(o.begin(), o.end(), cplx{});
    for (int k = 0; k <= n; ++k) {
      if (!nza[k] || !nzb[n - k]) continue;
      const cplx* ak = a.level(k).data();
      const cplx* bj = b.level(n - k).data();
      const std::size_t stride = ipow(d, k);
      const auto blocks = static_cast<std::int64_t>(b.level_size(n - k));
      cplx* base = o.data();
      // Block j owns output range [stride*j, stride*(j+1)); k stays sequential.
#pragma omp parallel for schedule(static) if (static_cast<std::size_t>(blocks) * stride >= kParallelThreshold)
      for (std::int64_t j = 0; j < blocks; ++j) {
        const cplx bv = bj[j];
        cplx* dst = base + stride * static_cast<std::size_t>(j);
        for (std::size_t i = 0; i < stride; ++i) dst[i] += ak[i] * bv;
      }
    }
  }
}

}  // namespace logsig::kernels
