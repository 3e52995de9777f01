#pragma once

#include "logsig/tensor.hpp"

namespace logsig::kernels {

// Serial reference and OpenMP variants share one summation order per
// output coefficient, so results agree bit for bit.
void mul_serial(const GradedTensor& a, const GradedTensor& b, GradedTensor& out, int top);
void mul_omp(const GradedTensor& a, const GradedTensor& b, GradedTensor& out, int top);

// Levels at or above this size go through the OpenMP kernel.
inline constexpr std::size_t kParallelThreshold = 4096;

}  // namespace logsig::kernels
