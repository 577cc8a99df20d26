#pragma once

#include <algorithm>
#include <cmath>

#include "hwm/core/dense_array.h"

namespace hwm {

// x * tanh(softplus(x)). With n = e^x (e^x + 2), tanh(log(1 + e^x)) equals
// n / (n + 2), which needs a single exp and is exact in the saturated tail.
inline double MishScalar(double x) {
  const double e = std::exp(std::min(x, 20.0));
  const double n = e * (e + 2.0);
  return x * n / (n + 2.0);
}

inline double MishGradScalar(double x) {
  const double e = std::exp(std::min(x, 20.0));
  const double n = e * (e + 2.0);
  const double t = n / (n + 2.0);
  const double sig = e / (1.0 + e);
  return t + x * (1.0 - t * t) * sig;
}

inline double SigmoidScalar(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// In-place vectorized forms.
void MishInPlace(Mat& x);
void SigmoidInPlace(Mat& x);
// Per-row zero-mean, unit-variance normalization. Optionally returns the
// per-row inverse standard deviation for the backward pass.
void LayerNormInPlace(Mat& x, double eps, Vec* inv_std = nullptr);

}  // namespace hwm
