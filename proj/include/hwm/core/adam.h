#pragma once

#include <string>
#include <vector>

#include "hwm/core/dense_array.h"

namespace hwm {

struct AdamConfig {
  double learning_rate = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double clip_norm = 20.0;
};

// Bias-corrected Adam over a ParamSet with global-norm gradient clipping.
// Learning rates can be overridden per block prefix (e.g. the encoder).
class Adam {
 public:
  Adam(ParamSet& params, AdamConfig config);

  void SetLearningRateForPrefix(const std::string& prefix, double lr);

  // Clips Param::grad in place to `clip_norm`, then applies one update.
  // Returns the gradient norm before clipping. Throws NumericError naming the
  // first block with a non-finite gradient.
  double Step();

  int step_count() const { return step_count_; }
  const AdamConfig& config() const { return config_; }
  const Mat& first_moment(std::size_t i) const { return m_[i]; }
  const Mat& second_moment(std::size_t i) const { return v_[i]; }

 private:
  ParamSet* params_;
  AdamConfig config_;
  int step_count_ = 0;
  std::vector<double> lr_;
  std::vector<Mat> m_;
  std::vector<Mat> v_;
};

// Scales `params` gradients so the global norm is at most `clip_norm`.
// Returns the norm before scaling.
double ClipGradNorm(ParamSet& params, double clip_norm);

}  // namespace hwm
