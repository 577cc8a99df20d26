#pragma once

#include <span>

namespace hwm {

inline constexpr double kTrackingSigma = 0.3;

// clip(xdot, 0, v_target).
double RewardVisual(double xdot, double v_target);

// min(|xdot|, v_target) + alpha_head * head_height.
double RewardProprio(double xdot, double head_height, double v_target, double alpha_head);

// exp(-err_sq / (2 sigma^2)) where err_sq is the summed squared distance over
// end-effectors.
double TrackingReward(double err_sq, double sigma = kTrackingSigma);

// Mean Euclidean distance over end-effectors; `err` holds (dx, dz) pairs.
double MeanEffectorError(std::span<const double> err);

}  // namespace hwm
