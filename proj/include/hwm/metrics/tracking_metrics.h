#pragma once

#include <vector>

namespace hwm {

inline constexpr double kSuccessThreshold = 0.5;
inline constexpr int kMetricStepCap = 100;

// Per-step tracking record of one clip rollout.
struct ClipTrace {
  int clip_id = 0;
  // Steps in the full clip episode (frames - 1).
  int clip_steps = 0;
  // Mean effector distance after each executed step.
  std::vector<double> errors;
  std::vector<double> rewards;
  // True when the body fell before the clip ended.
  bool terminated = false;
};

// Steps that count toward the metrics: min(100, clip_steps).
int EvaluatedSteps(const ClipTrace& t);
// Success iff every evaluated step was executed with error <= 0.5.
bool TraceSuccess(const ClipTrace& t, double threshold = kSuccessThreshold);
double TraceMeanError(const ClipTrace& t);
double TraceComic(const ClipTrace& t);

struct TrackingMetrics {
  double success_rate = 0.0;  // percent of clips
  double tracking_error = 0.0;
  double comic_score = 0.0;
  int clips = 0;
};

// Clip-averaged metrics. Throws ContractError on an empty set.
TrackingMetrics ComputeTrackingMetrics(const std::vector<ClipTrace>& traces);

}  // namespace hwm
