#pragma once

#include <filesystem>
#include <functional>
#include <vector>

#include "hwm/agents/config.h"
#include "hwm/agents/logging.h"
#include "hwm/data/offline_dataset.h"
#include "hwm/env/tracking_env.h"
#include "hwm/metrics/tracking_metrics.h"
#include "hwm/model/world_model.h"

namespace hwm {

// Tracker inputs are proprioception plus the command; actions drive the
// three effector actuators.
ModelDims TrackerDims(const RunConfig& config);

// Clips and scripted rollouts described by config.data.
OfflineDataset GenerateDataset(const RunConfig& config);
// Reads config.data.path when it exists (and checks that it matches the data
// settings), otherwise generates the dataset and writes it there.
OfflineDataset LoadOrGenerateDataset(const RunConfig& config);

// Chooses the action at the current state of a tracking episode.
using TrackingPolicy = std::function<Vec(const TrackingEnv& env, int clip_index)>;

// Runs one episode per clip for at most min(100, clip steps) steps. When
// `dump` is open it receives one "clip" record and one "step" record per
// executed step (error vector, error, reward).
std::vector<ClipTrace> RolloutTracking(const std::vector<ReferenceClip>& clips, const TrackingPolicy& policy,
                                       JsonlWriter* dump = nullptr, const BodyParams& body = {});

// Planner (or policy-prior) tracking policy for `model`; deterministic for a
// fixed seed.
TrackingPolicy ModelTrackingPolicy(const WorldModel& model, const PlannerConfig& planner, bool use_planner,
                                   unsigned long long seed);

// Recomputes the metrics from a trajectory dump written by RolloutTracking.
TrackingMetrics TrackingMetricsFromDump(const std::vector<nlohmann::json>& records);

struct TrackerRunResult {
  std::filesystem::path checkpoint;
  TrackingMetrics metrics;
};

// Offline+online tracker training (pure offline when train.offline_ratio is
// 1), followed by a planner evaluation on every clip of the dataset. Writes
// config.json, log.jsonl, checkpoints/, final.{json,bin}, eval_tracking.jsonl
// and metrics.json under config.out_dir.
TrackerRunResult TrainTracker(const RunConfig& config);

}  // namespace hwm
