#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hwm/agents/agent.h"
#include "hwm/agents/config.h"
#include "hwm/agents/logging.h"
#include "hwm/data/offline_dataset.h"
#include "hwm/data/replay_buffer.h"
#include "hwm/model/losses.h"

namespace hwm {

struct TrainLoopOptions {
  std::string phase = "train";
  long steps = 0;
  long seed_steps = 0;
  double offline_ratio = 0.0;
  // Added to logged step numbers (finetuning continues the count).
  long step_offset = 0;
  // Called after step s (1-based, before offset) when s % checkpoint_every == 0.
  std::function<void(long step, double scale)> checkpoint;
  long checkpoint_every = 0;
  // Optional evaluation hook returning extra fields for an "eval" record.
  std::function<nlohmann::json(long step)> evaluate;
  long eval_every = 0;
};

struct TrainSummary {
  long steps = 0;
  long episodes = 0;
  std::vector<double> episode_returns;
  std::vector<int> episode_lengths;
  LossTerms last_terms;
  double scale = 1.0;
};

// Collect-then-update loop shared by both agents. With an environment, each
// step acts (uniformly random during seed steps, planner afterwards), stores
// the transition and runs `updates_per_step` gradient updates on mixed
// batches. Without an environment only offline updates are run.
TrainSummary RunTrainLoop(const RunConfig& config, WorldModel& model, EnvAdapter* env,
                          const OfflineSampler* offline, const TrainLoopOptions& options, JsonlWriter& log,
                          double initial_scale = -1.0);

}  // namespace hwm
