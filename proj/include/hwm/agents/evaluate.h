#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hwm/agents/config.h"
#include "hwm/agents/logging.h"
#include "hwm/env/puppet_env.h"
#include "hwm/metrics/naturalness.h"
#include "hwm/model/world_model.h"
#include "hwm/planning/mppi.h"

namespace hwm {

// kPolicy replaces planning by the policy-prior mean at both levels.
enum class EvalMode { kPlanner, kPolicy, kScripted };

EvalMode EvalModeFromName(const std::string& name);
const char* EvalModeName(EvalMode mode);

struct TaskEvalOptions {
  int episodes = 10;
  unsigned long long seed = 0;
  // Store per-step rewards and the torso path in the dump.
  bool dump_steps = true;
};

struct TaskEpisode {
  EpisodeResult result;
  unsigned long long terrain_seed = 0;
  double final_x = 0.0;
  // Low-level rewards; they sum to result.episode_return.
  std::vector<double> rewards;
  std::vector<double> path_x;
  std::vector<double> path_z;
};

// Deterministic task episodes. Episode i uses the same terrain for every mode
// and checkpoint given the seed. kScripted ignores both models and drives the
// body with the terrain-blind runner.
std::vector<TaskEpisode> EvaluateTask(const TaskSpec& spec, const WorldModel* puppeteer, const WorldModel* tracker,
                                      const PlannerConfig& planner, int k, EvalMode mode,
                                      const TaskEvalOptions& options, JsonlWriter* dump);

// Score normalized by the best attainable return, v_target * max_steps.
double NormalizedScore(const TaskSpec& spec, double mean_return);

inline const std::vector<double>& SweepGapLengths() {
  static const std::vector<double> lengths = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.1, 1.2};
  return lengths;
}

// The eval subcommand. With a tracker checkpoint it reports tracking metrics
// over the clip set; with a puppeteer checkpoint (or eval.mode=scripted) it
// runs task episodes, writing eval_<mode>.jsonl and eval_<mode>.csv under
// out_dir, plus sweep_<mode>.csv when eval.gap_sweep is set. Returns the
// aggregate record that is also printed.
nlohmann::json RunEvaluation(const RunConfig& config);

}  // namespace hwm
