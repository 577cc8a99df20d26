#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hwm/core/adam.h"
#include "hwm/env/puppet_env.h"
#include "hwm/model/world_model.h"
#include "hwm/planning/mppi.h"

namespace hwm {

struct TrainSettings {
  long steps = 200000;
  long seed_steps = 2500;
  int batch_size = 256;
  int updates_per_step = 1;
  double offline_ratio = 0.5;
  double data_fraction = 1.0;
  long buffer_capacity = 1000000;
  long checkpoint_every = 50000;
  long log_every = 1000;
  // Periodic evaluation during training; 0 disables.
  long eval_every = 0;
  int eval_episodes = 5;
};

struct DataSettings {
  int num_clips = 24;
  int rollouts_per_clip = 20;
  double noise_scale = 0.1;
  long clip_seed = 1;
  std::string path = "runs/data/offline";
};

struct HierarchySettings {
  int k = 1;
  std::string tracker_checkpoint;
  bool freeze_tracker = true;
};

struct TaskSettings {
  std::string name = "gaps";
  // Negative values keep the task defaults.
  double gap_length = -1.0;
  double v_target = -1.0;
  double alpha_head = 1.0;
  int max_steps = 500;
};

struct EvalSettings {
  int episodes = 10;
  // "planner", "policy" (policy-prior mean, no planning) or "scripted"
  // (terrain-blind runner, puppeteer tasks only).
  std::string mode = "planner";
  std::string checkpoint;
  long seed_offset = 1000000;
  bool dump_trajectories = true;
  // Repeat the evaluation over gap lengths 0.1..1.2 m (gaps task only).
  bool gap_sweep = false;
};

// Inputs are comma-separated file lists.
struct MetricsSettings {
  // "tracking": metrics recomputed from trajectory dumps; "naturalness":
  // Table-style eplen/height summary from per-episode logs across seeds.
  std::string kind = "tracking";
  std::string inputs;
  // Episode logs at the intermediate checkpoint (naturalness only).
  std::string ckpt_inputs;
  std::string method = "ours";
  std::string output;
};

struct PlotSettings {
  // "curve": y against x from JSONL records of one type; "trajectory": torso
  // paths over the terrain from an eval dump.
  std::string kind = "curve";
  std::string inputs;
  std::string labels;
  std::string record = "episode";
  std::string phase;  // one per input, or one for all; empty keeps every phase
  std::string x = "step";
  std::string y = "return";
  int smooth = 1;
  std::string title;
  std::string output = "plot.svg";
};

// Every tunable of a run. Keys are dotted paths ("train.steps"); JSON files
// may nest them or spell them flat. Unknown keys raise ConfigError naming the
// key.
struct RunConfig {
  long seed = 0;
  std::string out_dir = "runs/default";
  std::string finetune_source;
  ModelDims model;
  LossWeights loss;
  AdamConfig optim;
  double encoder_lr_scale = 0.3;
  PlannerConfig planner;
  TrainSettings train;
  DataSettings data;
  HierarchySettings hierarchy;
  TaskSettings task;
  EvalSettings eval;
  MetricsSettings metrics;
  PlotSettings plot;

  void Validate() const;
  nlohmann::json ToJson() const;
  static RunConfig FromJson(const nlohmann::json& j);
  // `assignment` is "key=value"; the value is parsed as JSON when possible,
  // otherwise taken as a string.
  void Set(const std::string& assignment);
  void SetValue(const std::string& key, const nlohmann::json& value);

  TaskSpec MakeTaskSpec() const;
  static std::vector<std::string> Keys();
};

RunConfig LoadRunConfig(const std::filesystem::path& path);
void SaveRunConfig(const std::filesystem::path& path, const RunConfig& config);

TerminationWeighting TerminationWeightingFromName(const std::string& name);
const char* TerminationWeightingName(TerminationWeighting w);

}  // namespace hwm
