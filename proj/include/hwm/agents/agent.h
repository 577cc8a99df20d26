#pragma once

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "hwm/data/clips.h"
#include "hwm/env/puppet_env.h"
#include "hwm/env/tracking_env.h"
#include "hwm/model/world_model.h"
#include "hwm/planning/mppi.h"

namespace hwm {

// A world model plus the planner state carried across steps of an episode.
class PlanningAgent {
 public:
  PlanningAgent(const WorldModel* model, PlannerConfig planner, bool use_planner = true);

  void ResetEpisode() { prev_.reset(); }
  // Planner action (or policy-prior action when planning is disabled) for one
  // observation row. Train mode samples, eval mode is deterministic given the
  // seed.
  Vec Act(const Vec& obs, PlanMode mode, unsigned long long seed);

  const WorldModel& model() const { return *model_; }
  bool use_planner() const { return use_planner_; }

 private:
  const WorldModel* model_;
  MppiPlanner planner_;
  bool use_planner_;
  std::optional<ActionSequenceDistribution> prev_;
};

// The environment seen by a training loop.
class EnvAdapter {
 public:
  virtual ~EnvAdapter() = default;
  virtual int obs_dim() const = 0;
  virtual int action_dim() const = 0;
  // Starts episode number `episode`; `rng` drives any per-episode choice.
  virtual void Reset(long episode, std::mt19937_64& rng) = 0;
  virtual Vec Observation() const = 0;
  virtual StepResult Step(const Vec& action) = 0;
  // Extra per-episode fields for the training log.
  virtual nlohmann::json EpisodeInfo() const { return nlohmann::json::object(); }
};

// Tracking episodes with a uniformly sampled clip per episode.
class TrackingAdapter : public EnvAdapter {
 public:
  TrackingAdapter(std::vector<ReferenceClip> clips, BodyParams body = {});

  int obs_dim() const override { return kProprioDim + kCommandDim; }
  int action_dim() const override { return kActionDim; }
  void Reset(long episode, std::mt19937_64& rng) override;
  Vec Observation() const override { return env_.Observation(); }
  StepResult Step(const Vec& action) override;
  nlohmann::json EpisodeInfo() const override;

  void ResetToClip(std::size_t index);
  const TrackingEnv& env() const { return env_; }
  const std::vector<ReferenceClip>& clips() const { return clips_; }

 private:
  std::vector<ReferenceClip> clips_;
  TrackingEnv env_;
  std::size_t clip_index_ = 0;
  std::vector<double> errors_;
  bool terminated_ = false;
};

// Task environment driven through the frozen tracker: each high-level action
// is a command that the tracker follows for k low-level steps. Rewards of the
// enclosed steps are summed; termination ends the high-level step at once.
class HierarchicalEnv : public EnvAdapter {
 public:
  HierarchicalEnv(TaskSpec spec, const WorldModel* tracker, PlannerConfig planner, int k, bool use_planner,
                  unsigned long long seed);

  int obs_dim() const override;
  int action_dim() const override { return kCommandDim; }
  void Reset(long episode, std::mt19937_64& rng) override;
  void ResetWithSeed(unsigned long long terrain_seed);
  Vec Observation() const override { return env_.Observation(); }
  StepResult Step(const Vec& command) override;
  nlohmann::json EpisodeInfo() const override;

  const PuppetEnv& env() const { return env_; }
  // Low-level rewards of the last high-level step.
  const std::vector<double>& last_rewards() const { return last_rewards_; }
  int low_level_steps() const { return env_.t(); }
  double height_sum() const { return height_sum_; }

 private:
  PuppetEnv env_;
  PlanningAgent tracker_;
  int k_;
  unsigned long long seed_;
  long episode_ = 0;
  std::vector<double> last_rewards_;
  double height_sum_ = 0.0;
};

// Terrain-blind straight-running controller: the scripted tracker replaying a
// run gait in a loop, ignoring observations.
class ScriptedRunner {
 public:
  explicit ScriptedRunner(const BodyParams& body = {}, double speed = 2.0, int period = 24);
  void Reset() { t_ = 0; }
  Vec Act();

 private:
  ReferenceClip gait_;
  BodyParams body_;
  int t_ = 0;
};

}  // namespace hwm
