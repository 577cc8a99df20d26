#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hwm/core/dense_array.h"
#include "hwm/model/latent_model.h"

namespace hwm {

// How predicted termination probabilities discount a latent rollout.
enum class TerminationWeighting {
  // w_{t+1} = max(0, w_t * (1 - delta_t)): cumulative survival probability.
  kSurvivalProduct,
  // w_{t+1} = max(0, w_t - delta_t): accumulated termination mass, floored at 0.
  kAdditiveFloor,
  // Termination predictions ignored (plain H-step return).
  kNone,
};

struct PlannerConfig {
  int horizon = 3;
  int iterations = 8;
  int population = 512;
  int prior_samples = 24;
  int elites = 64;
  double temperature = 0.5;
  double discount = 0.97;
  double std_init = 0.5;
  double std_floor = 0.05;
  double std_max = 2.0;
  TerminationWeighting weighting = TerminationWeighting::kSurvivalProduct;

  void Validate() const;
};

// Per-step Gaussian over action sequences, H x A.
struct ActionSequenceDistribution {
  Mat mean;
  Mat std;

  int horizon() const { return static_cast<int>(mean.rows()); }
};

ActionSequenceDistribution InitialSolution(int horizon, int action_dim, double std_init);

// Drops step 0, moves the rest one step earlier and fills the last step with
// (0, std_init).
ActionSequenceDistribution ShiftSolution(const ActionSequenceDistribution& sol, double std_init);

// Scores N action sequences from the same start latent (1 x L). actions[t] is
// N x A. score = sum_t g^t w_t r_t + g^H w_H V(z_H).
Vec ScoreRollouts(const LatentModel& model, const Mat& z0, const std::vector<Mat>& actions, double discount,
                  TerminationWeighting weighting, std::mt19937_64& rng);

// Single-sequence form; `actions` is H x A.
double ScoreRollout(const LatentModel& model, const Mat& z0, const Mat& actions, double discount,
                    TerminationWeighting weighting, std::mt19937_64& rng);

// Normalized exp(temperature * (s - max s)).
Vec EliteWeights(const Vec& scores, double temperature);

enum class PlanMode { kTrain, kEval };

struct PlanResult {
  Vec action;
  ActionSequenceDistribution solution;
  // Best elite score after each iteration.
  std::vector<double> best_scores;
};

// MPPI over the latent model. The population mixes `prior_samples` sequences
// rolled out with the policy prior and Gaussian samples from the current
// distribution; from the second iteration on, the previous best sequence is
// carried over. Elites are reweighted by EliteWeights and the distribution is
// refit to their weighted moments. Eval mode returns the first mean action;
// train mode samples around it.
class MppiPlanner {
 public:
  explicit MppiPlanner(PlannerConfig config);

  const PlannerConfig& config() const { return config_; }

  PlanResult Plan(const LatentModel& model, const Mat& obs, const std::optional<ActionSequenceDistribution>& prev,
                  PlanMode mode, unsigned long long seed) const;

  // Same, starting from an already-encoded latent (1 x L).
  PlanResult PlanFromLatent(const LatentModel& model, const Mat& z0,
                            const std::optional<ActionSequenceDistribution>& prev, PlanMode mode,
                            unsigned long long seed) const;

 private:
  PlannerConfig config_;
};

}  // namespace hwm
