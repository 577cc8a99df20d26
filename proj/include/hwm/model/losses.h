#pragma once

#include <random>
#include <vector>

#include "hwm/core/adam.h"
#include "hwm/core/tape.h"
#include "hwm/model/world_model.h"

namespace hwm {

// H-step training windows: obs[0..H], actions/rewards/terminals[0..H).
struct SequenceBatch {
  std::vector<Mat> obs;
  std::vector<Mat> actions;
  std::vector<Vec> rewards;
  std::vector<Vec> terminals;

  int horizon() const { return static_cast<int>(actions.size()); }
  int batch_size() const { return obs.empty() ? 0 : static_cast<int>(obs[0].rows()); }
  void Validate(const LatentModel& model) const;
};

struct LatentRollout {
  std::vector<Mat> latents;       // z[1..H]
  std::vector<Vec> rewards;       // r_hat[0..H)
  std::vector<Vec> terminations;  // delta_hat[0..H)
};

// Repeated application of dynamics, reward and termination heads. actions[t]
// is B x A. Throws NumericError naming the step on a non-finite value.
LatentRollout RolloutLatent(const LatentModel& model, const Mat& z0, const std::vector<Mat>& actions);

// r + discount * (1 - terminal) * min(q_a, q_b); terminal entries return r
// without touching the values.
double TdTarget(double reward, double terminal, double q_a, double q_b, double discount);

// Batched TD targets using two sampled target heads at (z', p(z')).
Vec TdTargets(const WorldModel& model, const Vec& rewards, const Vec& terminals, const Mat& next_latents,
              double discount, std::mt19937_64& rng);

// Gradient-free quantities of the model loss: encoded next observations for
// the consistency term and the TD targets.
struct LossTargets {
  std::vector<Mat> next_latents;
  std::vector<Vec> td;
};

LossTargets ComputeTargets(const WorldModel& model, const SequenceBatch& batch, double discount,
                           std::mt19937_64& rng);

struct LossTerms {
  double consistency = 0.0;
  double reward = 0.0;
  double value = 0.0;
  double termination = 0.0;
  double total = 0.0;
};

struct ModelLossGraph {
  Var loss;
  LossTerms terms;
  // Rolled-out latents z[0..H) (values only) for the policy update.
  std::vector<Mat> latents;
  // Observation leaves, present when requested.
  std::vector<Var> obs_inputs;
};

// sum_t rho^t [c_cons * mse(d(z_t, a_t), h(s_{t+1})) + c_r (r_hat - r)^2
//   + c_v sum_i (Q_i - y)^2 + c_term * BCE(delta_hat, delta)], batch-averaged,
// with the targets held fixed. Throws NumericError naming a non-finite term.
ModelLossGraph BuildModelLoss(Tape& tape, const WorldModel& model, const SequenceBatch& batch,
                              const LossTargets& targets, const LossWeights& weights,
                              bool track_obs_inputs = false);

// Running 5%-95% percentile range used to normalize values in the policy
// loss. The first update adopts the batch range; later updates blend with
// `momentum`.
class PercentileScale {
 public:
  explicit PercentileScale(double momentum = 0.01) : momentum_(momentum) {}
  void Update(const Vec& values);
  // Divisor to apply; 1 when the range is below 1e-6.
  double divisor() const { return value_ < 1e-6 ? 1.0 : value_; }
  double value() const { return value_; }
  bool initialized() const { return initialized_; }
  void Restore(double value) {
    value_ = value;
    initialized_ = true;
  }

 private:
  double momentum_;
  double value_ = 1.0;
  bool initialized_ = false;
};

double Percentile(std::vector<double> values, double q);

struct PolicyLossGraph {
  Var loss;
  double mean_q = 0.0;
  double mean_entropy = 0.0;
};

// -(mean_ensemble Q(z, a~) / scale) - c_ent * entropy, rho^t weighted over the
// latents, a~ = tanh(mu + sigma eps). The value heads are frozen. `eps` gives
// the standard-normal draws per time step (B x A); the scale is updated from
// the first step before normalization when `update_scale` is set.
PolicyLossGraph BuildPolicyLoss(Tape& tape, const WorldModel& model, const std::vector<Mat>& latents,
                                const std::vector<Mat>& eps, PercentileScale& scale, const LossWeights& weights,
                                bool update_scale = true);

// Diagonal Gaussian entropy of the pre-squash distribution, summed over dims.
double GaussianEntropy(const Mat& log_std_row);

// Owns the two optimizers and runs one update of model, policy and targets.
class WorldModelTrainer {
 public:
  WorldModelTrainer(WorldModel& model, const LossWeights& weights, const AdamConfig& adam,
                    double encoder_learning_rate);

  struct Stats {
    LossTerms terms;
    double policy_loss = 0.0;
    double grad_norm = 0.0;
    double scale = 1.0;
  };

  Stats Update(const SequenceBatch& batch, std::mt19937_64& rng);

  PercentileScale& scale() { return scale_; }
  const LossWeights& weights() const { return weights_; }

 private:
  WorldModel* model_;
  LossWeights weights_;
  Adam model_optim_;
  Adam policy_optim_;
  PercentileScale scale_;
};

}  // namespace hwm
