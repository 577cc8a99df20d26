#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hwm/core/checkpoint.h"
#include "hwm/core/dense_array.h"
#include "hwm/core/mlp.h"
#include "hwm/core/tape.h"
#include "hwm/model/latent_model.h"

namespace hwm {

enum class AgentRole { kTracker, kPuppeteer };

const char* RoleName(AgentRole role);

struct ModelDims {
  int proprio_dim = 18;
  // Zero when the channel is not used by the role.
  int terrain_dim = 0;
  int command_dim = 0;
  int action_dim = 6;
  int encoder_dim = 64;
  int mlp_dim = 128;
  int latent_dim = 64;
  int num_q = 5;
  double log_std_min = -10.0;
  double log_std_max = 2.0;

  int obs_dim() const { return proprio_dim + terrain_dim + command_dim; }
  void Validate(AgentRole role) const;
  bool operator==(const ModelDims&) const = default;
};

// Coefficients of the composite model objective and related constants.
struct LossWeights {
  double consistency = 20.0;
  double reward = 0.1;
  double value = 0.1;
  double termination = 0.1;
  double rho = 0.5;
  double entropy = 1e-4;
  double target_momentum = 0.99;
  double discount = 0.97;

  void Validate() const;
};

// Observation split into its channels: proprioception q, terrain feature v,
// command c. Each is B x dim.
struct Observation {
  Mat q;
  std::optional<Mat> v;
  std::optional<Mat> c;
};

struct PolicyOutput {
  Mat mean;     // pre-squash mean
  Mat log_std;  // in [log_std_min, log_std_max]
};

struct PolicyVars {
  Var mean;
  Var log_std;
};

// Encoder, latent dynamics, reward head, termination head, value ensemble
// with target copies, and policy prior.
class WorldModel : public LatentModel {
 public:
  WorldModel(AgentRole role, ModelDims dims, unsigned long long seed);
  WorldModel(const WorldModel& other);
  WorldModel& operator=(const WorldModel&) = delete;

  AgentRole role() const { return role_; }
  const ModelDims& dims() const { return dims_; }

  int latent_dim() const override { return dims_.latent_dim; }
  int action_dim() const override { return dims_.action_dim; }
  int obs_dim() const override { return dims_.obs_dim(); }

  ParamSet& model_params() { return model_params_; }
  ParamSet& policy_params() { return policy_params_; }
  ParamSet& target_params() { return target_params_; }
  const ParamSet& model_params() const { return model_params_; }
  const ParamSet& policy_params() const { return policy_params_; }
  const ParamSet& target_params() const { return target_params_; }

  // Concatenates the channels required by the role; throws ConfigError when a
  // required channel is missing or has the wrong width.
  Mat FlattenObservation(const Observation& obs) const;
  Mat Encode(const Observation& obs) const;
  Mat EncodeObs(const Mat& obs) const override;

  Mat Next(const Mat& z, const Mat& a) const;
  Vec PredictReward(const Mat& z, const Mat& a) const;
  Vec TerminationProb(const Mat& z, const Mat& a) const;
  Vec Q(int index, const Mat& z, const Mat& a) const;
  Vec QTarget(int index, const Mat& z, const Mat& a) const;
  PolicyOutput Policy(const Mat& z) const;
  Mat PolicyMode(const Mat& z) const;

  void Step(const Mat& z, const Mat& a, Mat* z_next, Vec* reward, Vec* termination) const override;
  Mat SamplePolicy(const Mat& z, std::mt19937_64& rng) const override;
  Vec TerminalValue(const Mat& z, std::mt19937_64& rng) const override;

  // Two distinct ensemble indices drawn uniformly.
  std::array<int, 2> SampleQPair(std::mt19937_64& rng) const;

  // Tape versions used by the losses.
  Var Encode(Tape& tape, Var obs) const;
  Var Next(Tape& tape, Var za) const;
  Var RewardHead(Tape& tape, Var za) const;
  Var TerminationLogit(Tape& tape, Var za) const;
  Var QHead(Tape& tape, int index, Var za, bool frozen) const;
  PolicyVars Policy(Tape& tape, Var z) const;

  // Q_target <- m * Q_target + (1 - m) * Q, blockwise.
  void UpdateTargets(double momentum);

  // Block names are "<role>/model/...", "<role>/policy/...", "<role>/target/...".
  void AppendTo(Archive& archive) const;
  void LoadFrom(const Archive& archive);
  // Stores dims and role in archive.meta.
  void Save(const std::filesystem::path& base, const nlohmann::json& extra_meta = {}) const;
  static WorldModel Load(const std::filesystem::path& path);

  bool ParamsEqual(const WorldModel& other) const;

 private:
  void BuildNetworks(std::mt19937_64& rng);

  AgentRole role_;
  ModelDims dims_;
  ParamSet model_params_;
  ParamSet policy_params_;
  ParamSet target_params_;
  Mlp encoder_;
  Mlp dynamics_;
  Mlp reward_;
  Mlp termination_;
  std::vector<Mlp> q_;
  std::vector<Mlp> q_target_;
  Mlp policy_;
};

// Writes dims to / reads dims from JSON.
nlohmann::json DimsToJson(const ModelDims& dims);
ModelDims DimsFromJson(const nlohmann::json& j);

}  // namespace hwm
