#pragma once

#include <random>
#include <string>
#include <vector>

#include "hwm/core/dense_array.h"
#include "hwm/core/tape.h"

namespace hwm {

enum class HiddenActivation { kLayerNormMish };
enum class OutputActivation { kIdentity, kTanh, kSigmoid };

struct MlpSpec {
  int input_dim = 1;
  std::vector<int> hidden_dims;
  int output_dim = 1;
  HiddenActivation hidden_activation = HiddenActivation::kLayerNormMish;
  OutputActivation output_activation = OutputActivation::kIdentity;
  double layer_norm_eps = 1e-5;

  void Validate() const;
};

// Hidden layers are Linear -> LayerNorm -> Mish; the output layer is Linear
// followed by `output_activation`. Parameters live in a ParamSet owned by the
// caller, under "<prefix>/l<i>/{w,b,ln_g,ln_b}".
class Mlp {
 public:
  Mlp() = default;
  Mlp(MlpSpec spec, ParamSet& params, const std::string& prefix, std::mt19937_64& rng,
      bool zero_output_layer = false);

  // Rebinds to blocks that already exist in `params` (after a deep copy).
  void Bind(ParamSet& params);

  const MlpSpec& spec() const { return spec_; }
  const std::string& prefix() const { return prefix_; }

  Mat Forward(const Mat& x) const;
  // Pre-activation output of the last layer (logits for sigmoid heads).
  Mat ForwardLogits(const Mat& x) const;

  Var Forward(Tape& tape, Var x, bool frozen = false) const;
  Var ForwardLogits(Tape& tape, Var x, bool frozen = false) const;

 private:
  struct Layer {
    Param* w = nullptr;
    Param* b = nullptr;
    Param* ln_g = nullptr;
    Param* ln_b = nullptr;
  };

  MlpSpec spec_;
  std::string prefix_;
  std::vector<Layer> layers_;
};

// Params-explicit variant of Mlp::Forward.
Mat MlpForward(const MlpSpec& spec, const Mlp& mlp, const Mat& input);

}  // namespace hwm
