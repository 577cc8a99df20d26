#pragma once

#include <random>

#include "hwm/core/dense_array.h"

namespace hwm {

// The batched latent-space interface the planner needs. WorldModel implements
// it; tests substitute analytic stubs.
class LatentModel {
 public:
  virtual ~LatentModel() = default;

  virtual int latent_dim() const = 0;
  virtual int action_dim() const = 0;
  virtual int obs_dim() const = 0;

  // obs: B x obs_dim -> B x latent_dim.
  virtual Mat EncodeObs(const Mat& obs) const = 0;
  // One latent transition for every row: next latent, predicted reward and
  // predicted termination probability in (0, 1).
  virtual void Step(const Mat& z, const Mat& a, Mat* z_next, Vec* reward, Vec* termination) const = 0;
  // Samples a (tanh-squashed) action from the policy prior for every row.
  virtual Mat SamplePolicy(const Mat& z, std::mt19937_64& rng) const = 0;
  // Min over two randomly chosen target value heads evaluated at (z, p(z)).
  virtual Vec TerminalValue(const Mat& z, std::mt19937_64& rng) const = 0;
};

}  // namespace hwm
