#pragma once

#include <random>
#include <vector>

#include "hwm/core/dense_array.h"
#include "hwm/data/clips.h"
#include "hwm/model/losses.h"

namespace hwm {

// A recorded episode: obs has one more row than actions.
struct Episode {
  int clip_id = -1;
  Mat obs;        // (T+1) x obs_dim
  Mat actions;    // T x A
  Vec rewards;    // T
  Vec terminals;  // T, only the last entry may be 1

  int length() const { return static_cast<int>(actions.rows()); }
  void Validate() const;
  bool operator==(const Episode&) const = default;
};

struct OfflineDataset {
  std::vector<ReferenceClip> clips;
  // rollouts[c] holds the rollouts of clips[c].
  std::vector<std::vector<Episode>> rollouts;
  double noise_scale = 0.0;
  unsigned long long seed = 0;

  int obs_dim() const;
  int action_dim() const;
  std::size_t NumTransitions() const;
  double MeanReward() const;
  bool operator==(const OfflineDataset&) const = default;
};

inline constexpr int kRolloutsPerClip = 20;

// Scripted tracker rollouts with Gaussian action noise, labeled with the
// tracking reward; obs = proprio followed by the command.
OfflineDataset GenerateOfflineRollouts(const std::vector<ReferenceClip>& clips, double noise_scale,
                                       unsigned long long seed, int rollouts_per_clip = kRolloutsPerClip,
                                       const BodyParams& body = {});

// The first ceil(fraction * N) clips with their rollouts.
OfflineDataset SubsetClips(const OfflineDataset& data, double fraction);

// Where a sampled window came from.
struct WindowSource {
  int clip = -1;
  int episode = -1;
  int start = -1;
};

// Uniform clip, then uniform rollout, then uniform window start. Rollouts
// shorter than the horizon are skipped.
class OfflineSampler {
 public:
  OfflineSampler(const OfflineDataset& data, int horizon);

  WindowSource Sample(std::mt19937_64& rng) const;
  // Writes the window into row `row` of the batch.
  void Fill(const WindowSource& w, SequenceBatch& batch, int row) const;
  const OfflineDataset& data() const { return *data_; }

 private:
  const OfflineDataset* data_;
  int horizon_;
  // Per clip, indices of usable rollouts; clips without any are dropped.
  std::vector<std::pair<int, std::vector<int>>> usable_;
};

// Allocates an empty batch of the given shape.
SequenceBatch MakeBatch(int batch, int horizon, int obs_dim, int action_dim);

}  // namespace hwm
