#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "hwm/data/offline_dataset.h"
#include "hwm/model/losses.h"

namespace hwm {

struct Transition {
  Vec obs;
  Vec action;
  double reward = 0.0;
  bool terminal = false;
  Vec next_obs;
};

// Ring buffer of transitions tagged with episode ids. Storage grows lazily up
// to `capacity`; afterwards the oldest transitions are overwritten. Add and
// sampling are serialized by an internal mutex.
class ReplayBuffer {
 public:
  ReplayBuffer(int obs_dim, int action_dim, std::size_t capacity = 1'000'000);

  // Starts a new episode; subsequent Add calls belong to it.
  void BeginEpisode();
  void Add(const Transition& t);

  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }
  int obs_dim() const { return obs_dim_; }
  int action_dim() const { return action_dim_; }

  // Logical index 0 is the oldest stored transition.
  Transition Get(std::size_t logical) const;
  std::int64_t EpisodeId(std::size_t logical) const;

  // True when logical..logical+H-1 lie in one episode with no terminal before
  // the last transition.
  bool ValidWindow(std::size_t logical, int horizon) const;

  // Uniformly samples `count` valid windows into rows [row0, row0+count).
  // Windows with interior terminals or crossing episodes are rejected and
  // resampled. Throws ContractError if no valid window is found.
  void SampleInto(int count, int horizon, SequenceBatch& batch, int row0, std::mt19937_64& rng) const;

 private:
  std::size_t Physical(std::size_t logical) const { return (head_ + logical) % capacity_; }
  bool ValidWindowLocked(std::size_t logical, int horizon) const;

  int obs_dim_;
  int action_dim_;
  std::size_t capacity_;
  std::size_t size_ = 0;
  std::size_t head_ = 0;  // physical index of the oldest entry
  std::int64_t episode_ = -1;
  std::vector<double> obs_, next_obs_, actions_, rewards_, terminals_;
  std::vector<std::int64_t> episode_ids_;
  mutable std::mutex mu_;
};

struct MixedBatch {
  SequenceBatch batch;
  int num_offline = 0;
  int num_online = 0;
  // Clip index of every offline row.
  std::vector<int> offline_clips;
};

// Exactly round(batch * offline_ratio) offline windows and the rest online,
// in every call. With an empty online buffer all rows come from offline data
// and `warn` is invoked. offline_ratio = 1 never touches the buffer;
// offline_ratio = 0 requires a non-empty buffer.
MixedBatch SampleMixedBatch(const OfflineSampler* offline, const ReplayBuffer* online, int batch, int horizon,
                            double offline_ratio, std::mt19937_64& rng,
                            const std::function<void(const std::string&)>& warn = {});

}  // namespace hwm
