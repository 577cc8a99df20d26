#pragma once

#include <string>
#include <vector>

#include "hwm/core/dense_array.h"
#include "hwm/env/puppet_env.h"

namespace hwm {

// Frames of look-ahead used by the gait performer and the scripted tracker.
inline constexpr int kClipLead = 3;

// One synthetic reference motion. Row f of `offsets` holds the torso-relative
// targets (x, z) of head, left foot and right foot; the root follows
// `torso_vel` horizontally and `torso_height` above flat ground. The root path
// is recorded from a simulated performance of the scripted gait.
struct ReferenceClip {
  int id = 0;
  std::string family;
  int period = 0;  // frames per gait cycle, 0 for static clips
  Mat offsets;     // L x 6
  Vec torso_vel;   // L
  Vec torso_height;

  int length() const { return static_cast<int>(offsets.rows()); }
  void Validate(const BodyParams& body, int min_frames) const;
  bool operator==(const ReferenceClip& o) const;
};

inline const std::vector<std::string>& GaitFamilies() {
  static const std::vector<std::string> f = {"stand", "walk", "run", "hop"};
  return f;
}

struct GaitShape {
  double speed = 0.0;
  int period = 0;  // frames; 0 gives a static pose
  double lift = 0.0;
  double push = 0.0;
  bool in_phase = false;
  Vec2 head_shift = Vec2::Zero();
  double head_bob = 0.0;
};

// Periodic effector targets for the gait; the root path is recorded by
// simulating the feed-forward controller on flat ground.
ReferenceClip BuildGaitClip(int id, const std::string& family, const GaitShape& gait, int length,
                            const BodyParams& body = {});

// Scripted gait families assigned round-robin by index, with randomized
// speed, period and length. Deterministic in seed.
std::vector<ReferenceClip> GenerateClips(int count, unsigned long long seed, const BodyParams& body = {});

// Root position of the reference at frame f, starting from `start`.
Vec2 ReferenceRoot(const ReferenceClip& clip, int frame, const Vec2& start, double dt);

}  // namespace hwm
