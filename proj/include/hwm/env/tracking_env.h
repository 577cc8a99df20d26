#pragma once

#include <array>

#include "hwm/data/clips.h"
#include "hwm/env/puppet_env.h"

namespace hwm {

// Normalization of command points: (relative position - nominal) / scale.
inline const Vec2 kCommandScale(1.0, 0.5);

// Command for `frames` consecutive reference frames: each effector's
// reference world position relative to the current torso, normalized and
// clipped to [-1, 1]. Layout: frame-major, then effector, then (x, z).
Vec BuildCommand(const BodyParams& body, const Vec2& torso, const std::array<Vec2, kNumEffectors>* ref_points,
                 int frames);

// Tracking task on flat ground. Step t moves the body to frame t+1 of the
// clip; the reward compares world effector positions with the reference
// (root path plus offsets).
class TrackingEnv {
 public:
  explicit TrackingEnv(BodyParams body = {});

  void Reset(const ReferenceClip& clip);
  StepResult Step(const Vec& action);

  const ReferenceClip& clip() const { return *clip_; }
  const PuppetState& state() const { return state_; }
  const BodyParams& body() const { return body_; }
  int t() const { return t_; }
  bool done() const { return done_; }
  // Number of steps in a full episode: min(clip length - 1, 500).
  int horizon() const;

  Vec Proprio() const;
  Vec Command() const;
  // Proprio followed by the command.
  Vec Observation() const;

  // World positions of the reference effectors at `frame` (clamped).
  std::array<Vec2, kNumEffectors> ReferencePoints(int frame) const;
  // Per-effector (dx, dz) between body and reference at the current frame.
  std::array<double, kActionDim> ErrorVector() const;
  double StepError() const;

 private:
  BodyParams body_;
  Terrain terrain_;
  const ReferenceClip* clip_ = nullptr;
  std::vector<Vec2> root_path_;
  PuppetState state_;
  int t_ = 0;
  bool done_ = true;
};

// Feed-forward tracking controller: drives each actuator toward the
// reference offset `lead` frames ahead, which compensates actuator lag.
Vec ScriptedTrackingAction(const TrackingEnv& env, int lead = kClipLead);

}  // namespace hwm
