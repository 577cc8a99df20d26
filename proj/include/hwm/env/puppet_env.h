#pragma once

#include <array>
#include <random>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "hwm/core/dense_array.h"
#include "hwm/env/terrain.h"

namespace hwm {

using Vec2 = Eigen::Vector2d;

inline constexpr int kNumEffectors = 3;  // head, left foot, right foot
inline constexpr int kHead = 0;
inline constexpr int kFootL = 1;
inline constexpr int kFootR = 2;
inline constexpr int kActionDim = 2 * kNumEffectors;
inline constexpr int kProprioDim = 3 + 4 * kNumEffectors + kNumEffectors;
inline constexpr int kTerrainDim = 16;
inline constexpr int kCommandHorizon = 3;
inline constexpr int kCommandDim = 2 * kNumEffectors * kCommandHorizon;

// Torso point mass carrying three massless end-effectors. Each effector
// offset follows a critically damped second-order actuator toward
// nominal + action * half_range. Feet touch the ground through a penalty
// spring-damper with Coulomb-limited viscous friction.
struct BodyParams {
  double gravity = 9.81;
  double dt = 0.02;
  double mass = 1.0;
  double actuator_omega = 15.0;
  double ground_stiffness = 500.0;
  double ground_damping = 30.0;
  double friction_damping = 20.0;
  double friction_coef = 1.0;
  double max_contact_force = 100.0;
  std::array<Vec2, kNumEffectors> nominal = {Vec2(0.0, 0.3), Vec2(-0.1, -0.7), Vec2(0.1, -0.7)};
  std::array<Vec2, kNumEffectors> half_range = {Vec2(0.2, 0.3), Vec2(0.5, 0.3), Vec2(0.5, 0.3)};
  // Terrain feature: heights sampled over [0, feature_range] ahead of the
  // torso, relative to the ground under it, divided by feature_scale.
  double feature_range = 4.0;
  double feature_scale = 0.5;

  void Validate() const;
  // Torso height above flat ground at static equilibrium with nominal feet.
  double RestHeight() const;
  Vec2 Target(int effector, double a_x, double a_z) const;
};

struct TaskSpec {
  TaskId task = TaskId::kStand;
  TerrainParams terrain;
  BodyParams body;
  double v_target = 6.0;
  double alpha_head = 1.0;
  int max_steps = 500;

  // Per-task defaults: v_target 0 for stand, 2 for walk, 6 otherwise.
  static TaskSpec Default(TaskId task);
  void Validate() const;
};

nlohmann::json TaskSpecToJson(const TaskSpec& spec);
// {task, terrain: {...}, v_target, alpha_head, max_steps, gap_length}. A
// gap_length override pins both ends of the gap range. Unknown keys raise
// ConfigError.
TaskSpec TaskSpecFromJson(const nlohmann::json& j);

struct PuppetState {
  Vec2 pos = Vec2::Zero();
  Vec2 vel = Vec2::Zero();
  std::array<Vec2, kNumEffectors> offset{};
  std::array<Vec2, kNumEffectors> offset_vel{};
  std::array<Vec2, kNumEffectors> target{};
  std::array<bool, kNumEffectors> contact{};
};

// Rest pose at horizontal position x on flat ground of height `ground`.
PuppetState RestState(const BodyParams& body, double x, double ground);

// Net ground force on the torso from foot contacts; also reports contacts.
Vec2 ContactForce(const BodyParams& body, const Terrain& terrain, const PuppetState& s,
                  std::array<bool, kNumEffectors>* contact);

// One dt: exact critically damped actuator update and velocity-Verlet torso
// integration (exact under constant acceleration).
void PhysicsStep(const BodyParams& body, const Terrain& terrain, PuppetState& s, const Vec& action);

// Torso kinetic + potential energy plus the actuator Lyapunov energy.
double MechanicalEnergy(const BodyParams& body, const PuppetState& s);

Vec ProprioFeature(const BodyParams& body, const Terrain& terrain, const PuppetState& s);
Vec TerrainFeature(const BodyParams& body, const Terrain& terrain, const PuppetState& s);

struct StepResult {
  double reward = 0.0;
  bool terminal = false;
  bool truncated = false;
  bool done() const { return terminal || truncated; }
};

// Fall/contact termination: torso below half the rest height over the
// reference ground, head touching the ground, or head/torso hitting a beam.
bool FallTerminated(const BodyParams& body, const Terrain& terrain, const PuppetState& s);

class PuppetEnv {
 public:
  explicit PuppetEnv(TaskSpec spec);

  const TaskSpec& spec() const { return spec_; }
  const Terrain& terrain() const { return terrain_; }
  const PuppetState& state() const { return state_; }
  int t() const { return t_; }
  bool done() const { return done_; }

  // Samples fresh terrain from `seed` and places the puppet at rest at x = 0.
  void Reset(unsigned long long seed);
  void ResetWith(Terrain terrain, const PuppetState& state);

  // Throws ContractError after the episode has ended or on a non-finite
  // action; NumericError if the state becomes non-finite.
  StepResult Step(const Vec& action);

  Vec Proprio() const { return ProprioFeature(spec_.body, terrain_, state_); }
  Vec Terrain16() const { return TerrainFeature(spec_.body, terrain_, state_); }
  // Proprio followed by the terrain feature for terrain tasks.
  Vec Observation() const;

  double TaskReward() const;
  double TorsoHeight() const;
  double HeadHeight() const;

 private:
  TaskSpec spec_;
  Terrain terrain_;
  PuppetState state_;
  int t_ = 0;
  bool done_ = true;
};

}  // namespace hwm
