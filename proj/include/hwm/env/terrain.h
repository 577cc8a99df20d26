#pragma once

#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hwm {

enum class TaskId { kStand, kWalk, kRun, kCorridor, kHurdles, kWalls, kGaps, kStairs };

const char* TaskName(TaskId task);
// Throws ConfigError on an unknown name.
TaskId TaskFromName(const std::string& name);
// Corridor, hurdles, walls, gaps and stairs observe the terrain ahead.
bool TaskUsesTerrain(TaskId task);

struct TerrainParams {
  double length = 100.0;
  double start_flat = 3.0;
  // Horizontal width of the ramps that replace vertical steps.
  double edge_width = 0.02;
  double pit_depth = 3.0;
  double corridor_bump_height = 0.04;
  double corridor_bump_spacing = 1.5;
  double gap_min = 0.1;
  double gap_max = 0.4;
  double platform_min = 1.0;
  double platform_max = 2.0;
  double hurdle_height_min = 0.05;
  double hurdle_height_max = 0.2;
  double hurdle_width = 0.1;
  double hurdle_spacing_min = 1.5;
  double hurdle_spacing_max = 3.0;
  // Clearance of overhead beams above the ground.
  double beam_clearance_min = 0.8;
  double beam_clearance_max = 0.95;
  double beam_width = 0.3;
  double beam_spacing_min = 2.0;
  double beam_spacing_max = 4.0;
  double stair_rise_min = 0.04;
  double stair_rise_max = 0.1;
  double stair_run_min = 0.4;
  double stair_run_max = 0.8;
  int stairs_per_flight = 5;

  void Validate() const;
};

nlohmann::json TerrainParamsToJson(const TerrainParams& p);
// Unknown keys raise ConfigError.
void UpdateTerrainParams(TerrainParams& p, const nlohmann::json& j);

struct Beam {
  double x0;
  double x1;
  double bottom;
};

// Piecewise-linear ground profile. `reference` is the same profile with pits
// filled at the level of the surrounding platforms; fall detection measures
// against it.
class Terrain {
 public:
  Terrain() = default;
  Terrain(std::vector<double> xs, std::vector<double> surface, std::vector<double> reference,
          std::vector<Beam> beams = {}, std::vector<double> gap_lengths = {});

  double Height(double x) const;
  double Slope(double x) const;
  double ReferenceHeight(double x) const;
  // Lowest beam bottom covering x, +inf when open.
  double Ceiling(double x) const;

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<Beam>& beams() const { return beams_; }
  const std::vector<double>& gap_lengths() const { return gap_lengths_; }
  double end() const { return xs_.empty() ? 0.0 : xs_.back(); }

 private:
  double Interp(const std::vector<double>& ys, double x) const;

  std::vector<double> xs_;
  std::vector<double> surface_;
  std::vector<double> reference_;
  std::vector<Beam> beams_;
  std::vector<double> gap_lengths_;
};

Terrain GenerateTerrain(TaskId task, const TerrainParams& params, std::mt19937_64& rng);

}  // namespace hwm
