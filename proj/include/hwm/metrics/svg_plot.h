#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hwm/env/terrain.h"

namespace hwm {

struct LineSeries {
  std::string name;
  std::vector<double> xs;
  std::vector<double> ys;
};

// Learning curves or sweeps as a simple line chart with a legend.
std::string LineChartSvg(const std::string& title, const std::string& x_label, const std::string& y_label,
                         const std::vector<LineSeries>& series);

// Ground profile, beams and one or more torso paths (x, z).
std::string TerrainTrajectorySvg(const std::string& title, const Terrain& terrain,
                                 const std::vector<LineSeries>& paths);

void WriteTextFile(const std::filesystem::path& path, const std::string& text);

}  // namespace hwm
