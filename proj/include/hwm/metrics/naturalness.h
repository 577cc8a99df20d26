#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hwm {

struct EpisodeResult {
  double episode_return = 0.0;
  int length = 0;
  bool terminated_early = false;
  double mean_height = 0.0;
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

// Population standard deviation.
MeanStd Summarize(const std::vector<double>& values);

struct NaturalnessRow {
  std::string method;
  MeanStd eplen_ckpt;
  MeanStd eplen;
  MeanStd height;
};

// One value per seed: mean episode length at the intermediate checkpoint,
// at the final checkpoint, and mean torso height at the final checkpoint.
NaturalnessRow NaturalnessProxies(const std::string& method, const std::vector<std::vector<EpisodeResult>>& at_ckpt,
                                  const std::vector<std::vector<EpisodeResult>>& final_results);

// Columns: method, eplen@ckpt, eplen, height; cells are "mean +- std".
void WriteNaturalnessCsv(const std::filesystem::path& path, const std::vector<NaturalnessRow>& rows);

double MeanLength(const std::vector<EpisodeResult>& r);
double MeanHeight(const std::vector<EpisodeResult>& r);
double MeanReturn(const std::vector<EpisodeResult>& r);

}  // namespace hwm
