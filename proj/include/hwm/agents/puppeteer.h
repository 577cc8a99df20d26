#pragma once

#include <filesystem>

#include "hwm/agents/config.h"
#include "hwm/model/world_model.h"

namespace hwm {

// Puppeteer inputs are proprioception plus the terrain feature on terrain
// tasks; its actions are tracker commands.
ModelDims PuppeteerDims(const RunConfig& config);

// Tracker checkpoint named by hierarchy.tracker_checkpoint, checked for role
// and dimensions.
WorldModel LoadTracker(const RunConfig& config);

struct PuppeteerRunResult {
  std::filesystem::path checkpoint;
  double mean_return = 0.0;
  long episodes = 0;
  bool tracker_unchanged = true;
};

// Online training of the high-level agent through the frozen tracker. Writes
// config.json, log.jsonl, checkpoints/ and final.{json,bin} under out_dir.
PuppeteerRunResult TrainPuppeteer(const RunConfig& config);

// Continues training of the checkpoint named by finetune.source on the
// configured task. The log starts with the source run's records (when its
// log.jsonl sits next to the checkpoint) followed by the finetune phase.
PuppeteerRunResult FinetunePuppeteer(const RunConfig& config);

}  // namespace hwm
