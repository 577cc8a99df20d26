#pragma once

#include <filesystem>

#include "hwm/data/offline_dataset.h"

namespace hwm {

// Same manifest + blob framing as checkpoints, kind "dataset".
std::filesystem::path WriteDataset(const std::filesystem::path& base, const OfflineDataset& data);
// Throws FormatError on bad magic, version or kind.
OfflineDataset ReadDataset(const std::filesystem::path& path);

}  // namespace hwm
