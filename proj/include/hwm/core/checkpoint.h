#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hwm/core/dense_array.h"

namespace hwm {

inline constexpr const char* kArchiveVersion = "v1";

// A set of named arrays stored as a JSON manifest plus one little-endian f64
// blob. The manifest lists {name, shape, offset} per block (offset counted in
// f64 values from the start of the payload); the blob begins with an 8-byte
// magic. `kind` distinguishes checkpoints from datasets.
struct Archive {
  std::string kind;
  nlohmann::json meta = nlohmann::json::object();
  std::vector<std::pair<std::string, DenseArray>> blocks;

  const DenseArray& Get(const std::string& name) const;
  const DenseArray* Find(const std::string& name) const;
};

// Writes `<base>.json` and `<base>.bin`. Returns the manifest path.
std::filesystem::path WriteArchive(const std::filesystem::path& base, const Archive& archive);
// Accepts either the base path or the manifest path. Throws FormatError on a
// bad magic, wrong version, wrong kind or truncated blob.
Archive ReadArchive(const std::filesystem::path& path, const std::string& expected_kind);

std::filesystem::path ManifestPath(const std::filesystem::path& base);

void AppendParams(Archive& archive, const ParamSet& params, const std::string& prefix);
// Loads every block of `params` from `<prefix><name>`; shapes must match.
void LoadParams(const Archive& archive, ParamSet& params, const std::string& prefix);

}  // namespace hwm
