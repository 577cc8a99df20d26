#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hwm {

// One JSON object per line. No timestamps are ever written, so identical runs
// give identical files.
class JsonlWriter {
 public:
  JsonlWriter() = default;
  explicit JsonlWriter(const std::filesystem::path& path, bool append = false);

  bool is_open() const { return out_.is_open(); }
  void Write(const nlohmann::json& record);
  void Flush() { out_.flush(); }

 private:
  std::ofstream out_;
};

std::vector<nlohmann::json> ReadJsonl(const std::filesystem::path& path);

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
  void Row(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
  std::size_t columns_;
};

// Shortest round-trip text for a double.
std::string FormatDouble(double v);

// Mixes values into a 64-bit seed (SplitMix64 finalizer chain).
unsigned long long DeriveSeed(unsigned long long base, unsigned long long a, unsigned long long b = 0);

}  // namespace hwm
