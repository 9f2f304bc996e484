// Output helpers shared by the scenario runners: 17-significant-digit float
// formatting (lossless double round trip), FNV-1a config hashing, and CSV
// emission with the provenance comment line
//
//   # module=<name> config=<hash>
//
// that every emitted file carries.
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dqlab::io {

std::string format_g17(double v);

std::uint64_t fnv1a(std::string_view text);
std::string hex64(std::uint64_t v);

class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& file, std::string_view module,
              std::string_view config_hash, const std::vector<std::string>& columns);

    void row(std::span<const double> values);
    void raw_row(std::string_view line);

  private:
    std::ofstream out_;
};

void write_text_file(const std::filesystem::path& file, std::string_view content);

// Reads a two-column CSV of x,y vertices (comment lines starting with '#'
// and an optional header row are skipped).
std::vector<std::array<double, 2>> read_xy_csv(const std::filesystem::path& file);

} // namespace dqlab::io
