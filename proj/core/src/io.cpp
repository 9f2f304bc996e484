#include "dqlab/io.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include "dqlab/errors.hpp"

namespace dqlab::io {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& file, std::string_view module,
                     std::string_view config_hash, const std::vector<std::string>& columns) {
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    out_.open(file);
    if (!out_) throw Error("io: cannot open " + file.string() + " for writing");
    out_ << "# module=" << module << " config=" << config_hash << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

void CsvWriter::row(std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        out_ << format_g17(values[i]) << (i + 1 < values.size() ? "," : "\n");
}

void CsvWriter::raw_row(std::string_view line) { out_ << line << "\n"; }

void write_text_file(const std::filesystem::path& file, std::string_view content) {
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file);
    if (!out) throw Error("io: cannot open " + file.string() + " for writing");
    out << content;
}

std::vector<std::array<double, 2>> read_xy_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("io: cannot open " + file.string());
    std::vector<std::array<double, 2>> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b)) continue;
        try {
            pts.push_back({std::stod(a), std::stod(b)});
        } catch (const std::exception&) {
            continue; // header row
        }
    }
    if (pts.size() < 3) throw ValidationError("io: vertex CSV " + file.string() + " has < 3 points");
    return pts;
}

} // namespace dqlab::io
