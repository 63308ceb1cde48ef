#ifndef SPECKLE2P_CSV_HPP
#define SPECKLE2P_CSV_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace s2p::csv {

/// Shortest round-trip decimal form (std::to_chars); locale-independent.
std::string cell(double v);
std::string cell(long v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// UTF-8, comma-separated, header row, '\n' terminated rows.
void write(const std::filesystem::path& path, const Table& table);

Table read(const std::filesystem::path& path);

/// Column values parsed as double; throws ValidationError on unknown name.
std::vector<double> column_as_double(const Table& table,
                                     const std::string& name);

}  // namespace s2p::csv

#endif
