#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cc2::tables {

inline constexpr int kFirstTable = 7;
inline constexpr int kLastTable = 22;

struct Cell {
  std::string computed;
  /// Printed value, when the table gives one for this cell.
  std::optional<std::string> printed;
  [[nodiscard]] bool mismatch() const { return printed && *printed != computed; }
};

struct Table {
  int id = 0;
  int n = 0;
  std::string title;
  /// Printed values are not checked by verify (the table is only used to
  /// explain a sum).
  bool advisory = false;
  std::vector<std::string> columns;  // group ids
  std::vector<std::string> rows;
  std::vector<std::vector<Cell>> cells;  // [row][column]
  std::vector<std::string> notes;

  [[nodiscard]] int mismatches() const;
};

/// Reproduces table `id` at order 2^n from realized groups. Throws
/// InvalidArgument when id is out of range or no column of the table
/// exists at this n.
[[nodiscard]] Table build(int id, int n, const std::optional<std::filesystem::path>& cache_dir);

/// Columns are groups, rows are quantities; a mismatching cell shows
/// "computed (printed)" and is flagged with '*'.
[[nodiscard]] std::string render_text(const Table& t);
[[nodiscard]] nlohmann::json to_json(const Table& t);

}  // namespace cc2::tables
