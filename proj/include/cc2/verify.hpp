#pragma once

// Grid verification: every applicable check for every catalog group over a
// range of orders, compared against the oracle.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cc2/catalog.hpp"
#include "cc2/iso.hpp"

namespace cc2 {

/// Per-group checks, then checks over all groups of one order.
inline constexpr std::string_view kGroupChecks[] = {
    "cl_count", "roggenkamp", "quillen", "quillen_reps", "center_type",
    "order_profile", "lcs_shape", "class_structure", "duplicate_iso"};
inline constexpr std::string_view kOrderChecks[] = {"group_count", "qr_collisions"};

[[nodiscard]] bool is_check_name(std::string_view name);

inline constexpr int kReportVersion = 1;

struct VerificationRecord {
  int n = 0;
  /// Catalog index, or 0 for checks over a whole order.
  int m = 0;
  std::string check_name;
  /// Oracle value, or the string "computed-only".
  nlohmann::json expected;
  nlohmann::json actual;
  bool pass = false;
  /// Set when the engine threw; pass is then false.
  bool error = false;
  std::string source;
  std::string detail;
  double elapsed_seconds = 0;

  [[nodiscard]] bool computed_only() const { return expected.is_string() && expected == "computed-only"; }
};

struct VerifyOptions {
  std::vector<int> ns;
  /// Catalog indices to check; empty means all.
  std::vector<int> groups;
  /// Check names to run; empty means all.
  std::vector<std::string> checks;
  /// OpenMP threads over grid cells; 0 keeps the runtime default.
  int jobs = 0;
  std::optional<std::filesystem::path> cache_dir;
  IsoOptions iso;
};

/// Records sorted by (n, m, check_name). Throws InvalidArgument for unknown
/// check names or n outside the catalog.
[[nodiscard]] std::vector<VerificationRecord> run_verification(const VerifyOptions& opts);

[[nodiscard]] bool all_pass(const std::vector<VerificationRecord>& records);

/// UTC timestamp from SOURCE_DATE_EPOCH when set (reproducible reports),
/// otherwise the current time.
[[nodiscard]] std::string report_timestamp();

[[nodiscard]] nlohmann::json to_json(const VerificationRecord& r, bool include_timings);
/// {version, generated_at, records}
[[nodiscard]] nlohmann::json report_json(const std::vector<VerificationRecord>& records,
                                         const std::string& generated_at, bool include_timings);

}  // namespace cc2
