#pragma once

// On-disk Cayley table cache. File layout (little-endian):
//   "CC2G" | version 0x01 | n (1 byte) | generator count (2 bytes)
//   | per generator: NUL-terminated name, element index (2 bytes)
//   | N*N table entries, row-major (2 bytes each)

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cc2/catalog.hpp"
#include "cc2/group.hpp"

namespace cc2::cache {

inline constexpr std::uint8_t kFormatVersion = 0x01;

/// Value of CC2_CACHE, if set and non-empty.
[[nodiscard]] std::optional<std::filesystem::path> env_dir();

/// "G24_n8.cc2g"
[[nodiscard]] std::string file_name(const GroupSpec& spec);

[[nodiscard]] std::vector<std::uint8_t> serialize(const ConcreteGroup& g);
/// Throws CacheError on bad magic, version, or truncation.
[[nodiscard]] ConcreteGroup deserialize(const std::vector<std::uint8_t>& bytes,
                                        std::optional<GroupSpec> spec = std::nullopt);

/// Writes to a temporary file in the same directory and renames it into
/// place, so readers never observe a partial file.
void write_file(const std::filesystem::path& path, const ConcreteGroup& g);
[[nodiscard]] ConcreteGroup read_file(const std::filesystem::path& path,
                                      std::optional<GroupSpec> spec = std::nullopt);

/// Loads spec from `dir` when present, otherwise realizes it and stores the
/// result. Without a directory this is plain realize(). `hit` reports which
/// path was taken.
[[nodiscard]] ConcreteGroup load_or_realize(const GroupSpec& spec,
                                            const std::optional<std::filesystem::path>& dir,
                                            bool* hit = nullptr);

struct Stat {
  std::size_t files = 0;
  std::uintmax_t bytes = 0;
  std::vector<std::string> entries;  // sorted file names
};

/// Summary of cache files in dir; a missing directory gives an empty summary.
[[nodiscard]] Stat stat(const std::filesystem::path& dir);
/// Removes cache files in dir; returns how many were removed.
std::size_t clear(const std::filesystem::path& dir);

}  // namespace cc2::cache
