#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cc2/catalog.hpp"

namespace cc2 {

struct EnumerationOptions {
  /// Upper bound on simultaneously allocated cosets.
  std::size_t max_cosets = std::size_t{1} << 20;
};

struct EnumerationStats {
  std::size_t cosets_defined = 0;
  std::size_t max_live = 0;
  std::size_t lookaheads = 0;
};

/// Complete coset table of the trivial subgroup, i.e. the right regular
/// action of the group on itself. Column 2i acts by generator i, column
/// 2i+1 by its inverse. Cosets are numbered in breadth-first order from
/// the identity (coset 0), scanning columns in ascending order.
struct CosetTable {
  int columns = 0;
  std::size_t size = 0;
  std::vector<std::uint32_t> action;  // size * columns, row-major
  EnumerationStats stats;

  [[nodiscard]] std::uint32_t at(std::size_t coset, int column) const {
    return action[coset * static_cast<std::size_t>(columns) + static_cast<std::size_t>(column)];
  }
};

/// HLT coset enumeration over the trivial subgroup with lookahead when the
/// coset limit is reached. Throws ResourceError if the limit is still
/// exceeded after lookahead.
[[nodiscard]] CosetTable enumerate_cosets(const Presentation& p,
                                          const EnumerationOptions& opts = {});

}  // namespace cc2
