#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cc2/catalog.hpp"
#include "cc2/group.hpp"
#include "cc2/invariants.hpp"

namespace cc2 {

enum class IsoVerdict { Isomorphic, NotIsomorphic, Indeterminate };

[[nodiscard]] std::string_view verdict_name(IsoVerdict v);

struct IsoOptions {
  std::uint64_t node_budget = 100'000'000;
};

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Indeterminate;
  /// Image of each source generator in the target, in presentation order.
  std::optional<std::vector<Element>> witness;
  std::map<std::string, Element> witness_by_name;
  double elapsed_seconds = 0;
  std::uint64_t nodes_explored = 0;

  [[nodiscard]] bool isomorphic() const { return verdict == IsoVerdict::Isomorphic; }
};

/// True when `images` satisfy every relator of `p` in `dst` and generate it.
[[nodiscard]] bool verify_witness(const Presentation& p, const ConcreteGroup& dst,
                                  const std::vector<Element>& images);

/// Searches for generator images in `dst` satisfying the relators of `src_p`
/// (a presentation of `src`). Candidates must match the source generator's
/// element order, class size and d(centralizer). The first generator only
/// ranges over class representatives, since composing with an inner
/// automorphism of dst moves any image there.
[[nodiscard]] IsoResult isomorphic(const Presentation& src_p, const ConcreteGroup& src,
                                   const ConcreteGroup& dst, const IsoOptions& opts = {});

struct IsoPartition {
  /// Each class lists indices into the input, ascending.
  std::vector<std::vector<std::size_t>> classes;
  /// False when some pair stayed indeterminate; such pairs are kept apart.
  bool complete = true;
  std::vector<std::pair<std::size_t, std::size_t>> indeterminate;
  std::uint64_t iso_calls = 0;
};

struct IsoInput {
  Presentation presentation;
  const ConcreteGroup* group = nullptr;
};

/// Partitions groups into isomorphism classes: unequal fingerprints split
/// immediately, equal ones go through isomorphic(). Precomputed
/// fingerprints, one per input, skip recomputing them.
[[nodiscard]] IsoPartition pairwise_distinct(const std::vector<IsoInput>& groups,
                                             const IsoOptions& opts = {},
                                             const std::vector<Fingerprint>* fingerprints = nullptr);

}  // namespace cc2
