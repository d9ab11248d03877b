#pragma once

// Closed-form predictions for the catalog, evaluated in exact rational
// arithmetic from (family, m, n). Nothing here touches a realized group.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cc2/catalog.hpp"
#include "cc2/invariants.hpp"

namespace cc2 {

/// Predicted class count and/or Roggenkamp sum over a named normal subset
/// (syntax of named_subset).
struct SubsetPrediction {
  std::string subset;
  std::optional<std::int64_t> classes;
  std::optional<std::int64_t> roggenkamp;
  std::string source;
};

struct Prediction {
  GroupSpec spec;
  std::optional<std::int64_t> cl_count;
  std::optional<std::int64_t> roggenkamp;
  /// Tabulated constant r in R = (closed-form part) + r, where one is used.
  std::optional<std::int64_t> r_constant;
  std::optional<QuillenParam> quillen;
  std::optional<CenterType> center_type;
  /// Subset of profile_words(spec) with tabulated orders.
  std::optional<OrderProfile> order_profile;
  std::vector<SubsetPrediction> subsets;
  /// Listed representatives of the maximal elementary abelian classes, each
  /// as generator words in the presentation's generators.
  std::vector<std::vector<std::string>> quillen_reps;
  /// Field name -> citation of the formula or table the value comes from.
  std::map<std::string, std::string> provenance;
  /// Why fields are absent or special-cased for this (m, n).
  std::vector<std::string> applicability;

  [[nodiscard]] bool empty() const {
    return !cl_count && !roggenkamp && !quillen && !center_type && !order_profile && subsets.empty();
  }
};

[[nodiscard]] Prediction predict(const GroupSpec& spec);

/// Pairwise non-isomorphic groups per family at order 2^n. Throws
/// InvalidArgument for n < 5.
[[nodiscard]] std::map<Family, int> predict_group_count(int n);

/// Sets of catalog indices whose members are claimed indistinguishable by
/// (Q, R). Throws OutOfRange for n < 8.
[[nodiscard]] std::vector<std::vector<int>> expected_qr_collisions(int n);

[[nodiscard]] nlohmann::json to_json(const Prediction& p);
[[nodiscard]] nlohmann::json to_json(const QuillenParam& q);
[[nodiscard]] nlohmann::json to_json(const OrderProfile& p);

}  // namespace cc2
