#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cc2/word.hpp"

namespace cc2 {

/// The five families of 2-groups of coclass 2.
enum class Family { Fam7, Fam8, Fam9, Fam50, Fam59 };

inline constexpr Family kAllFamilies[] = {Family::Fam59, Family::Fam9, Family::Fam50,
                                          Family::Fam8, Family::Fam7};

[[nodiscard]] std::string_view family_name(Family f);
/// Family owning catalog index m (1..43). Throws OutOfRange otherwise.
[[nodiscard]] Family family_of(int m);

inline constexpr int kMinCatalogN = 5;
inline constexpr int kMaxCatalogN = 14;

/// Catalog identifier G_m of order 2^n. `k` and `epsilon` are only
/// meaningful for Fam7/Fam8 (|G| = 2^(2k+2+epsilon)); they are zero otherwise.
struct GroupSpec {
  Family family = Family::Fam59;
  int m = 1;
  int n = 6;
  int k = 0;
  int epsilon = 0;
  /// Set when this spec is isomorphic to an earlier catalog entry at the
  /// same order (G25 ~ G24 for odd n).
  std::optional<int> duplicate_of;

  [[nodiscard]] std::string id() const { return "G" + std::to_string(m); }
  [[nodiscard]] std::string label() const { return id() + "@n=" + std::to_string(n); }
  [[nodiscard]] std::uint64_t order() const { return std::uint64_t{1} << n; }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.m == b.m && a.n == b.n; }
  friend std::strong_ordering operator<=>(const GroupSpec& a, const GroupSpec& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.m <=> b.m;
  }
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::uint64_t order_claim = 0;

  /// Index of a generator by name, or -1.
  [[nodiscard]] int generator_index(std::string_view name) const;
};

/// Why (m, n) is not in the catalog, or nullopt when it is.
[[nodiscard]] std::optional<std::string> validity_violation(int m, int n);

/// Validated spec for G_m at order 2^n; throws OutOfRange naming the bound.
[[nodiscard]] GroupSpec make_spec(int m, int n);

/// Parses "G24" / "g24" / "24" into 24. Throws InvalidArgument.
[[nodiscard]] int parse_group_id(std::string_view id);

/// Every spec valid at order 2^n in ascending m. Duplicates are listed and
/// flagged. Throws InvalidArgument for n < 5.
[[nodiscard]] std::vector<GroupSpec> catalog_at(int n);

/// (k, epsilon) with n = 2k + 2 + epsilon. Fam7/Fam8 only.
[[nodiscard]] std::pair<int, int> derived_params(Family family, int n);

/// |F^ab / R^ab| from the relator exponent-sum matrix (gcd of its maximal
/// minors), or nullopt when the abelianization is infinite. For a finite
/// group this is |G : G'|, a cheap check on a presentation before coset
/// enumeration.
[[nodiscard]] std::optional<std::uint64_t> abelianization_order(const Presentation& p);

/// Fully expanded relators for a catalog group.
[[nodiscard]] Presentation build_presentation(const GroupSpec& spec);

}  // namespace cc2
