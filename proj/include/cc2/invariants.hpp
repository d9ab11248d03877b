#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cc2/catalog.hpp"
#include "cc2/group.hpp"
#include "cc2/subgroups.hpp"

namespace cc2 {

/// q[i-1] = number of conjugacy classes of maximal elementary abelian
/// subgroups of rank i, for i = 1..4.
struct QuillenParam {
  std::array<int, 4> q{};

  [[nodiscard]] int total() const { return q[0] + q[1] + q[2] + q[3]; }
  /// "(0,0,2,0)"
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const QuillenParam&, const QuillenParam&) = default;
};

/// Cyclic factor orders of the center, descending.
using CenterType = std::vector<std::int64_t>;

[[nodiscard]] std::string center_type_string(const CenterType& c);

struct NamedWord {
  std::string name;
  Word word;
};

/// Ordered (name, element order) pairs.
using OrderProfile = std::vector<std::pair<std::string, std::int64_t>>;

[[nodiscard]] int class_count(const ConcreteGroup& g);
/// Sum of d(C_G(g)) over one representative per conjugacy class.
[[nodiscard]] int roggenkamp(const ConcreteGroup& g);
/// Same sum restricted to classes inside S. Throws InvalidArgument when S is
/// not a union of conjugacy classes.
[[nodiscard]] int roggenkamp_of_subset(const ConcreteGroup& g, const ElementSet& s);
/// Number of conjugacy classes contained in the normal subset S.
[[nodiscard]] int classes_in_subset(const ConcreteGroup& g, const ElementSet& s);
/// Throws ConsistencyError if a maximal elementary abelian subgroup of rank
/// above 4 turns up.
[[nodiscard]] QuillenParam quillen(const ConcreteGroup& g);
[[nodiscard]] CenterType center_type(const ConcreteGroup& g);

/// Designated class representatives whose orders the family's tables list.
/// Fam50 reads t as y^2.
[[nodiscard]] std::vector<NamedWord> profile_words(const GroupSpec& spec);
[[nodiscard]] OrderProfile order_profile(const ConcreteGroup& g, const GroupSpec& spec);
/// Order of one designated element; throws InvalidArgument for names not in
/// profile_words(spec).
[[nodiscard]] std::int64_t profile_order(const ConcreteGroup& g, const GroupSpec& spec,
                                         std::string_view name);

/// The subgroups the per-family arguments decompose G by. Fam59/Fam9/Fam50:
/// A = <x, t>. Fam8: A = <x1, x2>. Fam7: A = <x1^2, x2>, H = <y^2, A>,
/// M1 = <y, H>, M2 = <x1, H>, M3 = <y x1, H>.
struct StructureSubgroups {
  Subgroup a;
  std::optional<Subgroup> h;
  std::optional<Subgroup> m1;
  std::optional<Subgroup> m2;
  std::optional<Subgroup> m3;
};

[[nodiscard]] StructureSubgroups structure_subgroups(const ConcreteGroup& g, const GroupSpec& spec);

/// outer \ inner as a membership set.
[[nodiscard]] ElementSet set_difference(const Subgroup& outer, const Subgroup& inner);

/// Resolves expressions like "A", "G\A", "M3\H" or "H\A+M1\H" to an element
/// set. Names: G, A, H, M1, M2, M3, Z (center), G2, G3 (lower central terms).
[[nodiscard]] ElementSet named_subset(const ConcreteGroup& g, const GroupSpec& spec,
                                      std::string_view expr);

struct Fingerprint {
  std::uint64_t order = 0;
  int nilpotency_class = 0;
  int cl_count = 0;
  int roggenkamp = 0;
  QuillenParam quillen;
  CenterType center_type;

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

[[nodiscard]] Fingerprint fingerprint(const ConcreteGroup& g);

struct InvariantReport {
  GroupSpec spec;
  std::uint64_t order = 0;
  int nilpotency_class = 0;
  int cl_count = 0;
  int roggenkamp = 0;
  QuillenParam quillen;
  CenterType center_type;
  OrderProfile order_profile;
  std::optional<int> duplicate_of;
};

/// Everything above for a catalog group; g.spec() must be set.
[[nodiscard]] InvariantReport compute_invariants(const ConcreteGroup& g);

}  // namespace cc2
