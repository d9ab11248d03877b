#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cc2/catalog.hpp"
#include "cc2/todd_coxeter.hpp"

namespace cc2 {

/// Element of a ConcreteGroup, an index in 0..order()-1. Index 0 is the identity.
using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;

/// Orders up to this bound get a dense multiplication table.
inline constexpr std::size_t kDenseTableLimit = 4096;

/// A fully materialized finite 2-group. Immutable once built, so it may be
/// shared freely between threads.
class ConcreteGroup {
 public:
  /// Builds from a complete coset table of the trivial subgroup.
  ConcreteGroup(const CosetTable& table, std::vector<std::string> generator_names,
                std::optional<GroupSpec> spec = std::nullopt);

  /// Builds from a dense multiplication table plus generator images (cache
  /// path). Throws ConsistencyError if the data is not a group table.
  static ConcreteGroup from_table(std::vector<std::uint16_t> table,
                                  std::vector<std::string> generator_names,
                                  std::vector<Element> generator_elements,
                                  std::optional<GroupSpec> spec = std::nullopt);

  [[nodiscard]] std::size_t order() const { return order_; }
  [[nodiscard]] int log2_order() const { return log2_order_; }
  [[nodiscard]] const std::optional<GroupSpec>& spec() const { return spec_; }

  [[nodiscard]] Element mul(Element a, Element b) const;
  [[nodiscard]] Element inv(Element a) const;
  [[nodiscard]] Element power(Element a, std::int64_t e) const;
  [[nodiscard]] std::int64_t element_order(Element a) const;
  /// h^-1 g h
  [[nodiscard]] Element conjugate(Element g, Element h) const;
  /// g^-1 h^-1 g h
  [[nodiscard]] Element commutator(Element g, Element h) const;

  // Unchecked variants for inner loops; indices must be in range.
  [[nodiscard]] Element mul_unchecked(Element a, Element b) const {
    if (!dense_.empty()) return dense_[static_cast<std::size_t>(a) * order_ + b];
    return mul_by_word(a, b);
  }
  [[nodiscard]] Element inv_unchecked(Element a) const { return inverse_[a]; }
  [[nodiscard]] Element conjugate_unchecked(Element g, Element h) const {
    return mul_unchecked(mul_unchecked(inverse_[h], g), h);
  }
  [[nodiscard]] bool commute_unchecked(Element a, Element b) const {
    return mul_unchecked(a, b) == mul_unchecked(b, a);
  }

  [[nodiscard]] const std::vector<std::string>& generator_names() const { return names_; }
  [[nodiscard]] const std::vector<Element>& generators() const { return gens_; }
  /// Element for a generator name; throws InvalidArgument for unknown names.
  [[nodiscard]] Element generator(std::string_view name) const;
  /// Evaluates a word in the group's generators.
  [[nodiscard]] Element evaluate(const Word& w) const;

  [[nodiscard]] bool has_dense_table() const { return !dense_.empty(); }
  /// Row-major order()*order() table; empty above kDenseTableLimit.
  [[nodiscard]] std::span<const std::uint16_t> dense_table() const { return dense_; }
  /// Right action of generator column c (2i: gen i, 2i+1: its inverse).
  [[nodiscard]] Element act(Element a, int column) const {
    return action_[static_cast<std::size_t>(a) * static_cast<std::size_t>(columns_) +
                   static_cast<std::size_t>(column)];
  }
  [[nodiscard]] int columns() const { return columns_; }

 private:
  ConcreteGroup() = default;
  void build_tree();
  void build_dense();
  void build_inverse();
  [[nodiscard]] Element mul_by_word(Element a, Element b) const;
  void check(Element a) const;

  std::size_t order_ = 0;
  int log2_order_ = 0;
  int columns_ = 0;
  std::vector<std::uint32_t> action_;
  std::vector<std::uint16_t> dense_;
  std::vector<Element> inverse_;
  std::vector<Element> parent_;
  std::vector<std::uint8_t> parent_column_;
  std::vector<Element> bfs_order_;
  std::vector<std::string> names_;
  std::vector<Element> gens_;
  std::optional<GroupSpec> spec_;
};

struct RealizeOptions {
  EnumerationOptions enumeration;
  /// When set, a mismatch against p.order_claim is a ConsistencyError.
  bool check_order_claim = true;
};

/// Realizes a presentation by coset enumeration over the trivial subgroup.
[[nodiscard]] ConcreteGroup realize(const Presentation& p, const RealizeOptions& opts = {},
                                    std::optional<GroupSpec> spec = std::nullopt);

/// Catalog convenience: build_presentation + realize + order/class assertion.
[[nodiscard]] ConcreteGroup realize(const GroupSpec& spec, const RealizeOptions& opts = {});

}  // namespace cc2
