#pragma once

#include <string>
#include <vector>

#include "cc2/catalog.hpp"
#include "cc2/group.hpp"
#include "cc2/word.hpp"

namespace cc2::test {

inline Presentation presentation(std::vector<std::string> gens, const std::vector<std::string>& relators,
                                 std::uint64_t order = 0) {
  Presentation p;
  p.generators = std::move(gens);
  for (const auto& r : relators) p.relators.push_back(parse_word(r, p.generators));
  p.order_claim = order;
  return p;
}

inline ConcreteGroup small_group(std::vector<std::string> gens, const std::vector<std::string>& relators) {
  return realize(presentation(std::move(gens), relators));
}

inline ConcreteGroup c2xc2() { return small_group({"a", "b"}, {"a^2", "b^2", "a^-1b^-1ab"}); }
inline ConcreteGroup c2xc4() { return small_group({"a", "b"}, {"a^2", "b^4", "a^-1b^-1ab"}); }
inline ConcreteGroup cyclic(int k) { return small_group({"a"}, {"a^" + std::to_string(k)}); }

inline Element el(const ConcreteGroup& g, const std::string& word) {
  return g.evaluate(parse_word(word, g.generator_names()));
}

/// Every catalog spec with lo <= n <= hi.
inline std::vector<GroupSpec> specs_between(int lo, int hi) {
  std::vector<GroupSpec> out;
  for (int n = lo; n <= hi; ++n) {
    for (const auto& s : catalog_at(n)) out.push_back(s);
  }
  return out;
}

}  // namespace cc2::test
