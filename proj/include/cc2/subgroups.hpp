#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cc2/group.hpp"

namespace cc2 {

/// Dense membership set over the elements of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_((universe + 63) / 64, 0), universe_(universe) {}

  [[nodiscard]] bool contains(Element e) const {
    return e < universe_ && ((bits_[e >> 6] >> (e & 63)) & 1u);
  }
  void insert(Element e) { bits_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  [[nodiscard]] std::size_t universe() const { return universe_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<std::uint64_t> bits_;
  std::size_t universe_ = 0;
};

/// A subgroup stored as its sorted element list plus a generating set.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t group_order, std::vector<Element> sorted_elements,
           std::vector<Element> gens);

  [[nodiscard]] const std::vector<Element>& elements() const { return elements_; }
  [[nodiscard]] const std::vector<Element>& generators() const { return gens_; }
  [[nodiscard]] std::size_t order() const { return elements_.size(); }
  [[nodiscard]] bool contains(Element e) const { return members_.contains(e); }
  [[nodiscard]] bool is_subset_of(const Subgroup& other) const;
  [[nodiscard]] const ElementSet& members() const { return members_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<Element> elements_;
  std::vector<Element> gens_;
  ElementSet members_;
};

struct ConjClass {
  Element rep = kIdentity;       // minimal index in the class
  std::vector<Element> members;  // sorted
};

[[nodiscard]] Subgroup whole_group(const ConcreteGroup& g);
[[nodiscard]] Subgroup trivial_subgroup(const ConcreteGroup& g);

/// Smallest subgroup containing `gens`. The stored generating set keeps only
/// the elements that enlarged the subgroup when added in order.
[[nodiscard]] Subgroup closure(const ConcreteGroup& g, std::span<const Element> gens);
[[nodiscard]] Subgroup closure(const ConcreteGroup& g, std::initializer_list<Element> gens);

/// Closure of {(u, v) : u in U, v in V}.
[[nodiscard]] Subgroup commutator_subgroup(const ConcreteGroup& g, const Subgroup& u,
                                           const Subgroup& v);

/// gamma_1 = G, gamma_{i+1} = (gamma_i, G), ending with the trivial group.
[[nodiscard]] std::vector<Subgroup> lower_central_series(const ConcreteGroup& g);
[[nodiscard]] int nilpotency_class(const ConcreteGroup& g);

/// C_G(gamma_2(G) mod gamma_4(G)).
[[nodiscard]] Subgroup gamma1_star(const ConcreteGroup& g);

[[nodiscard]] Subgroup center(const ConcreteGroup& g);
[[nodiscard]] Subgroup center(const ConcreteGroup& g, const Subgroup& h);
[[nodiscard]] Subgroup centralizer(const ConcreteGroup& g, Element x);
[[nodiscard]] Subgroup centralizer_of_set(const ConcreteGroup& g, std::span<const Element> s);

[[nodiscard]] std::vector<ConjClass> conjugacy_classes(const ConcreteGroup& g);
/// class_of[e] = index into conjugacy_classes(g).
[[nodiscard]] std::vector<std::uint32_t> class_index(const ConcreteGroup& g,
                                                     const std::vector<ConjClass>& classes);

/// Phi(H) = <h^2, (a, b) : h, a, b in H>.
[[nodiscard]] Subgroup frattini(const ConcreteGroup& g, const Subgroup& h);
/// <h^2 : h in H>; equals Phi(H) for 2-groups.
[[nodiscard]] Subgroup squares_subgroup(const ConcreteGroup& g, const Subgroup& h);
/// d(H) = log2 |H : Phi(H)|.
[[nodiscard]] int min_generators(const ConcreteGroup& g, const Subgroup& h);

/// Subgroup generated by the elements of H of order <= 2^i.
[[nodiscard]] Subgroup omega(const ConcreteGroup& g, const Subgroup& h, int i);

[[nodiscard]] bool is_abelian(const ConcreteGroup& g, const Subgroup& h);
[[nodiscard]] bool is_normal(const ConcreteGroup& g, const Subgroup& h);
/// True when S (as a set) is closed under conjugation by G.
[[nodiscard]] bool is_normal_subset(const ConcreteGroup& g, const ElementSet& s);

/// Cyclic factor orders of an abelian subgroup, descending. Throws
/// InvalidArgument when H is not abelian.
[[nodiscard]] std::vector<std::int64_t> abelian_invariants(const ConcreteGroup& g, const Subgroup& h);

/// Every elementary abelian subgroup, including the trivial one, sorted by
/// (order, elements).
[[nodiscard]] std::vector<Subgroup> elementary_abelian_subgroups(const ConcreteGroup& g);
/// Elementary abelian subgroups not properly contained in another one.
[[nodiscard]] std::vector<Subgroup> maximal_elementary_abelian(const ConcreteGroup& g);
/// Orbits of G acting by conjugation on a list of subgroups. Each orbit is
/// a list of indices into `subs`, the first being the lexicographically
/// smallest element set; orbits are sorted by that representative.
[[nodiscard]] std::vector<std::vector<std::size_t>> subgroup_conjugacy_classes(
    const ConcreteGroup& g, const std::vector<Subgroup>& subs);

/// Image of H under conjugation by x.
[[nodiscard]] std::vector<Element> conjugate_set(const ConcreteGroup& g,
                                                 std::span<const Element> h, Element x);

}  // namespace cc2
