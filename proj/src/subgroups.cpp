#include "cc2/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cc2/error.hpp"

namespace cc2 {

namespace {

// Grows a subgroup one generator at a time.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const ConcreteGroup& g) : g_(g), members_(g.order()) {
    members_.insert(kIdentity);
    elements_.push_back(kIdentity);
  }

  void add(Element x) {
    if (members_.contains(x)) return;
    gens_.push_back(x);
    // Right-multiplying every element by every generator until stable
    // reaches all of <gens> in a finite group.
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const Element e = elements_[i];
      for (const Element s : gens_) {
        const Element p = g_.mul_unchecked(e, s);
        if (!members_.contains(p)) {
          members_.insert(p);
          elements_.push_back(p);
        }
      }
    }
  }

  [[nodiscard]] bool contains(Element x) const { return members_.contains(x); }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }

  Subgroup finish() && {
    std::sort(elements_.begin(), elements_.end());
    return Subgroup(g_.order(), std::move(elements_), std::move(gens_));
  }

 private:
  const ConcreteGroup& g_;
  ElementSet members_;
  std::vector<Element> elements_;
  std::vector<Element> gens_;
};

// Wraps an element list already known to be a subgroup.
Subgroup from_closed_set(const ConcreteGroup& g, std::span<const Element> elems) {
  SubgroupBuilder b(g);
  for (const Element e : elems) {
    b.add(e);
    if (b.size() == elems.size()) break;
  }
  return std::move(b).finish();
}

}  // namespace

Subgroup::Subgroup(std::size_t group_order, std::vector<Element> sorted_elements,
                   std::vector<Element> gens)
    : elements_(std::move(sorted_elements)), gens_(std::move(gens)), members_(group_order) {
  for (const Element e : elements_) members_.insert(e);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element e) { return other.contains(e); });
}

Subgroup whole_group(const ConcreteGroup& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(g.order(), std::move(all), g.generators());
}

Subgroup trivial_subgroup(const ConcreteGroup& g) { return Subgroup(g.order(), {kIdentity}, {}); }

Subgroup closure(const ConcreteGroup& g, std::span<const Element> gens) {
  SubgroupBuilder b(g);
  for (const Element x : gens) {
    if (x >= g.order()) throw InvalidArgument("closure: element out of range");
    b.add(x);
  }
  return std::move(b).finish();
}

Subgroup closure(const ConcreteGroup& g, std::initializer_list<Element> gens) {
  return closure(g, std::span<const Element>(gens.begin(), gens.size()));
}

Subgroup commutator_subgroup(const ConcreteGroup& g, const Subgroup& u, const Subgroup& v) {
  SubgroupBuilder b(g);
  for (const Element a : u.elements()) {
    const Element ai = g.inv_unchecked(a);
    for (const Element c : v.elements()) {
      const Element comm =
          g.mul_unchecked(g.mul_unchecked(ai, g.inv_unchecked(c)), g.mul_unchecked(a, c));
      b.add(comm);
    }
  }
  return std::move(b).finish();
}

std::vector<Subgroup> lower_central_series(const ConcreteGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  const Subgroup all = series.front();
  while (series.back().order() > 1) {
    Subgroup next = commutator_subgroup(g, series.back(), all);
    if (next.order() == series.back().order()) {
      // Not nilpotent; cannot happen for p-groups.
      throw ConsistencyError("lower central series stabilised above the trivial group");
    }
    series.push_back(std::move(next));
  }
  return series;
}

int nilpotency_class(const ConcreteGroup& g) {
  return static_cast<int>(lower_central_series(g).size()) - 1;
}

Subgroup gamma1_star(const ConcreteGroup& g) {
  const auto lcs = lower_central_series(g);
  const Subgroup trivial = trivial_subgroup(g);
  const Subgroup& g2 = lcs.size() > 1 ? lcs[1] : trivial;
  const Subgroup& g4 = lcs.size() > 3 ? lcs[3] : trivial;
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (const Element h : g2.elements()) {
      const Element comm = g.mul_unchecked(g.mul_unchecked(g.inv_unchecked(h), g.inv_unchecked(x)),
                                           g.mul_unchecked(h, x));
      if (!g4.contains(comm)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return from_closed_set(g, out);
}

Subgroup center(const ConcreteGroup& g) { return centralizer_of_set(g, g.generators()); }

Subgroup center(const ConcreteGroup& g, const Subgroup& h) {
  std::vector<Element> out;
  for (const Element x : h.elements()) {
    bool central = std::all_of(h.generators().begin(), h.generators().end(),
                               [&](Element s) { return g.commute_unchecked(x, s); });
    if (central) out.push_back(x);
  }
  return from_closed_set(g, out);
}

Subgroup centralizer(const ConcreteGroup& g, Element x) {
  if (x >= g.order()) throw InvalidArgument("centralizer: element out of range");
  const Element one[] = {x};
  return centralizer_of_set(g, one);
}

Subgroup centralizer_of_set(const ConcreteGroup& g, std::span<const Element> s) {
  std::vector<Element> out;
  for (Element h = 0; h < g.order(); ++h) {
    bool ok = std::all_of(s.begin(), s.end(), [&](Element x) { return g.commute_unchecked(x, h); });
    if (ok) out.push_back(h);
  }
  return from_closed_set(g, out);
}

std::vector<ConjClass> conjugacy_classes(const ConcreteGroup& g) {
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<ConjClass> out;
  const auto& gens = g.generators();
  for (Element e = 0; e < g.order(); ++e) {
    if (seen[e]) continue;
    ConjClass c;
    c.rep = e;
    c.members.push_back(e);
    seen[e] = 1;
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      const Element m = c.members[i];
      for (const Element s : gens) {
        const Element img = g.conjugate_unchecked(m, s);
        if (!seen[img]) {
          seen[img] = 1;
          c.members.push_back(img);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::uint32_t> class_index(const ConcreteGroup& g, const std::vector<ConjClass>& classes) {
  std::vector<std::uint32_t> idx(g.order(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const Element m : classes[i].members) idx[m] = static_cast<std::uint32_t>(i);
  }
  return idx;
}

Subgroup frattini(const ConcreteGroup& g, const Subgroup& h) {
  SubgroupBuilder b(g);
  for (const Element x : h.elements()) b.add(g.mul_unchecked(x, x));
  // (H, H) is generated by (a, s) with a in H and s ranging over generators of H.
  for (const Element a : h.elements()) {
    for (const Element s : h.generators()) {
      b.add(g.mul_unchecked(g.mul_unchecked(g.inv_unchecked(a), g.inv_unchecked(s)),
                            g.mul_unchecked(a, s)));
    }
  }
  return std::move(b).finish();
}

Subgroup squares_subgroup(const ConcreteGroup& g, const Subgroup& h) {
  SubgroupBuilder b(g);
  for (const Element x : h.elements()) b.add(g.mul_unchecked(x, x));
  return std::move(b).finish();
}

int min_generators(const ConcreteGroup& g, const Subgroup& h) {
  if (h.order() <= 1) return 0;
  const Subgroup phi = frattini(g, h);
  int d = 0;
  for (std::size_t q = h.order() / phi.order(); q > 1; q >>= 1) ++d;
  return d;
}

Subgroup omega(const ConcreteGroup& g, const Subgroup& h, int i) {
  if (i < 0) throw InvalidArgument("omega: negative index");
  SubgroupBuilder b(g);
  for (const Element x : h.elements()) {
    Element y = x;
    for (int j = 0; j < i; ++j) y = g.mul_unchecked(y, y);
    if (y == kIdentity) b.add(x);
  }
  return std::move(b).finish();
}

bool is_abelian(const ConcreteGroup& g, const Subgroup& h) {
  const auto& s = h.generators();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.commute_unchecked(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_normal(const ConcreteGroup& g, const Subgroup& h) {
  for (const Element a : h.generators()) {
    for (const Element s : g.generators()) {
      if (!h.contains(g.conjugate_unchecked(a, s))) return false;
    }
  }
  return true;
}

bool is_normal_subset(const ConcreteGroup& g, const ElementSet& s) {
  for (Element a = 0; a < g.order(); ++a) {
    if (!s.contains(a)) continue;
    for (const Element x : g.generators()) {
      if (!s.contains(g.conjugate_unchecked(a, x))) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> abelian_invariants(const ConcreteGroup& g, const Subgroup& h) {
  if (!is_abelian(g, h)) throw InvalidArgument("abelian_invariants: subgroup is not abelian");
  // |Omega_i(H)| for i = 0, 1, ...; in an abelian 2-group the elements with
  // x^(2^i) = 1 form a subgroup and log2 of its order counts the cyclic
  // factors, each capped at 2^i.
  std::vector<int> log_omega{0};
  while (true) {
    const int i = static_cast<int>(log_omega.size());
    std::size_t count = 0;
    for (const Element x : h.elements()) {
      Element y = x;
      for (int j = 0; j < i; ++j) y = g.mul_unchecked(y, y);
      if (y == kIdentity) ++count;
    }
    int lg = 0;
    while ((std::size_t{1} << lg) < count) ++lg;
    log_omega.push_back(lg);
    if (count == h.order()) break;
  }
  // at_least[i] = number of cyclic factors of order >= 2^i.
  std::vector<std::int64_t> out;
  const int top = static_cast<int>(log_omega.size()) - 1;
  for (int i = top; i >= 1; --i) {
    const int at_least_i = log_omega[static_cast<std::size_t>(i)] - log_omega[static_cast<std::size_t>(i - 1)];
    const int at_least_next =
        i + 1 <= top ? log_omega[static_cast<std::size_t>(i + 1)] - log_omega[static_cast<std::size_t>(i)] : 0;
    for (int c = 0; c < at_least_i - at_least_next; ++c) out.push_back(std::int64_t{1} << i);
  }
  return out;
}

namespace {

struct EaLevel {
  std::vector<std::vector<Element>> subgroups;  // sorted element lists
  std::vector<std::vector<Element>> gens;
  std::vector<std::uint8_t> extendable;
};

EaLevel extend_level(const ConcreteGroup& g, const EaLevel& level,
                     const std::vector<Element>& involutions) {
  std::map<std::vector<Element>, std::vector<Element>> next;
  EaLevel out;
  for (std::size_t i = 0; i < level.subgroups.size(); ++i) {
    const auto& e = level.subgroups[i];
    const auto& gens = level.gens[i];
    for (const Element t : involutions) {
      if (std::binary_search(e.begin(), e.end(), t)) continue;
      const bool commutes = std::all_of(gens.begin(), gens.end(),
                                        [&](Element s) { return g.commute_unchecked(s, t); });
      if (!commutes) continue;
      std::vector<Element> bigger = e;
      bigger.reserve(e.size() * 2);
      for (const Element x : e) bigger.push_back(g.mul_unchecked(x, t));
      std::sort(bigger.begin(), bigger.end());
      if (next.find(bigger) == next.end()) {
        std::vector<Element> ng = gens;
        ng.push_back(t);
        next.emplace(std::move(bigger), std::move(ng));
      }
    }
  }
  for (auto& [elems, gens] : next) {
    out.subgroups.push_back(elems);
    out.gens.push_back(gens);
  }
  return out;
}

std::vector<Element> involutions_of(const ConcreteGroup& g) {
  std::vector<Element> out;
  for (Element x = 1; x < g.order(); ++x) {
    if (g.mul_unchecked(x, x) == kIdentity) out.push_back(x);
  }
  return out;
}

// All levels of the elementary abelian lattice, with maximality recorded.
std::vector<EaLevel> elementary_abelian_levels(const ConcreteGroup& g) {
  const auto invs = involutions_of(g);
  std::vector<EaLevel> levels(1);
  levels[0].subgroups.push_back({kIdentity});
  levels[0].gens.emplace_back();
  while (!levels.back().subgroups.empty()) {
    EaLevel next = extend_level(g, levels.back(), invs);
    // A subgroup is extendable iff some element of the next level contains it.
    auto& cur = levels.back();
    cur.extendable.assign(cur.subgroups.size(), 0);
    for (std::size_t i = 0; i < cur.subgroups.size(); ++i) {
      const auto& e = cur.subgroups[i];
      for (const Element t : invs) {
        if (std::binary_search(e.begin(), e.end(), t)) continue;
        if (std::all_of(cur.gens[i].begin(), cur.gens[i].end(),
                        [&](Element s) { return g.commute_unchecked(s, t); })) {
          cur.extendable[i] = 1;
          break;
        }
      }
    }
    if (next.subgroups.empty()) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

std::vector<Subgroup> elementary_abelian_subgroups(const ConcreteGroup& g) {
  std::vector<Subgroup> out;
  for (auto& level : elementary_abelian_levels(g)) {
    for (std::size_t i = 0; i < level.subgroups.size(); ++i) {
      out.emplace_back(g.order(), level.subgroups[i], level.gens[i]);
    }
  }
  return out;
}

std::vector<Subgroup> maximal_elementary_abelian(const ConcreteGroup& g) {
  std::vector<Subgroup> out;
  for (auto& level : elementary_abelian_levels(g)) {
    for (std::size_t i = 0; i < level.subgroups.size(); ++i) {
      if (!level.extendable[i]) out.emplace_back(g.order(), level.subgroups[i], level.gens[i]);
    }
  }
  return out;
}

std::vector<Element> conjugate_set(const ConcreteGroup& g, std::span<const Element> h, Element x) {
  std::vector<Element> out;
  out.reserve(h.size());
  for (const Element e : h) out.push_back(g.conjugate_unchecked(e, x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> subgroup_conjugacy_classes(const ConcreteGroup& g,
                                                                 const std::vector<Subgroup>& subs) {
  std::map<std::vector<Element>, std::size_t> index;
  for (std::size_t i = 0; i < subs.size(); ++i) index.emplace(subs[i].elements(), i);
  std::vector<std::uint8_t> seen(subs.size(), 0);
  std::vector<std::vector<std::size_t>> orbits;
  // Visiting in lexicographic order makes the first element of each orbit its minimum.
  for (const auto& [elems, start] : index) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    seen[start] = 1;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      const auto& cur = subs[orbit[qi]].elements();
      for (const Element s : g.generators()) {
        auto img = conjugate_set(g, cur, s);
        auto it = index.find(img);
        if (it == index.end()) {
          throw InvalidArgument("subgroup list is not closed under conjugation");
        }
        if (!seen[it->second]) {
          seen[it->second] = 1;
          orbit.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin() + 1, orbit.end(), [&](std::size_t a, std::size_t b) {
      return subs[a].elements() < subs[b].elements();
    });
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace cc2
