#include "cc2/iso.hpp"

#include <chrono>
#include <tuple>

#include "cc2/error.hpp"
#include "cc2/invariants.hpp"
#include "cc2/subgroups.hpp"

namespace cc2 {

namespace {

using Signature = std::tuple<std::int64_t, std::size_t, int>;  // order, class size, d(C_G(g))

std::vector<Signature> element_signatures(const ConcreteGroup& g) {
  std::vector<Signature> sig(g.order());
  for (const auto& c : conjugacy_classes(g)) {
    const Signature s{g.element_order(c.rep), c.members.size(), min_generators(g, centralizer(g, c.rep))};
    for (const Element m : c.members) sig[m] = s;
  }
  return sig;
}

Element evaluate_images(const ConcreteGroup& dst, const Word& w, const std::vector<Element>& images) {
  Element x = kIdentity;
  for (const auto& l : w.letters()) {
    x = dst.mul_unchecked(x, dst.power(images[static_cast<std::size_t>(l.gen)], l.exp));
  }
  return x;
}

class IsoSearch {
 public:
  IsoSearch(const Presentation& p, const ConcreteGroup& dst, std::vector<std::vector<Element>> candidates,
            std::uint64_t budget)
      : p_(p), dst_(dst), candidates_(std::move(candidates)), budget_(budget),
        images_(p.generators.size(), kIdentity), relators_at_(p.generators.size()) {
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      const int top = p.relators[r].max_generator();
      if (top >= 0) relators_at_[static_cast<std::size_t>(top)].push_back(r);
    }
  }

  IsoVerdict run() {
    if (dfs(0)) return IsoVerdict::Isomorphic;
    return exhausted_ ? IsoVerdict::Indeterminate : IsoVerdict::NotIsomorphic;
  }

  [[nodiscard]] const std::vector<Element>& images() const { return images_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(std::size_t level) {
    if (level == images_.size()) return closure(dst_, images_).order() == dst_.order();
    for (const Element c : candidates_[level]) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      images_[level] = c;
      bool ok = true;
      for (const std::size_t r : relators_at_[level]) {
        if (evaluate_images(dst_, p_.relators[r], images_) != kIdentity) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(level + 1)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  const Presentation& p_;
  const ConcreteGroup& dst_;
  std::vector<std::vector<Element>> candidates_;
  std::uint64_t budget_;
  std::vector<Element> images_;
  std::vector<std::vector<std::size_t>> relators_at_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

std::string_view verdict_name(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic:
      return "isomorphic";
    case IsoVerdict::NotIsomorphic:
      return "not-isomorphic";
    case IsoVerdict::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

bool verify_witness(const Presentation& p, const ConcreteGroup& dst, const std::vector<Element>& images) {
  if (images.size() != p.generators.size()) return false;
  for (const Element e : images) {
    if (e >= dst.order()) return false;
  }
  for (const auto& r : p.relators) {
    if (evaluate_images(dst, r, images) != kIdentity) return false;
  }
  return closure(dst, images).order() == dst.order();
}

IsoResult isomorphic(const Presentation& src_p, const ConcreteGroup& src, const ConcreteGroup& dst,
                     const IsoOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  IsoResult res;
  auto finish = [&](IsoResult& r) -> IsoResult& {
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };
  if (src.order() != dst.order() || src_p.generators.size() != src.generators().size()) {
    res.verdict = IsoVerdict::NotIsomorphic;
    return finish(res);
  }
  const auto src_sig = element_signatures(src);
  const auto dst_sig = element_signatures(dst);
  const auto dst_classes = conjugacy_classes(dst);
  std::vector<std::uint8_t> is_rep(dst.order(), 0);
  for (const auto& c : dst_classes) is_rep[c.rep] = 1;

  std::vector<std::vector<Element>> candidates(src.generators().size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Signature want = src_sig[src.generators()[i]];
    for (Element e = 0; e < dst.order(); ++e) {
      if (dst_sig[e] != want) continue;
      if (i == 0 && !is_rep[e]) continue;
      candidates[i].push_back(e);
    }
    if (candidates[i].empty()) {
      res.verdict = IsoVerdict::NotIsomorphic;
      return finish(res);
    }
  }

  IsoSearch search(src_p, dst, std::move(candidates), opts.node_budget);
  res.verdict = search.run();
  res.nodes_explored = search.nodes();
  if (res.verdict == IsoVerdict::Isomorphic) {
    res.witness = search.images();
    for (std::size_t i = 0; i < src_p.generators.size(); ++i) {
      res.witness_by_name[src_p.generators[i]] = search.images()[i];
    }
  }
  return finish(res);
}

IsoPartition pairwise_distinct(const std::vector<IsoInput>& groups, const IsoOptions& opts,
                               const std::vector<Fingerprint>* fingerprints) {
  IsoPartition part;
  std::vector<Fingerprint> own;
  if (fingerprints == nullptr) {
    own.reserve(groups.size());
    for (const auto& g : groups) own.push_back(fingerprint(*g.group));
    fingerprints = &own;
  } else if (fingerprints->size() != groups.size()) {
    throw InvalidArgument("one fingerprint per group expected");
  }
  const auto& fps = *fingerprints;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    bool placed = false;
    for (auto& cls : part.classes) {
      const std::size_t rep = cls.front();
      if (fps[rep] != fps[i]) continue;
      ++part.iso_calls;
      const IsoResult r = isomorphic(groups[rep].presentation, *groups[rep].group, *groups[i].group, opts);
      if (r.verdict == IsoVerdict::Isomorphic) {
        cls.push_back(i);
        placed = true;
        break;
      }
      if (r.verdict == IsoVerdict::Indeterminate) {
        part.complete = false;
        part.indeterminate.emplace_back(rep, i);
      }
    }
    if (!placed) part.classes.push_back({i});
  }
  return part;
}

}  // namespace cc2
