#include "cc2/invariants.hpp"

#include <algorithm>

#include "cc2/error.hpp"

namespace cc2 {

namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

int log2_size(std::size_t n) {
  int r = 0;
  while (n > 1) {
    n >>= 1;
    ++r;
  }
  return r;
}

Element eval(const ConcreteGroup& g, std::string_view text) {
  return g.evaluate(parse_word(text, g.generator_names()));
}

}  // namespace

std::string QuillenParam::to_string() const {
  return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
         std::to_string(q[3]) + ")";
}

std::string center_type_string(const CenterType& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

int class_count(const ConcreteGroup& g) { return static_cast<int>(conjugacy_classes(g).size()); }

int roggenkamp(const ConcreteGroup& g) {
  int r = 0;
  for (const auto& c : conjugacy_classes(g)) r += min_generators(g, centralizer(g, c.rep));
  return r;
}

int roggenkamp_of_subset(const ConcreteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order() || !is_normal_subset(g, s)) {
    throw InvalidArgument("roggenkamp_of_subset: subset is not closed under conjugation");
  }
  int r = 0;
  for (const auto& c : conjugacy_classes(g)) {
    if (s.contains(c.rep)) r += min_generators(g, centralizer(g, c.rep));
  }
  return r;
}

int classes_in_subset(const ConcreteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order() || !is_normal_subset(g, s)) {
    throw InvalidArgument("classes_in_subset: subset is not closed under conjugation");
  }
  int count = 0;
  for (const auto& c : conjugacy_classes(g)) count += s.contains(c.rep) ? 1 : 0;
  return count;
}

QuillenParam quillen(const ConcreteGroup& g) {
  const auto maximal = maximal_elementary_abelian(g);
  QuillenParam p;
  for (const auto& orbit : subgroup_conjugacy_classes(g, maximal)) {
    const int rank = log2_size(maximal[orbit.front()].order());
    if (rank < 1 || rank > 4) {
      throw ConsistencyError("maximal elementary abelian subgroup of rank " + std::to_string(rank));
    }
    ++p.q[static_cast<std::size_t>(rank - 1)];
  }
  return p;
}

CenterType center_type(const ConcreteGroup& g) { return abelian_invariants(g, center(g)); }

std::vector<NamedWord> profile_words(const GroupSpec& spec) {
  std::vector<NamedWord> out;
  auto add = [&](std::string name, const std::vector<std::string>& gens, std::string text) {
    out.push_back({std::move(name), parse_word(text, gens)});
  };
  const std::vector<std::string> xyt{"x", "y", "t"};
  const std::vector<std::string> x12y{"x1", "x2", "y"};
  switch (spec.family) {
    case Family::Fam59:
    case Family::Fam9:
      add("y", xyt, "y");
      add("yx", xyt, "yx");
      add("yt", xyt, "yt");
      add("yxt", xyt, "yxt");
      break;
    case Family::Fam50:
      add("y", xyt, "y");
      add("yx", xyt, "yx");
      add("yt", xyt, "yt");
      add("y^-1", xyt, "y^-1");
      add("yxt", xyt, "yxt");
      add("y^-1x", xyt, "y^-1x");
      break;
    case Family::Fam8:
      add("y", x12y, "y");
      add("y^-1", x12y, "y^-1");
      add("yx1", x12y, "yx1");
      add("y^-1x1", x12y, "y^-1x1");
      add("y^2x1", x12y, "y^2x1");
      add("y^2", x12y, "y^2");
      add("y^2x2", x12y, "y^2x2");
      break;
    case Family::Fam7: {
      const int k = spec.k;
      const std::string e1 = std::to_string(pow2(k - 1));
      const std::string e2 = std::to_string(pow2(k - 2));
      const bool odd = spec.epsilon == 1;
      const bool nonabelian_a = spec.m >= 36 && spec.m <= 39;
      add("y^2", x12y, "y^2");
      if (nonabelian_a) {
        add("yx1^-1x2^(2^(k-2))", x12y, "yx1^-1x2^" + e2);
        break;
      }
      add("y^2x1^-2", x12y, "y^2x1^-2");
      add("yx1^-1", x12y, "yx1^-1");
      add("yx1^-1x2^(2^(k-1))", x12y, "yx1^-1x2^" + e1);
      if (!odd) {
        add("yx1^-1x2^(2^(k-2))", x12y, "yx1^-1x2^" + e2);
        add("yx1^-1x2^(-2^(k-2))", x12y, "yx1^-1x2^-" + e2);
      }
      break;
    }
  }
  return out;
}

OrderProfile order_profile(const ConcreteGroup& g, const GroupSpec& spec) {
  OrderProfile out;
  for (const auto& w : profile_words(spec)) out.emplace_back(w.name, g.element_order(g.evaluate(w.word)));
  return out;
}

std::int64_t profile_order(const ConcreteGroup& g, const GroupSpec& spec, std::string_view name) {
  for (const auto& w : profile_words(spec)) {
    if (w.name == name) return g.element_order(g.evaluate(w.word));
  }
  throw InvalidArgument("no designated element '" + std::string(name) + "' for " + spec.label());
}

StructureSubgroups structure_subgroups(const ConcreteGroup& g, const GroupSpec& spec) {
  switch (spec.family) {
    case Family::Fam59:
    case Family::Fam9:
    case Family::Fam50:
      return {closure(g, {eval(g, "x"), eval(g, "t")}), {}, {}, {}, {}};
    case Family::Fam8:
      return {closure(g, {eval(g, "x1"), eval(g, "x2")}), {}, {}, {}, {}};
    case Family::Fam7: {
      const Element x1 = eval(g, "x1");
      const Element x2 = eval(g, "x2");
      const Element y = eval(g, "y");
      Subgroup a = closure(g, {g.mul(x1, x1), x2});
      std::vector<Element> hg = a.generators();
      hg.push_back(g.mul(y, y));
      Subgroup h = closure(g, hg);
      auto extend = [&](Element e) {
        std::vector<Element> gens = h.generators();
        gens.push_back(e);
        return closure(g, gens);
      };
      Subgroup m1 = extend(y);
      Subgroup m2 = extend(x1);
      Subgroup m3 = extend(g.mul(y, x1));
      return {std::move(a), std::move(h), std::move(m1), std::move(m2), std::move(m3)};
    }
  }
  throw InvalidArgument("unknown family");
}

ElementSet set_difference(const Subgroup& outer, const Subgroup& inner) {
  ElementSet s(outer.members().universe());
  for (const Element e : outer.elements()) {
    if (!inner.contains(e)) s.insert(e);
  }
  return s;
}

ElementSet named_subset(const ConcreteGroup& g, const GroupSpec& spec, std::string_view expr) {
  const StructureSubgroups st = structure_subgroups(g, spec);
  std::optional<std::vector<Subgroup>> lcs;
  auto lookup = [&](std::string_view name) -> Subgroup {
    if (name == "G") return whole_group(g);
    if (name == "A") return st.a;
    if (name == "Z") return center(g);
    if (name == "G2" || name == "G3") {
      if (!lcs) lcs = lower_central_series(g);
      const std::size_t i = name == "G2" ? 1 : 2;
      return i < lcs->size() ? (*lcs)[i] : trivial_subgroup(g);
    }
    const std::optional<Subgroup>* opt = nullptr;
    if (name == "H") opt = &st.h;
    if (name == "M1") opt = &st.m1;
    if (name == "M2") opt = &st.m2;
    if (name == "M3") opt = &st.m3;
    if (opt == nullptr) throw InvalidArgument("unknown subgroup name '" + std::string(name) + "'");
    if (!opt->has_value()) {
      throw InvalidArgument("subgroup " + std::string(name) + " is not defined for " +
                            std::string(family_name(spec.family)));
    }
    return **opt;
  };
  ElementSet out(g.order());
  std::size_t start = 0;
  while (start <= expr.size()) {
    std::size_t end = expr.find('+', start);
    if (end == std::string_view::npos) end = expr.size();
    std::string_view term = expr.substr(start, end - start);
    const std::size_t bs = term.find('\\');
    const Subgroup outer = lookup(term.substr(0, bs));
    const Subgroup inner = bs == std::string_view::npos ? trivial_subgroup(g) : lookup(term.substr(bs + 1));
    for (const Element e : outer.elements()) {
      if (bs == std::string_view::npos || !inner.contains(e)) out.insert(e);
    }
    start = end + 1;
  }
  return out;
}

Fingerprint fingerprint(const ConcreteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  f.nilpotency_class = nilpotency_class(g);
  f.cl_count = class_count(g);
  f.roggenkamp = roggenkamp(g);
  f.quillen = quillen(g);
  f.center_type = center_type(g);
  return f;
}

InvariantReport compute_invariants(const ConcreteGroup& g) {
  if (!g.spec()) throw InvalidArgument("compute_invariants needs a catalog group");
  const GroupSpec& spec = *g.spec();
  InvariantReport r;
  r.spec = spec;
  r.order = g.order();
  r.nilpotency_class = nilpotency_class(g);
  r.cl_count = class_count(g);
  r.roggenkamp = roggenkamp(g);
  r.quillen = quillen(g);
  r.center_type = center_type(g);
  r.order_profile = order_profile(g, spec);
  r.duplicate_of = spec.duplicate_of;
  return r;
}

}  // namespace cc2
