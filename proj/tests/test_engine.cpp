#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "cc2/cache.hpp"
#include "cc2/catalog.hpp"
#include "cc2/error.hpp"
#include "cc2/group.hpp"
#include "cc2/invariants.hpp"
#include "cc2/kernels.hpp"
#include "cc2/subgroups.hpp"
#include "cc2/word.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

namespace cc2 {
namespace {

using test::el;

const std::vector<std::string> kXY{"x", "y"};

const ConcreteGroup& group(int m, int n) {
  static std::map<std::pair<int, int>, ConcreteGroup> memo;
  auto it = memo.find({m, n});
  if (it == memo.end()) it = memo.emplace(std::make_pair(m, n), realize(make_spec(m, n))).first;
  return it->second;
}

Subgroup gen(const ConcreteGroup& g, std::initializer_list<const char*> words) {
  std::vector<Element> v;
  for (const char* w : words) v.push_back(el(g, w));
  return closure(g, v);
}


// --- words ---

TEST(Word, ParsesSyllablesAndMergesAdjacent) {
  const Word w = parse_word("x*x*y^-1", kXY);
  ASSERT_EQ(w.letters().size(), 2u);
  EXPECT_EQ(w.letters()[0], (Letter{0, 2}));
  EXPECT_EQ(w.letters()[1], (Letter{1, -1}));
  EXPECT_EQ(w.length(), 3);
  EXPECT_EQ(parse_word("xx^-1", kXY), Word{});
  EXPECT_TRUE(parse_word("1", kXY).empty());
}

TEST(Word, ParenthesesAndSpaces) {
  EXPECT_EQ(parse_word("(x*y)^2", kXY), parse_word("xyxy", kXY));
  EXPECT_EQ(parse_word("(xy)^-1", kXY), parse_word("y^-1x^-1", kXY));
  EXPECT_EQ(parse_word(" x  y ^ 2 ", kXY), parse_word("xy^2", kXY));
}

TEST(Word, LongestNameWins) {
  const std::vector<std::string> names{"x", "x1", "x2"};
  const Word w = parse_word("x1x2x", names);
  ASSERT_EQ(w.letters().size(), 3u);
  EXPECT_EQ(w.letters()[0].gen, 1);
  EXPECT_EQ(w.letters()[1].gen, 2);
  EXPECT_EQ(w.letters()[2].gen, 0);
}

TEST(Word, RejectsMalformedInput) {
  EXPECT_THROW((void)parse_word("z", kXY), InvalidArgument);
  EXPECT_THROW((void)parse_word("x^", kXY), InvalidArgument);
  EXPECT_THROW((void)parse_word("(xy", kXY), InvalidArgument);
  EXPECT_THROW((void)parse_word("x)", kXY), InvalidArgument);
}

TEST(Word, InverseAndPower) {
  const Word w = parse_word("xy^2", kXY);
  EXPECT_EQ(w.inverse(), parse_word("y^-2x^-1", kXY));
  EXPECT_EQ(w.pow(2), parse_word("xy^2xy^2", kXY));
  EXPECT_EQ(w.pow(-1), w.inverse());
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(w.to_string(kXY), "x*y^2");
}

// --- enumeration and realization ---

TEST(Realize, SmallPresentations) {
  EXPECT_EQ(test::small_group({"a"}, {"a^2"}).order(), 2u);
  EXPECT_EQ(test::c2xc2().order(), 4u);
  EXPECT_EQ(test::cyclic(16).order(), 16u);
  const ConcreteGroup q8 = test::small_group({"a", "b"}, {"a^4", "a^2b^-2", "b^-1aba"});
  EXPECT_EQ(q8.order(), 8u);
}

TEST(Realize, CatalogOrdersAndClass) {
  const ConcreteGroup& g1 = group(1, 6);
  EXPECT_EQ(g1.order(), 64u);
  const ConcreteGroup& g28 = group(28, 6);
  EXPECT_EQ(g28.order(), 64u);
  EXPECT_EQ(nilpotency_class(g28), 4);
}

TEST(Realize, EveryCatalogGroupHasOrderAndClass) {
  for (const auto& s : test::specs_between(5, 9)) {
    const ConcreteGroup g = realize(s);
    EXPECT_EQ(g.order(), s.order()) << s.label();
    EXPECT_EQ(nilpotency_class(g), s.n - 2) << s.label();
    EXPECT_EQ(closure(g, g.generators()).order(), g.order()) << s.label();
  }
}

TEST(Realize, RelatorsHoldInRealizedGroup) {
  for (const auto& s : test::specs_between(6, 8)) {
    const Presentation p = build_presentation(s);
    const ConcreteGroup g = realize(s);
    for (const auto& r : p.relators) EXPECT_EQ(g.evaluate(r), kIdentity) << s.label();
  }
}

TEST(Realize, CollapseIsConsistencyError) {
  // a b a^-1 b^-1 with a^2 = b^2 = 1 and a = b gives C2, not the claimed 4.
  const Presentation p = test::presentation({"a", "b"}, {"a^2", "b^2", "ab^-1"}, 4);
  EXPECT_THROW((void)realize(p), ConsistencyError);
  RealizeOptions lax;
  lax.check_order_claim = false;
  EXPECT_EQ(realize(p, lax).order(), 2u);
}

TEST(Realize, CosetLimitIsResourceError) {
  RealizeOptions opts;
  opts.enumeration.max_cosets = 8;
  EXPECT_THROW((void)realize(test::presentation({"a"}, {"a^64"}), opts), ResourceError);
}

TEST(Realize, RejectsEmptyGeneratorList) {
  EXPECT_THROW((void)enumerate_cosets(Presentation{}), InvalidArgument);
}

TEST(Realize, BfsNumberingIsDeterministic) {
  const ConcreteGroup a = realize(make_spec(20, 7));
  const ConcreteGroup b = realize(make_spec(20, 7));
  EXPECT_TRUE(std::equal(a.dense_table().begin(), a.dense_table().end(), b.dense_table().begin()));
  EXPECT_EQ(a.generators(), b.generators());
}

// --- element operations ---

TEST(Elements, OrdersOfGenerators) {
  EXPECT_EQ(group(1, 6).element_order(el(group(1, 6), "x")), 16);
  EXPECT_EQ(group(13, 6).element_order(el(group(13, 6), "y")), 4);
  EXPECT_EQ(group(1, 6).element_order(kIdentity), 1);
}

TEST(Elements, InverseAndRangeErrors) {
  const ConcreteGroup& g = group(20, 6);
  for (Element a = 0; a < g.order(); ++a) EXPECT_EQ(g.mul(a, g.inv(a)), kIdentity);
  EXPECT_THROW((void)g.mul(0, 64), InvalidArgument);
  EXPECT_THROW((void)g.inv(1000), InvalidArgument);
  EXPECT_THROW((void)g.element_order(64), InvalidArgument);
  EXPECT_THROW((void)g.generator("q"), InvalidArgument);
}

TEST(Elements, PowerMatchesRepeatedProduct) {
  const ConcreteGroup& g = group(9, 7);
  const Element x = el(g, "x");
  Element acc = kIdentity;
  for (int e = 0; e < 40; ++e) {
    EXPECT_EQ(g.power(x, e), acc);
    acc = g.mul(acc, x);
  }
  EXPECT_EQ(g.power(x, -1), g.inv(x));
}

TEST(Elements, ConjugatesFromPresentation) {
  const ConcreteGroup& g1 = group(1, 6);
  EXPECT_EQ(g1.conjugate(el(g1, "x"), el(g1, "y")), el(g1, "x^-1"));
  EXPECT_EQ(g1.conjugate(el(g1, "x"), kIdentity), el(g1, "x"));
  const ConcreteGroup& g5 = group(5, 6);
  EXPECT_EQ(g5.conjugate(el(g5, "x"), el(g5, "t")), el(g5, "x^9"));
}

TEST(Elements, Commutators) {
  const ConcreteGroup& g1 = group(1, 6);
  EXPECT_EQ(g1.commutator(el(g1, "x"), el(g1, "y")), el(g1, "x^-2"));
  for (Element a = 0; a < g1.order(); a += 7) EXPECT_EQ(g1.commutator(a, a), kIdentity);
  // Independent of the library definition: x^-1 y^-1 x y.
  const Element x = el(g1, "x"), y = el(g1, "y");
  EXPECT_EQ(g1.commutator(x, y), g1.mul(g1.mul(g1.inv(x), g1.inv(y)), g1.mul(x, y)));
}

TEST(Elements, OrderOracle) {
  const ConcreteGroup& g = group(33, 8);
  for (Element a = 0; a < g.order(); ++a) {
    const std::int64_t k = g.element_order(a);
    EXPECT_EQ(k, oracle_test::naive_order(g, a));
    EXPECT_EQ(g.order() % static_cast<std::size_t>(k), 0u);
  }
}

// --- subgroups ---

TEST(Subgroups, ClosureExamples) {
  const ConcreteGroup& g1 = group(1, 6);
  EXPECT_EQ(closure(g1, {}).order(), 1u);
  EXPECT_EQ(gen(g1, {"x", "t"}).order(), 32u);
  EXPECT_EQ(gen(g1, {"x^2", "t"}).order(), 16u);
  EXPECT_EQ(gen(group(18, 8), {"x1", "x2"}).order(), 64u);
}

TEST(Subgroups, ClosureMatchesNaive) {
  const ConcreteGroup& g = group(40, 9);
  std::mt19937 rng(7);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<Element> gens{pick(rng), pick(rng)};
    const Subgroup h = closure(g, gens);
    EXPECT_EQ(h.elements(), oracle_test::naive_closure(g, gens));
    EXPECT_EQ(g.order() % h.order(), 0u);
    for (const Element a : h.elements()) {
      EXPECT_TRUE(h.contains(g.inv(a)));
    }
  }
}

TEST(Subgroups, CommutatorSubgroups) {
  const ConcreteGroup& g = group(18, 8);
  EXPECT_EQ(commutator_subgroup(g, trivial_subgroup(g), whole_group(g)).order(), 1u);
  EXPECT_EQ(commutator_subgroup(g, whole_group(g), whole_group(g)), gen(g, {"x1^2", "x2"}));
  const ConcreteGroup& g40 = group(40, 9);
  EXPECT_EQ(commutator_subgroup(g40, whole_group(g40), whole_group(g40)),
            gen(g40, {"y^2x1^2", "x1^2x2", "x2^2"}));
}

TEST(Subgroups, LowerCentralSeriesG1) {
  const ConcreteGroup& g = group(1, 7);
  const auto lcs = lower_central_series(g);
  ASSERT_EQ(lcs.size(), 6u);
  EXPECT_EQ(lcs.front(), whole_group(g));
  EXPECT_EQ(lcs.back().order(), 1u);
  for (std::size_t i = 3; i <= lcs.size(); ++i) {
    const std::string w = "x^" + std::to_string(1 << (i - 1));
    EXPECT_EQ(lcs[i - 1], gen(g, {w.c_str()})) << "gamma_" << i;
  }
}

TEST(Subgroups, LowerCentralSeriesG18) {
  const ConcreteGroup& g = group(18, 8);
  const auto lcs = lower_central_series(g);
  for (std::size_t i = 1; 2 * i <= lcs.size(); ++i) {
    const std::string a = "x1^" + std::to_string(1 << i);
    const std::string b = "x2^" + std::to_string(1 << (i - 1));
    EXPECT_EQ(lcs[2 * i - 1], gen(g, {a.c_str(), b.c_str()})) << "gamma_" << 2 * i;
  }
}

// gamma1* / gamma2 is cyclic when one element together with gamma2 spans it.
bool quotient_cyclic(const ConcreteGroup& g, const Subgroup& top, const Subgroup& bottom) {
  for (const Element a : top.elements()) {
    std::vector<Element> gens = bottom.elements();
    gens.push_back(a);
    if (closure(g, gens).order() == top.order()) return true;
  }
  return false;
}

bool quotient_elementary(const ConcreteGroup& g, const Subgroup& top, const Subgroup& bottom) {
  for (const Element a : top.elements()) {
    if (!bottom.contains(g.mul(a, a))) return false;
    for (const Element b : top.elements()) {
      if (!bottom.contains(g.commutator(a, b))) return false;
    }
  }
  return true;
}

TEST(Subgroups, Gamma1Star) {
  const ConcreteGroup& g7 = group(7, 6);
  const auto lcs7 = lower_central_series(g7);
  const Subgroup s7 = gamma1_star(g7);
  EXPECT_TRUE(lcs7[1].is_subset_of(s7));
  EXPECT_TRUE(quotient_cyclic(g7, s7, lcs7[1]));

  const ConcreteGroup& g13 = group(13, 6);
  const auto lcs13 = lower_central_series(g13);
  const Subgroup s13 = gamma1_star(g13);
  EXPECT_TRUE(quotient_elementary(g13, s13, lcs13[1]));

  const ConcreteGroup ab = test::c2xc4();
  EXPECT_EQ(gamma1_star(ab), whole_group(ab));
}

TEST(Subgroups, Gamma1StarDefinition) {
  for (const int m : {1, 13, 20, 40}) {
    const ConcreteGroup& g = group(m, 7);
    const auto lcs = lower_central_series(g);
    const Subgroup& g2 = lcs[1];
    const Subgroup& g4 = lcs[3];
    std::vector<Element> want;
    for (Element a = 0; a < g.order(); ++a) {
      bool ok = true;
      for (const Element h : g2.elements()) ok = ok && g4.contains(g.commutator(h, a));
      if (ok) want.push_back(a);
    }
    EXPECT_EQ(gamma1_star(g).elements(), want) << m;
  }
}

TEST(Subgroups, Centers) {
  const ConcreteGroup ab = test::c2xc4();
  EXPECT_EQ(center(ab), whole_group(ab));
  const ConcreteGroup& g4 = group(4, 6);
  const Subgroup z = center(g4);
  EXPECT_EQ(z, gen(g4, {"x^4t"}));
  EXPECT_EQ(abelian_invariants(g4, z), (std::vector<std::int64_t>{4}));
  for (const auto& s : test::specs_between(6, 7)) {
    const ConcreteGroup g = realize(s);
    EXPECT_EQ(center(g).elements(), oracle_test::naive_center(g)) << s.label();
  }
}

TEST(Subgroups, CentralizerOfYInG28) {
  const ConcreteGroup& g = group(28, 8);
  const Element y = el(g, "y");
  std::vector<Element> gens = center(g).elements();
  gens.push_back(y);
  EXPECT_EQ(centralizer(g, y), closure(g, gens));
}

TEST(Subgroups, CentralizersMatchNaiveAndContainCenter) {
  const ConcreteGroup& g = group(23, 7);
  const Subgroup z = center(g);
  for (Element a = 0; a < g.order(); ++a) {
    const Subgroup c = centralizer(g, a);
    EXPECT_EQ(c.elements(), oracle_test::naive_centralizer(g, a));
    EXPECT_TRUE(c.contains(a));
    EXPECT_TRUE(z.is_subset_of(c));
  }
  const std::vector<Element> pair{el(g, "x1"), el(g, "y")};
  EXPECT_EQ(centralizer_of_set(g, pair), z);
}

TEST(Subgroups, ClassesMatchNaive) {
  for (const int m : {1, 13, 18, 35}) {
    const ConcreteGroup& g = group(m, 7 + (m == 35));
    const auto got = conjugacy_classes(g);
    const auto want = oracle_test::naive_classes(g);
    ASSERT_EQ(got.size(), want.size()) << m;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].members, want[i]);
      EXPECT_EQ(got[i].rep, want[i].front());
    }
  }
}

TEST(Subgroups, AbelianClassesAreSingletons) {
  const ConcreteGroup g = test::c2xc4();
  const auto c = conjugacy_classes(g);
  ASSERT_EQ(c.size(), 8u);
  for (const auto& k : c) EXPECT_EQ(k.members.size(), 1u);
}

TEST(Subgroups, ClassesOutsideAInG1) {
  const ConcreteGroup& g = group(1, 6);
  const Subgroup a = gen(g, {"x", "t"});
  const Subgroup g2 = commutator_subgroup(g, whole_group(g), whole_group(g));
  int outside = 0;
  for (const auto& k : conjugacy_classes(g)) {
    if (a.contains(k.rep)) continue;
    ++outside;
    EXPECT_EQ(k.members.size(), 8u);
    std::set<Element> coset;
    for (const Element h : g2.elements()) coset.insert(g.mul(k.rep, h));
    EXPECT_EQ(std::vector<Element>(coset.begin(), coset.end()), k.members);
  }
  EXPECT_EQ(outside, 4);
}

TEST(Subgroups, ClassesOutsideAInG18) {
  const ConcreteGroup& g = group(18, 8);
  const Subgroup a = gen(g, {"x1", "x2"});
  EXPECT_EQ(classes_in_subset(g, set_difference(whole_group(g), a)), 7);
}

TEST(Subgroups, ClassIndexInvertsClasses) {
  const ConcreteGroup& g = group(29, 8);
  const auto classes = conjugacy_classes(g);
  const auto idx = class_index(g, classes);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const Element e : classes[i].members) EXPECT_EQ(idx[e], i);
  }
}

TEST(Subgroups, MinGenerators) {
  const ConcreteGroup c8 = test::cyclic(8);
  EXPECT_EQ(min_generators(c8, whole_group(c8)), 1);
  EXPECT_EQ(min_generators(c8, trivial_subgroup(c8)), 0);
  const ConcreteGroup& g1 = group(1, 6);
  EXPECT_EQ(min_generators(g1, whole_group(g1)), 3);
  for (const int m : {28, 33, 36, 39}) {
    const ConcreteGroup& g = group(m, 8);
    const auto st = structure_subgroups(g, *g.spec());
    ASSERT_TRUE(st.m1 && st.m2 && st.m3);
    EXPECT_EQ(min_generators(g, *st.m1), 2) << m;
    EXPECT_EQ(min_generators(g, *st.m2), 2) << m;
    EXPECT_EQ(min_generators(g, *st.m3), 3) << m;
  }
}

TEST(Subgroups, FrattiniIsSquaresFor2Groups) {
  for (const int m : {1, 16, 27, 43}) {
    const ConcreteGroup& g = group(m, 7);
    EXPECT_EQ(frattini(g, whole_group(g)), squares_subgroup(g, whole_group(g))) << m;
  }
}

TEST(Subgroups, Omega) {
  const ConcreteGroup ab = test::c2xc4();
  EXPECT_EQ(omega(ab, whole_group(ab), 1).order(), 4u);
  const ConcreteGroup& g1 = group(1, 6);
  const Subgroup a = gen(g1, {"x", "t"});
  const Subgroup o = omega(g1, a, 1);
  EXPECT_EQ(o, gen(g1, {"x^8", "t"}));
  EXPECT_EQ(abelian_invariants(g1, o), (std::vector<std::int64_t>{2, 2}));
}

TEST(Subgroups, OmegaOfAIsCentralInFam8) {
  for (int n = 6; n <= 8; ++n) {
    for (const auto& s : catalog_at(n)) {
      if (s.family != Family::Fam8) continue;
      const ConcreteGroup g = realize(s);
      const Subgroup a = gen(g, {"x1", "x2"});
      std::vector<Element> gens = a.elements();
      gens.push_back(el(g, "y^2"));
      const Subgroup ay2 = closure(g, gens);
      EXPECT_TRUE(omega(g, a, 1).is_subset_of(center(g, ay2))) << s.label();
    }
  }
}

TEST(Subgroups, AbelianInvariants) {
  const ConcreteGroup v = test::c2xc2();
  EXPECT_EQ(abelian_invariants(v, whole_group(v)), (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(abelian_invariants(group(15, 6), center(group(15, 6))), (std::vector<std::int64_t>{4}));
  EXPECT_EQ(abelian_invariants(group(16, 7), center(group(16, 7))), (std::vector<std::int64_t>{2}));
  const ConcreteGroup& g1 = group(1, 6);
  EXPECT_THROW((void)abelian_invariants(g1, whole_group(g1)), InvalidArgument);
}

// Every abelian centralizer and every center up to n=7 against the greedy oracle.
TEST(Subgroups, AbelianInvariantsMatchGreedy) {
  for (const auto& s : test::specs_between(6, 7)) {
    const ConcreteGroup g = realize(s);
    std::vector<Subgroup> subs{center(g)};
    for (Element a = 0; a < g.order(); a += 5) {
      const Subgroup c = centralizer(g, a);
      if (is_abelian(g, c)) subs.push_back(c);
    }
    subs.push_back(gen(g, {g.generator_names()[0].c_str()}));
    for (const auto& h : subs) {
      EXPECT_EQ(abelian_invariants(g, h), oracle_test::greedy_abelian_invariants(g, h.elements())) << s.label();
    }
  }
}

TEST(Subgroups, ElementaryAbelianOfKleinGroup) {
  const ConcreteGroup v = test::c2xc2();
  const auto maxes = maximal_elementary_abelian(v);
  ASSERT_EQ(maxes.size(), 1u);
  EXPECT_EQ(maxes[0], whole_group(v));
  EXPECT_EQ(elementary_abelian_subgroups(v).size(), 5u);
}

TEST(Subgroups, G35HasUniqueMaximalElementaryAbelian) {
  const ConcreteGroup& g = group(35, 8);
  const auto maxes = maximal_elementary_abelian(g);
  ASSERT_EQ(maxes.size(), 1u);
  EXPECT_EQ(maxes[0].order(), 4u);
  const Subgroup a = structure_subgroups(g, *g.spec()).a;
  EXPECT_EQ(maxes[0], omega(g, a, 1));
}

TEST(Subgroups, G28MaximalElementaryAbelianClasses) {
  const ConcreteGroup& g = group(28, 8);
  const auto maxes = maximal_elementary_abelian(g);
  std::map<std::size_t, int> by_order;
  for (const auto& orbit : subgroup_conjugacy_classes(g, maxes)) ++by_order[maxes[orbit.front()].order()];
  EXPECT_EQ(by_order, (std::map<std::size_t, int>{{8, 1}, {16, 1}}));
}

TEST(Subgroups, QuillenMatchesCliqueOracle) {
  for (const auto& s : test::specs_between(5, 7)) {
    const ConcreteGroup g = realize(s);
    const QuillenParam q = quillen(g);
    std::map<int, int> got;
    for (int r = 1; r <= 4; ++r) {
      if (q.q[r - 1]) got[r] = q.q[r - 1];
    }
    EXPECT_EQ(got, oracle_test::clique_quillen(g)) << s.label();
  }
}

TEST(Subgroups, SubgroupOrbitsPartitionAndAreConjugation) {
  const ConcreteGroup& g = group(30, 8);
  const auto subs = elementary_abelian_subgroups(g);
  const auto orbits = subgroup_conjugacy_classes(g, subs);
  std::size_t total = 0;
  for (const auto& orbit : orbits) {
    total += orbit.size();
    const auto& rep = subs[orbit.front()].elements();
    for (const std::size_t i : orbit) EXPECT_LE(rep, subs[i].elements());
    for (Element h = 0; h < g.order(); h += 11) {
      auto img = conjugate_set(g, rep, h);
      std::sort(img.begin(), img.end());
      bool found = false;
      for (const std::size_t i : orbit) found = found || subs[i].elements() == img;
      EXPECT_TRUE(found);
    }
  }
  EXPECT_EQ(total, subs.size());
}

TEST(Subgroups, Normality) {
  const ConcreteGroup& g = group(1, 6);
  EXPECT_TRUE(is_normal(g, gen(g, {"x", "t"})));
  EXPECT_FALSE(is_normal(g, gen(g, {"y"})));
  EXPECT_TRUE(is_abelian(g, gen(g, {"x", "t"})));
  EXPECT_FALSE(is_abelian(g, whole_group(g)));
}

// --- properties ---

TEST(Properties, BurnsideCountsClasses) {
  for (const auto& s : test::specs_between(5, 8)) {
    if (s.order() > 256) continue;
    const ConcreteGroup g = realize(s);
    EXPECT_EQ(conjugacy_classes(g).size(), oracle_test::burnside_class_count(g)) << s.label();
  }
}

TEST(Properties, GroupAxiomsBySmallTriples) {
  for (const auto& s : test::specs_between(5, 6)) {
    const ConcreteGroup g = realize(s);
    EXPECT_TRUE(kernels::full_associativity(g.dense_table(), g.order())) << s.label();
    for (Element a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.mul(a, kIdentity), a);
      EXPECT_EQ(g.mul(kIdentity, a), a);
      EXPECT_EQ(g.mul(g.inv(a), a), kIdentity);
    }
  }
}

TEST(Properties, GroupAxiomsByLightsTest) {
  for (const auto& s : test::specs_between(7, 9)) {
    const ConcreteGroup g = realize(s);
    std::vector<std::uint32_t> gens(g.generators().begin(), g.generators().end());
    EXPECT_TRUE(kernels::light_associativity(g.dense_table(), g.order(), gens)) << s.label();
  }
}

TEST(Properties, LightsTestCatchesBrokenTable) {
  const ConcreteGroup& g = group(1, 6);
  std::vector<std::uint16_t> t(g.dense_table().begin(), g.dense_table().end());
  std::vector<std::uint32_t> gens(g.generators().begin(), g.generators().end());
  // Swap two entries of one row away from the identity row and column.
  std::swap(t[5 * 64 + 9], t[5 * 64 + 10]);
  EXPECT_FALSE(kernels::light_associativity(t, 64, gens));
  EXPECT_FALSE(kernels::full_associativity(t, 64));
}

TEST(Properties, ClassEquation) {
  for (const auto& s : test::specs_between(6, 8)) {
    const ConcreteGroup g = realize(s);
    std::size_t sum = 0;
    for (const auto& k : conjugacy_classes(g)) {
      sum += k.members.size();
      EXPECT_EQ(k.members.size() * centralizer(g, k.rep).order(), g.order()) << s.label();
      EXPECT_EQ(k.rep, k.members.front());
    }
    EXPECT_EQ(sum, g.order()) << s.label();
  }
}

TEST(Properties, ConjugatesStayInClass) {
  const ConcreteGroup& g = group(42, 9);
  const auto classes = conjugacy_classes(g);
  const auto idx = class_index(g, classes);
  std::mt19937 rng(11);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
  for (int i = 0; i < 2000; ++i) {
    const Element a = pick(rng), h = pick(rng);
    EXPECT_EQ(idx[g.conjugate(a, h)], idx[a]);
  }
}

TEST(Properties, MinGeneratorsViaSquaresForAllCentralizers) {
  for (const auto& s : test::specs_between(6, 7)) {
    const ConcreteGroup g = realize(s);
    for (const auto& k : conjugacy_classes(g)) {
      const Subgroup c = centralizer(g, k.rep);
      EXPECT_EQ(min_generators(g, c), oracle_test::d_via_squares(g, c.elements())) << s.label();
    }
  }
}

TEST(Properties, OmegaOfAIsNormalKleinInFirstSixteen) {
  for (int n = 6; n <= 8; ++n) {
    for (const auto& s : catalog_at(n)) {
      if (s.m > 16) continue;
      const ConcreteGroup g = realize(s);
      const Subgroup o = omega(g, structure_subgroups(g, s).a, 1);
      EXPECT_EQ(o.order(), 4u) << s.label();
      EXPECT_EQ(abelian_invariants(g, o), (std::vector<std::int64_t>{2, 2})) << s.label();
      EXPECT_TRUE(is_normal(g, o)) << s.label();
    }
  }
}

TEST(Properties, Fam8MaximalElementaryAbelianAreSmall) {
  for (int n = 7; n <= 8; ++n) {
    for (const auto& s : catalog_at(n)) {
      if (s.family != Family::Fam8) continue;
      const ConcreteGroup g = realize(s);
      for (const auto& e : maximal_elementary_abelian(g)) {
        EXPECT_LE(e.order(), 8u) << s.label();
        if (e.order() == 8) {
          EXPECT_FALSE(is_normal(g, e)) << s.label();
        }
      }
    }
  }
}

// --- kernels ---

TEST(Kernels, ParallelMatchesSerial) {
  for (const int m : {1, 24, 40}) {
    const ConcreteGroup& g = group(m, 9);
    const auto table = g.dense_table();
    EXPECT_EQ(kernels::centralizer_orders(table, g.order()), kernels::centralizer_orders_serial(table, g.order()));
    std::vector<std::uint32_t> gens(g.generators().begin(), g.generators().end());
    EXPECT_EQ(kernels::light_associativity(table, g.order(), gens),
              kernels::light_associativity_serial(table, g.order(), gens));
  }
  const ConcreteGroup& small = group(3, 6);
  EXPECT_EQ(kernels::full_associativity(small.dense_table(), 64),
            kernels::full_associativity_serial(small.dense_table(), 64));
}

TEST(Kernels, CentralizerOrdersMatchNaive) {
  const ConcreteGroup& g = group(12, 7);
  const auto counts = kernels::centralizer_orders(g.dense_table(), g.order());
  for (Element a = 0; a < g.order(); ++a) EXPECT_EQ(counts[a], oracle_test::naive_centralizer(g, a).size());
}

// The dense table built from the spanning tree must agree with evaluating
// generator words directly.
TEST(Kernels, DenseTableMatchesGeneratorAction) {
  const ConcreteGroup& g = group(36, 8);
  for (Element a = 0; a < g.order(); ++a) {
    for (int c = 0; c < g.columns(); c += 2) {
      EXPECT_EQ(g.mul(a, g.generators()[static_cast<std::size_t>(c / 2)]), g.act(a, c));
    }
  }
}

// --- cache ---

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("cc2_cache_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CacheTest, FileName) { EXPECT_EQ(cache::file_name(make_spec(24, 8)), "G24_n8.cc2g"); }

TEST_F(CacheTest, RoundTripPreservesTableAndFingerprint) {
  const GroupSpec s = make_spec(31, 8);
  const ConcreteGroup& g = group(31, 8);
  const auto bytes = cache::serialize(g);
  ASSERT_GE(bytes.size(), 4u + 1 + 1 + 2 + 2 * g.order() * g.order());
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "CC2G");
  EXPECT_EQ(bytes[4], cache::kFormatVersion);
  EXPECT_EQ(bytes[5], 8);
  const ConcreteGroup back = cache::deserialize(bytes, s);
  EXPECT_TRUE(std::equal(g.dense_table().begin(), g.dense_table().end(), back.dense_table().begin()));
  EXPECT_EQ(back.generators(), g.generators());
  EXPECT_EQ(back.generator_names(), g.generator_names());
  EXPECT_EQ(fingerprint(back), fingerprint(g));
}

TEST_F(CacheTest, RejectsCorruptFiles) {
  const GroupSpec s = make_spec(3, 6);
  auto bytes = cache::serialize(group(3, 6));
  auto bad = bytes;
  bad[0] = 'X';
  EXPECT_THROW((void)cache::deserialize(bad, s), CacheError);
  bad = bytes;
  bad[4] = 0x7f;
  EXPECT_THROW((void)cache::deserialize(bad, s), CacheError);
  bad = bytes;
  bad.resize(bad.size() - 3);
  EXPECT_THROW((void)cache::deserialize(bad, s), CacheError);
  bad = bytes;
  bad.push_back(0);
  EXPECT_THROW((void)cache::deserialize(bad, s), CacheError);
  EXPECT_THROW((void)cache::deserialize(bytes, make_spec(3, 7)), CacheError);
  EXPECT_THROW((void)cache::deserialize({}, s), CacheError);
  // A table that is not a group: break the identity row.
  bad = bytes;
  const std::size_t table_start = bytes.size() - 2 * 64 * 64;
  std::swap(bad[table_start], bad[table_start + 2]);
  EXPECT_THROW((void)cache::deserialize(bad, s), CacheError);
}

TEST_F(CacheTest, LoadOrRealizeHitsSecondTime) {
  const GroupSpec s = make_spec(20, 7);
  bool hit = true;
  const ConcreteGroup a = cache::load_or_realize(s, dir_, &hit);
  EXPECT_FALSE(hit);
  const ConcreteGroup b = cache::load_or_realize(s, dir_, &hit);
  EXPECT_TRUE(hit);
  EXPECT_EQ(fingerprint(a), fingerprint(b));
  const auto st = cache::stat(dir_);
  EXPECT_EQ(st.files, 1u);
  EXPECT_EQ(st.entries, (std::vector<std::string>{"G20_n7.cc2g"}));
  EXPECT_GT(st.bytes, 2u * 128 * 128);
}

TEST_F(CacheTest, NoDirectoryMeansPlainRealize) {
  bool hit = true;
  const ConcreteGroup g = cache::load_or_realize(make_spec(2, 6), std::nullopt, &hit);
  EXPECT_FALSE(hit);
  EXPECT_EQ(g.order(), 64u);
}

TEST_F(CacheTest, StatOfMissingDirectoryIsEmpty) {
  const auto st = cache::stat(dir_ / "absent");
  EXPECT_EQ(st.files, 0u);
  EXPECT_EQ(st.bytes, 0u);
  EXPECT_TRUE(st.entries.empty());
}

TEST_F(CacheTest, ClearRemovesOnlyCacheFiles) {
  cache::write_file(dir_ / cache::file_name(make_spec(1, 6)), group(1, 6));
  cache::write_file(dir_ / cache::file_name(make_spec(2, 6)), realize(make_spec(2, 6)));
  std::ofstream(dir_ / "keep.txt") << "x";
  EXPECT_EQ(cache::stat(dir_).files, 2u);
  EXPECT_EQ(cache::clear(dir_), 2u);
  EXPECT_EQ(cache::stat(dir_).files, 0u);
  EXPECT_TRUE(std::filesystem::exists(dir_ / "keep.txt"));
}

TEST_F(CacheTest, ReadFileOfMissingPathThrows) {
  EXPECT_THROW((void)cache::read_file(dir_ / "nope.cc2g"), CacheError);
}

}  // namespace
}  // namespace cc2
