// End-to-end acceptance run over n = 6..10. Prints one PASS/FAIL line per
// criterion followed by the failing records, and exits nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cc2/catalog.hpp"
#include "cc2/iso.hpp"
#include "cc2/kernels.hpp"
#include "cc2/subgroups.hpp"
#include "cc2/verify.hpp"
#include "oracles.hpp"

namespace {

using cc2::VerificationRecord;

struct Outcome {
  int checked = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
};

std::string describe(const VerificationRecord& r) {
  std::string who = r.m == 0 ? "order" : "G" + std::to_string(r.m);
  std::string s = who + "@n=" + std::to_string(r.n) + " " + r.check_name + ": actual " + r.actual.dump();
  if (!r.computed_only()) s += ", expected " + r.expected.dump();
  if (r.error) s += " (error: " + r.detail + ")";
  return s;
}

/// Every record matching the filter must pass and carry an oracle value.
void from_records(Outcome& o, const std::vector<VerificationRecord>& records,
                  const std::function<bool(const VerificationRecord&)>& select) {
  for (const auto& r : records) {
    if (!select(r)) continue;
    o.expect(r.pass && !r.error && !r.computed_only(), describe(r));
  }
}

bool in(int m, int lo, int hi) { return m >= lo && m <= hi; }

bool named(const VerificationRecord& r, std::initializer_list<const char*> checks) {
  for (const char* c : checks) {
    if (r.check_name == c) return true;
  }
  return false;
}

int report(int id, const char* title, const Outcome& o) {
  const bool pass = o.failures.empty() && o.checked > 0;
  std::printf("[%s] criterion %d: %s (%d checks, %zu failed)\n", pass ? "PASS" : "FAIL", id, title, o.checked,
              o.failures.size());
  constexpr std::size_t kShown = 8;
  for (std::size_t i = 0; i < o.failures.size() && i < kShown; ++i) std::printf("       %s\n", o.failures[i].c_str());
  if (o.failures.size() > kShown) std::printf("       ... and %zu more\n", o.failures.size() - kShown);
  std::fflush(stdout);
  return pass ? 0 : 1;
}

std::vector<cc2::GroupSpec> specs_between(int lo, int hi) {
  std::vector<cc2::GroupSpec> out;
  for (int n = lo; n <= hi; ++n) {
    for (const auto& s : cc2::catalog_at(n)) out.push_back(s);
  }
  return out;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  cc2::VerifyOptions vo;
  vo.ns = {6, 7, 8, 9, 10};
  const auto records = cc2::run_verification(vo);
  std::printf("verification grid n=6..10: %zu records\n", records.size());

  int failed = 0;

  {
    Outcome o;
    from_records(o, records, [](const auto& r) { return r.check_name == "lcs_shape"; });
    failed += report(1, "every catalog group realizes with order 2^n and class n-2", o);
  }
  {
    Outcome o;
    from_records(o, records, [](const auto& r) { return in(r.m, 1, 16) && r.check_name == "cl_count"; });
    failed += report(2, "class counts of G1-G16", o);
  }
  {
    Outcome o;
    from_records(o, records, [](const auto& r) { return in(r.m, 1, 16) && r.check_name == "roggenkamp"; });
    failed += report(3, "Roggenkamp parameters of G1-G16", o);
  }
  {
    Outcome o;
    from_records(o, records,
                 [](const auto& r) { return in(r.m, 1, 16) && named(r, {"quillen", "quillen_reps"}); });
    failed += report(4, "Quillen parameters and listed representatives of G1-G16", o);
  }
  {
    Outcome o;
    from_records(o, records, [](const auto& r) { return in(r.m, 1, 16) && r.check_name == "center_type"; });
    failed += report(5, "center types of G1-G16", o);
  }
  {
    Outcome o;
    from_records(o, records, [](const auto& r) {
      return in(r.m, 17, 27) && r.n >= 7 &&
             named(r, {"cl_count", "roggenkamp", "quillen", "order_profile", "class_structure"});
    });
    failed += report(6, "Fam8 class counts, R, Q, element orders, G\\A and R_G(A)", o);
  }
  {
    Outcome o;
    from_records(o, records, [](const auto& r) {
      return in(r.m, 28, 43) && r.n >= 7 &&
             named(r, {"cl_count", "roggenkamp", "quillen", "order_profile", "class_structure"});
    });
    failed += report(7, "Fam7 class counts, R, Q, element orders and subset classes", o);
  }
  {
    Outcome o;
    from_records(o, records, [](const auto& r) { return r.check_name == "qr_collisions"; });
    // The center must split G9 off from G13 and G14.
    for (const int n : {8, 9, 10}) {
      std::vector<cc2::CenterType> z;
      for (const int m : {9, 13, 14}) z.push_back(cc2::center_type(cc2::realize(cc2::make_spec(m, n))));
      o.expect(z[0] != z[1] && z[0] != z[2],
               "center types at n=" + std::to_string(n) + " do not separate G9 from G13, G14");
    }
    failed += report(8, "(Q, R) collisions confined to {G9,G13,G14} and {G24,G25}", o);
  }
  {
    Outcome o;
    from_records(o, records, [](const auto& r) { return r.check_name == "duplicate_iso"; });
    const cc2::IsoOptions budget;
    for (const int n : {8, 9}) {
      const auto a = cc2::make_spec(24, n);
      const auto b = cc2::make_spec(25, n);
      const auto pb = cc2::build_presentation(b);
      const auto ga = cc2::realize(a);
      const auto gb = cc2::realize(b);
      const auto res = cc2::isomorphic(pb, gb, ga, budget);
      const std::string where = "G24 vs G25 at n=" + std::to_string(n);
      o.expect(res.nodes_explored <= budget.node_budget, where + " exceeded the node budget");
      if (n == 9) {
        o.expect(res.isomorphic() && res.witness && cc2::verify_witness(pb, ga, *res.witness),
                 where + ": no verified witness");
      } else {
        o.expect(res.verdict == cc2::IsoVerdict::NotIsomorphic, where + ": not decided as non-isomorphic");
      }
    }
    std::vector<cc2::Presentation> ps;
    std::vector<cc2::ConcreteGroup> gs;
    for (const auto& s : cc2::catalog_at(6)) {
      ps.push_back(cc2::build_presentation(s));
      gs.push_back(cc2::realize(s));
    }
    std::vector<cc2::IsoInput> inputs;
    for (std::size_t i = 0; i < gs.size(); ++i) inputs.push_back({ps[i], &gs[i]});
    const auto part = cc2::pairwise_distinct(inputs, budget);
    o.expect(part.complete && part.classes.size() == 22,
             "pairwise_distinct at n=6 gave " + std::to_string(part.classes.size()) + " classes");
    failed += report(9, "G24 = G25 at n=9, G24 != G25 at n=8, 22 classes at n=6", o);
  }
  {
    Outcome o;
    for (const auto& s : specs_between(5, 12)) {
      const cc2::ConcreteGroup g = cc2::realize(s);
      const std::string who = s.label();
      if (g.order() <= 512) {
        o.expect(cc2::conjugacy_classes(g).size() == cc2::oracle_test::burnside_class_count(g),
                 who + ": Burnside count differs from class enumeration");
      }
      if (g.order() <= cc2::kDenseTableLimit) {
        std::vector<std::uint32_t> gens(g.generators().begin(), g.generators().end());
        bool ok = cc2::kernels::light_associativity(g.dense_table(), g.order(), gens);
        if (g.order() <= 256) ok = ok && cc2::kernels::full_associativity(g.dense_table(), g.order());
        for (cc2::Element a = 0; a < g.order() && ok; ++a) {
          ok = g.mul(a, cc2::kIdentity) == a && g.mul(cc2::kIdentity, a) == a && g.mul(g.inv(a), a) == cc2::kIdentity;
        }
        ok = ok && cc2::closure(g, g.generators()).order() == g.order();
        o.expect(ok, who + ": group axioms fail");
      }
      if (s.n <= 10) {
        for (const auto& k : cc2::conjugacy_classes(g)) {
          const cc2::Subgroup c = cc2::centralizer(g, k.rep);
          const int via_frattini = cc2::min_generators(g, c);
          if (via_frattini != cc2::oracle_test::d_via_squares(g, c.elements())) {
            o.expect(false, who + ": d(C_G(" + std::to_string(k.rep) + ")) differs between Frattini and squares");
          }
        }
        ++o.checked;
      }
    }
    cc2::VerifyOptions one;
    one.ns = {8};
    one.jobs = 1;
    cc2::VerifyOptions many = one;
    many.jobs = 4;
    const std::string stamp = "1970-01-01T00:00:00Z";
    o.expect(cc2::report_json(cc2::run_verification(one), stamp, false).dump() ==
                 cc2::report_json(cc2::run_verification(many), stamp, false).dump(),
             "report at n=8 differs between 1 and 4 threads");
    failed += report(10, "Burnside, group axioms up to order 4096, Frattini vs squares, determinism", o);
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 10 criteria failed (%.1fs)\n", failed, secs);
  return failed == 0 ? 0 : 1;
}
