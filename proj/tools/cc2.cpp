// cc2: catalog listing, invariant computation, grid verification,
// isomorphism queries, table reproduction and cache management for the
// 2-groups of coclass 2.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cc2/cache.hpp"
#include "cc2/catalog.hpp"
#include "cc2/error.hpp"
#include "cc2/invariants.hpp"
#include "cc2/iso.hpp"
#include "cc2/oracle.hpp"
#include "cc2/verify.hpp"
#include "tables.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// "6..9", "8" or "6,8,10".
std::vector<int> parse_n_range(const std::string& text) {
  std::vector<int> out;
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw cc2::InvalidArgument("bad n value '" + s + "' in '" + text + "'");
    }
  };
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(part));
      continue;
    }
    const int lo = to_int(part.substr(0, dots));
    const int hi = to_int(part.substr(dots + 2));
    if (lo > hi) throw cc2::InvalidArgument("empty n range '" + part + "'");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  }
  if (out.empty()) throw cc2::InvalidArgument("no n given");
  for (const int n : out) {
    if (n < cc2::kMinCatalogN || n > cc2::kMaxCatalogN) {
      throw cc2::InvalidArgument("n=" + std::to_string(n) + " outside the catalog range " +
                                 std::to_string(cc2::kMinCatalogN) + ".." + std::to_string(cc2::kMaxCatalogN));
    }
  }
  return out;
}

std::optional<fs::path> cache_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  return cc2::cache::env_dir();
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_list(int n, const std::string& format) {
  const auto specs = cc2::catalog_at(n);
  if (format == "json") {
    json rows = json::array();
    for (const auto& s : specs) {
      json r{{"group", s.id()}, {"m", s.m}, {"n", s.n}, {"family", cc2::family_name(s.family)}, {"order", s.order()}};
      if (s.family == cc2::Family::Fam7 || s.family == cc2::Family::Fam8) {
        r["k"] = s.k;
        r["epsilon"] = s.epsilon;
      }
      r["duplicate_of"] = s.duplicate_of ? json("G" + std::to_string(*s.duplicate_of)) : json(nullptr);
      rows.push_back(std::move(r));
    }
    print_json({{"n", n}, {"groups", rows}});
    return 0;
  }
  int distinct = 0;
  for (const auto& s : specs) {
    std::printf("%-4s %-6s order 2^%d", s.id().c_str(), std::string(cc2::family_name(s.family)).c_str(), s.n);
    if (s.family == cc2::Family::Fam7 || s.family == cc2::Family::Fam8) std::printf("  k=%d e=%d", s.k, s.epsilon);
    if (s.duplicate_of) {
      std::printf("  (isomorphic to G%d)", *s.duplicate_of);
    } else {
      ++distinct;
    }
    std::printf("\n");
  }
  std::printf("%zu entries, %d pairwise non-isomorphic\n", specs.size(), distinct);
  return 0;
}

void print_records_text(const std::vector<cc2::VerificationRecord>& records, bool all) {
  for (const auto& r : records) {
    const std::string status = r.error ? "ERROR" : !r.pass ? "FAIL" : r.computed_only() ? "computed" : "pass";
    if (!all && r.pass) continue;
    const std::string who = r.m == 0 ? "*" : "G" + std::to_string(r.m);
    std::printf("%-8s n=%-2d %-4s %-16s actual=%s", status.c_str(), r.n, who.c_str(), r.check_name.c_str(),
                r.actual.dump().c_str());
    if (!r.computed_only()) std::printf(" expected=%s", r.expected.dump().c_str());
    if (!r.detail.empty()) std::printf("  [%s]", r.detail.c_str());
    std::printf("\n");
  }
}

struct Summary {
  int pass = 0, fail = 0, error = 0, computed = 0;
};

Summary summarize(const std::vector<cc2::VerificationRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    if (r.error) {
      ++s.error;
    } else if (!r.pass) {
      ++s.fail;
    } else if (r.computed_only()) {
      ++s.computed;
    } else {
      ++s.pass;
    }
  }
  return s;
}

int cmd_compute(const std::string& group, int n, const std::vector<std::string>& checks, const std::string& format,
                const std::optional<fs::path>& cache) {
  const cc2::GroupSpec spec = cc2::make_spec(cc2::parse_group_id(group), n);
  bool hit = false;
  const auto t0 = std::chrono::steady_clock::now();
  const cc2::ConcreteGroup g = cc2::cache::load_or_realize(spec, cache, &hit);
  const double realize_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const cc2::InvariantReport inv = cc2::compute_invariants(g);

  cc2::VerifyOptions vo;
  vo.ns = {n};
  vo.groups = {spec.m};
  vo.checks = checks;
  vo.cache_dir = cache;
  auto records = cc2::run_verification(vo);
  std::erase_if(records, [](const cc2::VerificationRecord& r) { return r.check_name == "duplicate_iso"; });
  const cc2::Prediction pred = cc2::predict(spec);

  if (format == "json") {
    json j;
    j["spec"] = {{"group", spec.id()}, {"m", spec.m}, {"n", spec.n}, {"family", cc2::family_name(spec.family)}};
    j["order"] = inv.order;
    j["class"] = inv.nilpotency_class;
    j["cl_count"] = inv.cl_count;
    j["roggenkamp"] = inv.roggenkamp;
    j["quillen"] = cc2::to_json(inv.quillen);
    j["center_type"] = inv.center_type;
    j["order_profile"] = cc2::to_json(inv.order_profile);
    j["duplicate_of"] = inv.duplicate_of ? json("G" + std::to_string(*inv.duplicate_of)) : json(nullptr);
    json checks_j = json::array();
    for (const auto& r : records) checks_j.push_back(cc2::to_json(r, false));
    j["checks"] = std::move(checks_j);
    if (!pred.applicability.empty()) j["applicability"] = pred.applicability;
    print_json(j);
  } else {
    std::printf("%s (%s), order %llu, class %d%s\n", spec.label().c_str(),
                std::string(cc2::family_name(spec.family)).c_str(), static_cast<unsigned long long>(inv.order),
                inv.nilpotency_class, inv.duplicate_of ? (" isomorphic to G" + std::to_string(*inv.duplicate_of)).c_str() : "");
    std::printf("  |Cl(G)|   %d\n  R(G)      %d\n  Q(G)      %s\n  Z(G)      %s\n", inv.cl_count, inv.roggenkamp,
                inv.quillen.to_string().c_str(), cc2::center_type_string(inv.center_type).c_str());
    std::printf("  orders   ");
    for (const auto& [w, o] : inv.order_profile) std::printf(" %s:%lld", w.c_str(), static_cast<long long>(o));
    std::printf("\n  %s in %.3fs\n", hit ? "loaded from cache" : "realized", realize_s);
    print_records_text(records, true);
    for (const auto& a : pred.applicability) std::printf("note: %s\n", a.c_str());
  }
  return cc2::all_pass(records) ? 0 : kExitFail;
}

int cmd_verify(const std::vector<int>& ns, const std::vector<std::string>& groups, const std::vector<std::string>& checks,
               const std::string& report, int jobs, bool timings, std::uint64_t budget, bool quiet,
               const std::optional<fs::path>& cache) {
  cc2::VerifyOptions vo;
  vo.ns = ns;
  for (const auto& g : groups) vo.groups.push_back(cc2::parse_group_id(g));
  vo.checks = checks;
  vo.jobs = jobs;
  vo.cache_dir = cache;
  vo.iso.node_budget = budget;
  const auto records = cc2::run_verification(vo);
  if (!report.empty()) {
    const json j = cc2::report_json(records, cc2::report_timestamp(), timings);
    std::ofstream out(report);
    if (!out) throw cc2::Error("cannot write report " + report);
    out << j.dump(2) << "\n";
  }
  if (!quiet) print_records_text(records, false);
  const Summary s = summarize(records);
  std::printf("%zu records: %d pass, %d fail, %d error, %d computed-only\n", records.size(), s.pass, s.fail, s.error,
              s.computed);
  return cc2::all_pass(records) ? 0 : kExitFail;
}

int cmd_tables(int table, int n, const std::string& format, const std::optional<fs::path>& cache) {
  const auto t = cc2::tables::build(table, n, cache);
  if (format == "json") {
    print_json(cc2::tables::to_json(t));
  } else {
    std::cout << cc2::tables::render_text(t);
  }
  return 0;
}

int cmd_iso(const std::string& a, const std::string& b, int n, std::uint64_t budget, const std::string& format,
            const std::optional<fs::path>& cache) {
  const cc2::GroupSpec sa = cc2::make_spec(cc2::parse_group_id(a), n);
  const cc2::GroupSpec sb = cc2::make_spec(cc2::parse_group_id(b), n);
  const auto ga = cc2::cache::load_or_realize(sa, cache);
  const auto gb = cc2::cache::load_or_realize(sb, cache);
  cc2::IsoOptions opts;
  opts.node_budget = budget;
  const cc2::Presentation pa = cc2::build_presentation(sa);
  const cc2::IsoResult r = cc2::isomorphic(pa, ga, gb, opts);
  const bool verified = r.witness && cc2::verify_witness(pa, gb, *r.witness);
  if (format == "json") {
    json j{{"a", sa.label()}, {"b", sb.label()}, {"verdict", cc2::verdict_name(r.verdict)},
           {"nodes_explored", r.nodes_explored}};
    if (r.witness) {
      j["witness"] = r.witness_by_name;
      j["witness_verified"] = verified;
    }
    print_json(j);
  } else {
    std::printf("%s vs %s: %s after %llu search nodes (%.3fs)\n", sa.label().c_str(), sb.label().c_str(),
                std::string(cc2::verdict_name(r.verdict)).c_str(), static_cast<unsigned long long>(r.nodes_explored),
                r.elapsed_seconds);
    if (r.witness) {
      std::printf("witness:");
      for (const auto& [name, e] : r.witness_by_name) std::printf(" %s -> %u", name.c_str(), e);
      std::printf("  (%s)\n", verified ? "relators and generation verified" : "VERIFICATION FAILED");
    }
  }
  if (r.verdict == cc2::IsoVerdict::Indeterminate) return kExitFail;
  return r.witness && !verified ? kExitFail : 0;
}

fs::path require_cache(const std::optional<fs::path>& dir) {
  if (!dir) throw cc2::InvalidArgument("no cache directory: pass --cache or set CC2_CACHE");
  return *dir;
}

int cmd_cache_warm(const fs::path& dir, const std::vector<int>& ns, const std::vector<std::string>& groups) {
  std::set<int> wanted;
  for (const auto& g : groups) wanted.insert(cc2::parse_group_id(g));
  int written = 0, present = 0, skipped = 0;
  for (const int n : ns) {
    for (const auto& spec : cc2::catalog_at(n)) {
      if (!wanted.empty() && !wanted.count(spec.m)) continue;
      if (spec.order() > cc2::kDenseTableLimit) {
        ++skipped;
        continue;
      }
      bool hit = false;
      (void)cc2::cache::load_or_realize(spec, dir, &hit);
      ++(hit ? present : written);
    }
  }
  std::printf("%d written, %d already present, %d too large for a dense table\n", written, present, skipped);
  return 0;
}

int cmd_cache_stat(const fs::path& dir, const std::string& format) {
  const auto s = cc2::cache::stat(dir);
  if (format == "json") {
    print_json({{"path", dir.string()}, {"files", s.files}, {"bytes", s.bytes}, {"entries", s.entries}});
  } else {
    std::printf("%s: %zu files, %ju bytes\n", dir.string().c_str(), s.files, s.bytes);
    for (const auto& e : s.entries) std::printf("  %s\n", e.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalog, invariants and verification for the 2-groups of coclass 2"};
  app.require_subcommand(1);
  std::string cache_flag;
  app.add_option("--cache", cache_flag, "Cayley table cache directory (default: $CC2_CACHE)");
  app.fallthrough();

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  int n = 0;
  std::string n_range;
  std::string group;
  std::vector<std::string> groups;
  std::vector<std::string> checks;

  auto* list = app.add_subcommand("list", "List the catalog at order 2^n");
  list->add_option("--n", n, "log2 of the group order")->required();
  add_format(list);

  auto* compute = app.add_subcommand("compute", "Compute invariants of one group and compare with predictions");
  compute->add_option("--group", group, "Catalog id, e.g. G24")->required();
  compute->add_option("--n", n, "log2 of the group order")->required();
  bool all = false, cl = false, rog = false, qu = false, ctr = false, prof = false, cls = false, lcs = false;
  compute->add_flag("--all", all, "Every per-group check");
  compute->add_flag("--cl", cl, "Class count");
  compute->add_flag("--roggenkamp", rog, "Roggenkamp parameter");
  compute->add_flag("--quillen", qu, "Quillen parameter and representatives");
  compute->add_flag("--center", ctr, "Center type");
  compute->add_flag("--profile", prof, "Element-order profile");
  compute->add_flag("--classes", cls, "Class structure of the named subsets");
  compute->add_flag("--lcs", lcs, "Order and nilpotency class");
  add_format(compute);

  auto* verify = app.add_subcommand("verify", "Verify every applicable prediction over a grid");
  verify->add_option("--n", n_range, "Orders to check: 8, 6..9 or 6,8")->required();
  verify->add_option("--group", groups, "Restrict to these groups")->expected(1, -1);
  verify->add_option("--check", checks, "Restrict to these checks")->expected(1, -1);
  std::string report;
  verify->add_option("--report", report, "Write the JSON report here");
  int jobs = 0;
  verify->add_option("--jobs", jobs, "Worker threads (default: OpenMP runtime)")->check(CLI::NonNegativeNumber);
  bool timings = false, quiet = false;
  verify->add_flag("--timings", timings, "Include elapsed seconds in the report");
  verify->add_flag("--quiet", quiet, "Only print the summary line");
  std::uint64_t budget = cc2::IsoOptions{}.node_budget;
  verify->add_option("--budget", budget, "Isomorphism search node budget");

  auto* tables = app.add_subcommand("tables", "Reproduce a printed table from realized groups");
  int table = 0;
  tables->add_option("--table", table, "Table number")->required()->check(
      CLI::Range(cc2::tables::kFirstTable, cc2::tables::kLastTable));
  tables->add_option("--n", n, "log2 of the group order")->required();
  add_format(tables);

  auto* iso = app.add_subcommand("iso", "Decide whether two catalog groups are isomorphic");
  std::string a, b;
  iso->add_option("a", a, "First group")->required();
  iso->add_option("b", b, "Second group")->required();
  iso->add_option("--n", n, "log2 of the group order")->required();
  iso->add_option("--budget", budget, "Search node budget");
  add_format(iso);

  auto* cache = app.add_subcommand("cache", "Manage the Cayley table cache");
  cache->require_subcommand(1);
  auto* warm = cache->add_subcommand("warm", "Realize and store groups");
  warm->add_option("--n", n_range, "Orders to store: 8, 6..9 or 6,8")->required();
  warm->add_option("--group", groups, "Restrict to these groups")->expected(1, -1);
  auto* clear = cache->add_subcommand("clear", "Remove cache files");
  auto* stat = cache->add_subcommand("stat", "Summarize the cache directory");
  add_format(stat);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto dir = cache_dir(cache_flag);
    if (*list) return cmd_list(n, format);
    if (*compute) {
      std::vector<std::string> sel;
      if (all) {
        for (const auto c : cc2::kGroupChecks) {
          if (c != "duplicate_iso") sel.emplace_back(c);
        }
      } else {
        if (cl) sel.push_back("cl_count");
        if (rog) sel.push_back("roggenkamp");
        if (qu) {
          sel.push_back("quillen");
          sel.push_back("quillen_reps");
        }
        if (ctr) sel.push_back("center_type");
        if (prof) sel.push_back("order_profile");
        if (cls) sel.push_back("class_structure");
        if (lcs) sel.push_back("lcs_shape");
        if (sel.empty()) sel = {"cl_count", "roggenkamp", "quillen", "center_type", "lcs_shape"};
      }
      return cmd_compute(group, n, sel, format, dir);
    }
    if (*verify) return cmd_verify(parse_n_range(n_range), groups, checks, report, jobs, timings, budget, quiet, dir);
    if (*tables) return cmd_tables(table, n, format, dir);
    if (*iso) return cmd_iso(a, b, n, budget, format, dir);
    if (*warm) return cmd_cache_warm(require_cache(dir), parse_n_range(n_range), groups);
    if (*clear) {
      const fs::path d = require_cache(dir);
      std::printf("removed %zu files from %s\n", cc2::cache::clear(d), d.string().c_str());
      return 0;
    }
    if (*stat) return cmd_cache_stat(require_cache(dir), format);
  } catch (const cc2::CacheError& e) {
    std::fprintf(stderr, "cache error: %s\n", e.what());
    return kExitFail;
  } catch (const cc2::InvalidArgument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const cc2::OutOfRange& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
  return kExitUsage;
}
