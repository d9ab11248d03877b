#include "cc2/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <map>
#include <set>

#include <omp.h>

#include "cc2/cache.hpp"
#include "cc2/error.hpp"
#include "cc2/invariants.hpp"
#include "cc2/oracle.hpp"
#include "cc2/subgroups.hpp"

namespace cc2 {

using nlohmann::json;

namespace {

const json kComputedOnly = "computed-only";

struct Cell {
  GroupSpec spec;
  std::optional<ConcreteGroup> group;
  std::optional<Fingerprint> fp;
  std::string realize_error;
  std::vector<VerificationRecord> records;
};

class CheckFilter {
 public:
  explicit CheckFilter(const std::vector<std::string>& names) : names_(names.begin(), names.end()) {}
  [[nodiscard]] bool wants(std::string_view c) const { return names_.empty() || names_.count(std::string(c)) > 0; }
  [[nodiscard]] bool explicitly(std::string_view c) const { return names_.count(std::string(c)) > 0; }

 private:
  std::set<std::string> names_;
};

// Runs body, timing it and turning engine exceptions into error records.
VerificationRecord timed(int n, int m, std::string_view check, const std::function<void(VerificationRecord&)>& body) {
  VerificationRecord r;
  r.n = n;
  r.m = m;
  r.check_name = std::string(check);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.error = true;
    r.actual = nullptr;
    r.detail = e.what();
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void compare(VerificationRecord& r, const std::optional<json>& expected, json actual, std::string source) {
  r.actual = std::move(actual);
  if (expected) {
    r.expected = *expected;
    r.pass = r.expected == r.actual;
    r.source = std::move(source);
  } else {
    r.expected = kComputedOnly;
    r.pass = true;
  }
}

std::string provenance_of(const Prediction& p, const std::string& field) {
  const auto it = p.provenance.find(field);
  return it == p.provenance.end() ? std::string() : it->second;
}

json quillen_reps_actual(const ConcreteGroup& g, const std::vector<std::vector<std::string>>& reps) {
  const auto mea = maximal_elementary_abelian(g);
  const auto classes = subgroup_conjugacy_classes(g, mea);
  std::vector<int> class_of(mea.size(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const std::size_t i : classes[c]) class_of[i] = static_cast<int>(c);
  }
  json out = json::array();
  std::set<int> hit;
  for (const auto& words : reps) {
    std::vector<Element> gens;
    for (const auto& w : words) gens.push_back(g.evaluate(parse_word(w, g.generator_names())));
    const Subgroup h = closure(g, gens);
    std::string status = "maximal";
    bool elementary = is_abelian(g, h);
    for (const Element e : h.elements()) elementary = elementary && g.mul_unchecked(e, e) == kIdentity;
    if (!elementary) {
      status = "not elementary abelian";
    } else {
      const auto it = std::find(mea.begin(), mea.end(), h);
      if (it == mea.end()) {
        status = "not maximal";
      } else if (!hit.insert(class_of[static_cast<std::size_t>(it - mea.begin())]).second) {
        status = "conjugate to an earlier representative";
      }
    }
    out.push_back({{"generators", words}, {"status", status}});
  }
  return {{"representatives", out}, {"classes_covered", hit.size()}};
}

void group_checks(Cell& cell, const CheckFilter& filter, bool need_fingerprint,
                  const std::optional<std::filesystem::path>& cache_dir) {
  const GroupSpec& s = cell.spec;
  auto add = [&](std::string_view check, const std::function<void(VerificationRecord&)>& body) {
    if (!filter.wants(check)) return;
    cell.records.push_back(timed(s.n, s.m, check, [&](VerificationRecord& r) {
      if (!cell.group) throw ConsistencyError(cell.realize_error);
      body(r);
    }));
  };

  try {
    cell.group.emplace(cache::load_or_realize(s, cache_dir));
  } catch (const std::exception& e) {
    cell.realize_error = e.what();
  }
  const Prediction p = predict(s);
  const ConcreteGroup* g = cell.group ? &*cell.group : nullptr;
  // Shared by several checks and by the order-level partition.
  auto fp = [&]() -> const Fingerprint& {
    if (!cell.fp) cell.fp = fingerprint(*g);
    return *cell.fp;
  };

  add("lcs_shape", [&](VerificationRecord& r) {
    compare(r, json{{"order", s.order()}, {"class", s.n - 2}},
            {{"order", g->order()}, {"class", nilpotency_class(*g)}}, "order 2^n, nilpotency class n-2");
  });
  add("cl_count", [&](VerificationRecord& r) {
    compare(r, p.cl_count ? std::optional<json>(*p.cl_count) : std::nullopt, fp().cl_count,
            provenance_of(p, "cl_count"));
  });
  add("roggenkamp", [&](VerificationRecord& r) {
    compare(r, p.roggenkamp ? std::optional<json>(*p.roggenkamp) : std::nullopt, fp().roggenkamp,
            provenance_of(p, "roggenkamp"));
  });
  add("quillen", [&](VerificationRecord& r) {
    compare(r, p.quillen ? std::optional<json>(to_json(*p.quillen)) : std::nullopt, to_json(fp().quillen),
            provenance_of(p, "quillen"));
  });
  if (!p.quillen_reps.empty() && p.quillen) {
    add("quillen_reps", [&](VerificationRecord& r) {
      json want = json::array();
      for (const auto& words : p.quillen_reps) want.push_back({{"generators", words}, {"status", "maximal"}});
      compare(r, json{{"representatives", want}, {"classes_covered", p.quillen->total()}},
              quillen_reps_actual(*g, p.quillen_reps), provenance_of(p, "quillen_reps"));
    });
  }
  add("center_type", [&](VerificationRecord& r) {
    compare(r, p.center_type ? std::optional<json>(*p.center_type) : std::nullopt, fp().center_type,
            provenance_of(p, "center_type"));
  });
  add("order_profile", [&](VerificationRecord& r) {
    const OrderProfile computed = order_profile(*g, s);
    if (!p.order_profile) {
      compare(r, std::nullopt, to_json(computed), {});
      return;
    }
    json want = json::object();
    json got = json::object();
    for (const auto& [name, order] : *p.order_profile) {
      want[name] = order;
      got[name] = profile_order(*g, s, name);
    }
    compare(r, want, got, provenance_of(p, "order_profile"));
  });
  add("class_structure", [&](VerificationRecord& r) {
    if (p.subsets.empty()) {
      json got = json::object();
      for (const char* sub : {"A", "G\\A"}) got[sub] = classes_in_subset(*g, named_subset(*g, s, sub));
      compare(r, std::nullopt, got, {});
      return;
    }
    json want = json::array();
    json got = json::array();
    std::string source;
    for (const auto& sp : p.subsets) {
      const ElementSet set = named_subset(*g, s, sp.subset);
      json w{{"subset", sp.subset}};
      json a{{"subset", sp.subset}};
      if (sp.classes) {
        w["classes"] = *sp.classes;
        a["classes"] = classes_in_subset(*g, set);
      }
      if (sp.roggenkamp) {
        w["roggenkamp"] = *sp.roggenkamp;
        a["roggenkamp"] = roggenkamp_of_subset(*g, set);
      }
      want.push_back(std::move(w));
      got.push_back(std::move(a));
      source += (source.empty() ? "" : "; ") + sp.source;
    }
    compare(r, want, got, source);
  });

  if (g != nullptr && need_fingerprint && !cell.fp) {
    try {
      cell.fp = fingerprint(*g);
    } catch (const std::exception&) {
      // The order-level checks report the missing fingerprint.
    }
  }
}

bool subset_of_some(const std::vector<int>& set, const std::vector<std::vector<int>>& allowed) {
  return std::any_of(allowed.begin(), allowed.end(), [&](const std::vector<int>& a) {
    return std::includes(a.begin(), a.end(), set.begin(), set.end());
  });
}

void order_checks(int n, std::vector<Cell>& cells, const CheckFilter& filter, bool all_groups,
                  const IsoOptions& iso, std::vector<VerificationRecord>& out) {
  const Cell* g24 = nullptr;
  const Cell* g25 = nullptr;
  for (const auto& c : cells) {
    if (c.spec.m == 24) g24 = &c;
    if (c.spec.m == 25) g25 = &c;
  }
  if (g24 != nullptr && g25 != nullptr && filter.wants("duplicate_iso")) {
    out.push_back(timed(n, 25, "duplicate_iso", [&](VerificationRecord& r) {
      if (!g24->group || !g25->group) throw ConsistencyError("G24 or G25 failed to realize");
      const bool dup = g25->spec.duplicate_of == 24;
      const IsoResult res = isomorphic(build_presentation(g24->spec), *g24->group, *g25->group, iso);
      json got{{"verdict", verdict_name(res.verdict)}};
      if (res.witness) got["witness_verified"] = verify_witness(build_presentation(g24->spec), *g25->group, *res.witness);
      json want{{"verdict", verdict_name(dup ? IsoVerdict::Isomorphic : IsoVerdict::NotIsomorphic)}};
      if (dup) want["witness_verified"] = true;
      compare(r, want, got, dup ? "G25 is isomorphic to G24 for odd n" : "G24 and G25 listed as distinct");
      r.detail = "G24 -> G25, " + std::to_string(res.nodes_explored) + " search nodes";
    }));
  }

  const bool want_count = filter.wants("group_count") && (all_groups || filter.explicitly("group_count"));
  const bool want_qr = n >= 8 && filter.wants("qr_collisions") && (all_groups || filter.explicitly("qr_collisions"));
  if (!want_count && !want_qr) return;

  std::optional<IsoPartition> part;
  std::string part_error;
  std::vector<IsoInput> inputs;
  std::vector<Fingerprint> fps;
  for (const auto& c : cells) {
    if (!c.group || !c.fp) {
      part_error = c.spec.label() + " could not be realized";
      break;
    }
    inputs.push_back({build_presentation(c.spec), &*c.group});
    fps.push_back(*c.fp);
  }
  const auto t0 = std::chrono::steady_clock::now();
  if (part_error.empty()) part = pairwise_distinct(inputs, iso, &fps);
  const double part_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (want_count) {
    VerificationRecord r = timed(n, 0, "group_count", [&](VerificationRecord& rec) {
      if (!part) throw ConsistencyError(part_error);
      json want = json::object();
      for (const auto& [fam, count] : predict_group_count(n)) want[std::string(family_name(fam))] = count;
      json got = json::object();
      for (const Family f : kAllFamilies) got[std::string(family_name(f))] = 0;
      for (const auto& cls : part->classes) {
        const std::string fam(family_name(cells[cls.front()].spec.family));
        got[fam] = got[fam].get<int>() + 1;
      }
      compare(rec, want, got, "pairwise non-isomorphic groups per family");
      rec.detail = std::to_string(part->iso_calls) + " isomorphism tests";
      if (!part->complete) {
        rec.pass = false;
        rec.detail += "; some pairs stayed indeterminate within the node budget";
      }
    });
    r.elapsed_seconds += part_seconds;
    out.push_back(std::move(r));
  }

  if (want_qr) {
    out.push_back(timed(n, 0, "qr_collisions", [&](VerificationRecord& rec) {
      if (!part) throw ConsistencyError(part_error);
      std::map<std::pair<QuillenParam, int>, std::vector<std::size_t>> by_qr;
      for (std::size_t c = 0; c < part->classes.size(); ++c) {
        const Fingerprint& f = fps[part->classes[c].front()];
        by_qr[{f.quillen, f.roggenkamp}].push_back(c);
      }
      json got = json::array();
      std::vector<std::vector<int>> collisions;
      for (const auto& [key, cls] : by_qr) {
        if (cls.size() < 2) continue;
        std::vector<int> ms;
        for (const std::size_t c : cls) {
          for (const std::size_t i : part->classes[c]) ms.push_back(cells[i].spec.m);
        }
        std::sort(ms.begin(), ms.end());
        collisions.push_back(ms);
        got.push_back({{"groups", ms}, {"quillen", to_json(key.first)}, {"roggenkamp", key.second}});
      }
      const auto allowed = expected_qr_collisions(n);
      rec.expected = json{{"collisions_within", allowed}};
      rec.actual = std::move(got);
      rec.pass = std::all_of(collisions.begin(), collisions.end(),
                             [&](const std::vector<int>& c) { return subset_of_some(c, allowed); });
      rec.source = "non-isomorphic groups sharing (Q, R) must lie inside one listed set";
    }));
  }
}

}  // namespace

bool is_check_name(std::string_view name) {
  return std::find(std::begin(kGroupChecks), std::end(kGroupChecks), name) != std::end(kGroupChecks) ||
         std::find(std::begin(kOrderChecks), std::end(kOrderChecks), name) != std::end(kOrderChecks);
}

std::vector<VerificationRecord> run_verification(const VerifyOptions& opts) {
  for (const auto& c : opts.checks) {
    if (!is_check_name(c)) throw InvalidArgument("unknown check '" + c + "'");
  }
  const CheckFilter filter(opts.checks);
  const std::set<int> wanted(opts.groups.begin(), opts.groups.end());
  std::vector<VerificationRecord> out;

  for (const int n : opts.ns) {
    if (n < kMinCatalogN || n > kMaxCatalogN) {
      throw InvalidArgument("n must lie in " + std::to_string(kMinCatalogN) + ".." + std::to_string(kMaxCatalogN));
    }
    const bool all_groups = wanted.empty();
    const bool order_level = (all_groups && (filter.wants("group_count") || filter.wants("qr_collisions"))) ||
                             filter.explicitly("group_count") || filter.explicitly("qr_collisions");
    const bool dup_level = filter.wants("duplicate_iso") && (all_groups || wanted.count(24) || wanted.count(25));

    std::vector<Cell> cells;
    for (const auto& spec : catalog_at(n)) {
      const bool selected = all_groups || wanted.count(spec.m) > 0;
      const bool needed = order_level || (dup_level && (spec.m == 24 || spec.m == 25));
      if (selected || needed) cells.push_back({spec, std::nullopt, std::nullopt, {}, {}});
    }
    std::vector<std::uint8_t> report(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) report[i] = all_groups || wanted.count(cells[i].spec.m) > 0;

    const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < cells.size(); ++i) {
      group_checks(cells[i], report[i] ? filter : CheckFilter({"lcs_shape"}), order_level, opts.cache_dir);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!report[i]) continue;
      for (auto& r : cells[i].records) out.push_back(std::move(r));
    }
    order_checks(n, cells, filter, all_groups, opts.iso, out);
  }

  std::sort(out.begin(), out.end(), [](const VerificationRecord& a, const VerificationRecord& b) {
    return std::tie(a.n, a.m, a.check_name) < std::tie(b.n, b.m, b.check_name);
  });
  return out;
}

bool all_pass(const std::vector<VerificationRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const VerificationRecord& r) { return r.pass && !r.error; });
}

std::string report_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* sde = std::getenv("SOURCE_DATE_EPOCH"); sde != nullptr && *sde != '\0') {
    t = static_cast<std::time_t>(std::strtoll(sde, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json to_json(const VerificationRecord& r, bool include_timings) {
  json j;
  j["spec"] = r.m == 0 ? json{{"group", nullptr}, {"n", r.n}}
                       : json{{"group", "G" + std::to_string(r.m)}, {"m", r.m}, {"n", r.n}};
  j["check_name"] = r.check_name;
  j["expected"] = r.expected;
  j["actual"] = r.actual;
  j["pass"] = r.pass;
  j["status"] = r.error ? "error" : !r.pass ? "fail" : r.computed_only() ? "computed-only" : "pass";
  if (!r.source.empty()) j["source"] = r.source;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (include_timings) j["elapsed"] = r.elapsed_seconds;
  return j;
}

json report_json(const std::vector<VerificationRecord>& records, const std::string& generated_at,
                 bool include_timings) {
  json recs = json::array();
  for (const auto& r : records) recs.push_back(to_json(r, include_timings));
  return {{"version", kReportVersion}, {"generated_at", generated_at}, {"records", std::move(recs)}};
}

}  // namespace cc2
