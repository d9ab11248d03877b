#include "tables.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "cc2/cache.hpp"
#include "cc2/error.hpp"
#include "cc2/invariants.hpp"
#include "cc2/oracle.hpp"
#include "cc2/subgroups.hpp"

namespace cc2::tables {

namespace {

struct Column {
  GroupSpec spec;
  ConcreteGroup group;
  Prediction pred;
};

using Computed = std::function<std::string(const Column&)>;
using Printed = std::function<std::optional<std::string>(const Column&)>;

struct Row {
  std::string label;
  Computed computed;
  Printed printed;
};

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int m = lo; m <= hi; ++m) v.push_back(m);
  return v;
}

std::optional<std::string> predicted_order(const Column& c, const std::string& name) {
  if (!c.pred.order_profile) return std::nullopt;
  for (const auto& [w, o] : *c.pred.order_profile) {
    if (w == name) return std::to_string(o);
  }
  return std::nullopt;
}

// Union of predicted profile names over the columns, in first-seen order.
std::vector<Row> profile_rows(const std::vector<Column>& cols) {
  std::vector<std::string> names;
  for (const auto& c : cols) {
    const OrderProfile fallback = order_profile(c.group, c.spec);
    const OrderProfile& prof = c.pred.order_profile ? *c.pred.order_profile : fallback;
    for (const auto& [w, o] : prof) {
      if (std::find(names.begin(), names.end(), w) == names.end()) names.push_back(w);
    }
  }
  std::vector<Row> rows;
  for (const auto& name : names) {
    rows.push_back({name,
                    [name](const Column& c) { return std::to_string(profile_order(c.group, c.spec, name)); },
                    [name](const Column& c) { return predicted_order(c, name); }});
  }
  return rows;
}

std::vector<Row> roggenkamp_rows() {
  return {
      {"r",
       [](const Column& c) {
         if (!c.pred.roggenkamp || !c.pred.r_constant) return std::string("-");
         const std::int64_t base = *c.pred.roggenkamp - *c.pred.r_constant;
         return std::to_string(roggenkamp(c.group) - base);
       },
       [](const Column& c) -> std::optional<std::string> {
         if (!c.pred.r_constant) return std::nullopt;
         return std::to_string(*c.pred.r_constant);
       }},
      {"R", [](const Column& c) { return std::to_string(roggenkamp(c.group)); },
       [](const Column& c) -> std::optional<std::string> {
         if (!c.pred.roggenkamp) return std::nullopt;
         return std::to_string(*c.pred.roggenkamp);
       }},
  };
}

Row quillen_row() {
  return {"Q", [](const Column& c) { return quillen(c.group).to_string(); },
          [](const Column& c) -> std::optional<std::string> {
            if (!c.pred.quillen) return std::nullopt;
            return c.pred.quillen->to_string();
          }};
}

std::vector<Row> subset_rows(const std::vector<Column>& cols) {
  std::vector<std::pair<std::string, bool>> keys;  // subset, roggenkamp?
  for (const auto& c : cols) {
    for (const auto& s : c.pred.subsets) {
      const std::pair<std::string, bool> kc{s.subset, false}, kr{s.subset, true};
      if (s.classes && std::find(keys.begin(), keys.end(), kc) == keys.end()) keys.push_back(kc);
      if (s.roggenkamp && std::find(keys.begin(), keys.end(), kr) == keys.end()) keys.push_back(kr);
    }
  }
  std::vector<Row> rows;
  for (const auto& [subset, rog] : keys) {
    const std::string sub = subset;
    const bool r = rog;
    rows.push_back({r ? "R_G(" + sub + ")" : "|Cl(" + sub + ")|",
                    [sub, r](const Column& c) {
                      const ElementSet set = named_subset(c.group, c.spec, sub);
                      return std::to_string(r ? roggenkamp_of_subset(c.group, set) : classes_in_subset(c.group, set));
                    },
                    [sub, r](const Column& c) -> std::optional<std::string> {
                      for (const auto& s : c.pred.subsets) {
                        if (s.subset != sub) continue;
                        if (r && s.roggenkamp) return std::to_string(*s.roggenkamp);
                        if (!r && s.classes) return std::to_string(*s.classes);
                      }
                      return std::nullopt;
                    }});
  }
  return rows;
}

// Centralizer generator counts from the two tables that explain the Fam7
// Roggenkamp sums. Values as printed, per group.
const std::map<int, std::array<int, 4>> kCentralizerD21{
    {28, {2, 4, 2, 2}}, {29, {2, 3, 2, 2}}, {30, {2, 4, 1, 1}},
    {31, {2, 3, 1, 1}}, {32, {2, 3, 2, 2}}, {33, {2, 2, 2, 2}}};
const std::map<int, std::array<int, 4>> kCentralizerD22{
    {33, {2, 2, 1, 1}}, {34, {2, 2, 1, 1}}, {40, {2, 3, 2, 2}},
    {42, {2, 3, 2, 2}}, {41, {2, 3, 1, 1}}, {43, {2, 3, 1, 1}}};

std::vector<Row> centralizer_rows(const std::map<int, std::array<int, 4>>& printed) {
  static const char* kWords[4] = {"y^2", "y^2x2^-1", "y", "y^3"};
  auto d_of = [](const Column& c, int i) {
    const Element e = c.group.evaluate(parse_word(kWords[i], c.group.generator_names()));
    return min_generators(c.group, centralizer(c.group, e));
  };
  std::vector<Row> rows;
  for (int i = 0; i < 4; ++i) {
    rows.push_back({std::string("d(C(") + kWords[i] + "))",
                    [i, d_of](const Column& c) { return std::to_string(d_of(c, i)); },
                    [i, &printed](const Column& c) -> std::optional<std::string> {
                      const auto it = printed.find(c.spec.m);
                      if (it == printed.end()) return std::nullopt;
                      return std::to_string(it->second[static_cast<std::size_t>(i)]);
                    }});
  }
  rows.push_back({"sum",
                  [d_of](const Column& c) {
                    int s = 0;
                    for (int i = 0; i < 4; ++i) s += d_of(c, i);
                    return std::to_string(s);
                  },
                  [&printed](const Column& c) -> std::optional<std::string> {
                    const auto it = printed.find(c.spec.m);
                    if (it == printed.end()) return std::nullopt;
                    int s = 0;
                    for (const int v : it->second) s += v;
                    return std::to_string(s);
                  }});
  return rows;
}

struct Definition {
  std::string title;
  std::vector<int> groups;
  bool advisory = false;
  std::function<std::vector<Row>(const std::vector<Column>&)> rows;
  std::vector<std::string> notes;
};

Definition definition(int id) {
  switch (id) {
    case 7:
      return {"element orders of class representatives outside A", range(1, 12), false, profile_rows, {}};
    case 8:
      return {"element orders of class representatives outside A (t = y^2)", range(13, 16), false, profile_rows, {}};
    case 9:
      return {"Roggenkamp constants, A abelian: R = 2^(n-1) + r", {1, 2, 3, 4, 7, 8, 9, 13, 14, 15}, false,
              [](const std::vector<Column>&) { return roggenkamp_rows(); }, {}};
    case 10:
      return {"Roggenkamp constants, A nonabelian: R = 2^(n-2) + r", {5, 6, 10, 11, 12, 16}, false,
              [](const std::vector<Column>&) { return roggenkamp_rows(); }, {}};
    case 11:
      return {"centers and Quillen parameters", range(1, 16), false,
              [](const std::vector<Column>&) {
                return std::vector<Row>{
                    {"center", [](const Column& c) { return center_type_string(center_type(c.group)); },
                     [](const Column& c) -> std::optional<std::string> {
                       if (!c.pred.center_type) return std::nullopt;
                       return center_type_string(*c.pred.center_type);
                     }},
                    quillen_row()};
              },
              {}};
    case 12:
      return {"element orders of class representatives outside A", range(18, 27), false, profile_rows, {}};
    case 13:
      return {"Roggenkamp constants: R = 2^(2k+e-1) + r (A abelian) or 5*2^(2k+e-4) + r", range(18, 27), false,
              [](const std::vector<Column>&) { return roggenkamp_rows(); }, {}};
    case 14:
      return {"Quillen parameters", range(18, 27), false,
              [](const std::vector<Column>&) { return std::vector<Row>{quillen_row()}; }, {}};
    case 15:
      return {"element orders, |G| = 2^(2k+2), A abelian", range(28, 35), false, profile_rows, {}};
    case 16:
      return {"element orders, |G| = 2^(2k+2), A nonabelian", range(36, 39), false, profile_rows, {}};
    case 17:
      return {"element orders, |G| = 2^(2k+3)", range(40, 43), false, profile_rows, {}};
    case 18:
      return {"Quillen parameters", range(28, 43), false,
              [](const std::vector<Column>&) { return std::vector<Row>{quillen_row()}; }, {}};
    case 19:
      return {"conjugacy classes by subset", range(28, 43), false, subset_rows, {}};
    case 20:
      return {"Roggenkamp constants, A abelian", {28, 29, 30, 31, 32, 33, 34, 35, 40, 41, 42, 43}, false,
              [](const std::vector<Column>&) { return roggenkamp_rows(); }, {}};
    case 21:
      return {"d(C_G(g)) for representatives in M2 \\ A", range(28, 33), true,
              [](const std::vector<Column>&) { return centralizer_rows(kCentralizerD21); },
              {"advisory: printed values are not verified"}};
    case 22:
      return {"d(C_G(g)) for representatives in M2 \\ A", {33, 34, 40, 41, 42, 43}, true,
              [](const std::vector<Column>&) { return centralizer_rows(kCentralizerD22); },
              {"advisory: printed values are not verified"}};
    default:
      throw InvalidArgument("table must lie in " + std::to_string(kFirstTable) + ".." + std::to_string(kLastTable));
  }
}

}  // namespace

int Table::mismatches() const {
  int k = 0;
  for (const auto& row : cells) {
    for (const auto& c : row) k += c.mismatch() ? 1 : 0;
  }
  return k;
}

Table build(int id, int n, const std::optional<std::filesystem::path>& cache_dir) {
  const Definition def = definition(id);
  if (n < kMinCatalogN || n > kMaxCatalogN) {
    throw InvalidArgument("n must lie in " + std::to_string(kMinCatalogN) + ".." + std::to_string(kMaxCatalogN));
  }
  std::vector<Column> cols;
  std::vector<std::string> skipped;
  for (const int m : def.groups) {
    if (validity_violation(m, n)) {
      skipped.push_back("G" + std::to_string(m));
      continue;
    }
    const GroupSpec spec = make_spec(m, n);
    cols.push_back({spec, cache::load_or_realize(spec, cache_dir), predict(spec)});
  }
  if (cols.empty()) {
    throw InvalidArgument("Table " + std::to_string(id) + " has no group of order 2^" + std::to_string(n));
  }
  Table t;
  t.id = id;
  t.n = n;
  t.title = def.title;
  t.advisory = def.advisory;
  t.notes = def.notes;
  if (!skipped.empty()) {
    std::string s = "not in the catalog at this n:";
    for (const auto& g : skipped) s += " " + g;
    t.notes.push_back(s);
  }
  for (const auto& c : cols) t.columns.push_back(c.spec.id());
  for (const auto& row : def.rows(cols)) {
    t.rows.push_back(row.label);
    std::vector<Cell> line;
    for (const auto& c : cols) line.push_back({row.computed(c), row.printed(c)});
    t.cells.push_back(std::move(line));
  }
  return t;
}

std::string render_text(const Table& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{""};
  head.insert(head.end(), t.columns.begin(), t.columns.end());
  grid.push_back(head);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::vector<std::string> line{t.rows[r]};
    for (const auto& c : t.cells[r]) {
      line.push_back(c.mismatch() ? c.computed + " (" + *c.printed + ")*" : c.computed);
    }
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream out;
  out << "Table " << t.id << " at n=" << t.n << ": " << t.title << "\n";
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << line[i] << std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << "\n";
  }
  const int bad = t.mismatches();
  out << (bad == 0 ? "all printed values reproduced" : std::to_string(bad) + " cell(s) differ: computed (printed)*");
  if (t.advisory && bad > 0) out << " [advisory]";
  out << "\n";
  for (const auto& note : t.notes) out << "note: " << note << "\n";
  return out.str();
}

nlohmann::json to_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    nlohmann::json cells = nlohmann::json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      const Cell& cell = t.cells[r][c];
      nlohmann::json j{{"computed", cell.computed}};
      if (cell.printed) j["printed"] = *cell.printed;
      j["match"] = !cell.mismatch();
      cells[t.columns[c]] = std::move(j);
    }
    rows.push_back({{"row", t.rows[r]}, {"cells", std::move(cells)}});
  }
  return {{"table", t.id}, {"n", t.n}, {"title", t.title}, {"advisory", t.advisory},
          {"columns", t.columns}, {"rows", std::move(rows)}, {"mismatches", t.mismatches()}, {"notes", t.notes}};
}

}  // namespace cc2::tables
