#include "cc2/catalog.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <tuple>

#include "cc2/error.hpp"

namespace cc2 {

namespace {

// Parameter codes used by the tables below. For Fam59/9/50 they name powers
// of x; for Fam8/Fam7 they name the central elements z1, z2 (or z).
enum Z : std::uint8_t { One, X3, X4, Z1, Z2, Z1Z2 };

struct CyclicRow {
  std::array<Z, 4> z;  // z1..z4 (Fam50 uses z1, z2 only)
};

// Fam59 (Table 1), Fam9 (Table 2), Fam50 (Table 3). Index m-1.
constexpr std::array<CyclicRow, 16> kCyclicRows{{
    {{One, One, One, One}},  // G1
    {{One, X3, One, One}},   // G2
    {{X3, One, One, One}},   // G3
    {{X3, One, One, X3}},    // G4
    {{One, One, X3, One}},   // G5
    {{X3, One, X3, One}},    // G6
    {{One, One, One, One}},  // G7
    {{X3, One, One, One}},   // G8
    {{One, X4, One, X3}},    // G9
    {{One, One, X3, X3}},    // G10
    {{One, X4, X3, One}},    // G11
    {{X3, X4, X3, One}},     // G12
    {{One, One, One, One}},  // G13
    {{One, X3, One, One}},   // G14
    {{X3, One, One, One}},   // G15
    {{One, X4, One, One}},   // G16
}};

// Fam8 (t1, t2, t3), G18..G27.
constexpr std::array<std::array<Z, 3>, 10> kFam8Rows{{
    {{One, One, One}},   // G18
    {{Z1, One, One}},    // G19
    {{Z1, Z1, One}},     // G20
    {{One, One, Z1}},    // G21
    {{Z1, One, Z1}},     // G22
    {{One, Z1, One}},    // G23
    {{Z1, Z2, One}},     // G24
    {{One, Z1Z2, One}},  // G25
    {{One, Z2, Z1}},     // G26
    {{Z1, Z1Z2, Z1}},    // G27
}};

// Fam7, |G| = 2^(2k+2): (t1, t2, t3, t4), G28..G39.
constexpr std::array<std::array<Z, 4>, 12> kFam7EvenRows{{
    {{One, One, One, One}},  // G28
    {{One, Z1, One, One}},   // G29
    {{Z1, One, One, Z1}},    // G30
    {{Z1, Z1, One, Z1}},     // G31
    {{One, Z1, One, Z1}},    // G32
    {{One, One, One, Z1}},   // G33
    {{Z1, Z1, One, One}},    // G34
    {{Z1, One, One, One}},   // G35
    {{One, One, One, Z2}},   // G36
    {{One, One, Z1, Z2}},    // G37
    {{Z1, Z1, One, Z2}},     // G38
    {{Z1, One, One, Z2}},    // G39
}};

// Fam7, |G| = 2^(2k+3): (t1, t4) with Z1 standing for z, G40..G43.
constexpr std::array<std::array<Z, 2>, 4> kFam7OddRows{{
    {{One, One}},  // G40
    {{Z1, Z1}},    // G41
    {{One, Z1}},   // G42
    {{Z1, One}},   // G43
}};

constexpr std::int64_t pow2(int e) { return std::int64_t{1} << e; }

Word g(int gen, std::int64_t e = 1) { return Word::gen(gen, e); }

// y^-1 a y (b)^-1, i.e. the relation a^y = b.
Word conj_rel(const Word& a, int conj_gen, const Word& b) {
  return g(conj_gen, -1) * a * g(conj_gen) * b.inverse();
}

Presentation cyclic_commutator_presentation(const GroupSpec& s) {
  constexpr int x = 0, y = 1, t = 2;
  const int n = s.n;
  const auto& row = kCyclicRows[static_cast<std::size_t>(s.m - 1)];
  auto val = [&](Z z) -> Word {
    switch (z) {
      case X3: return g(x, pow2(n - 3));
      case X4: return g(x, pow2(n - 4));
      default: return {};
    }
  };
  Presentation p;
  p.generators = {"x", "y", "t"};
  p.order_claim = s.order();
  p.relators.push_back(g(x, pow2(n - 2)));
  if (s.family == Family::Fam50) {
    p.relators.push_back(g(y, 4) * val(row.z[0]).inverse());
    p.relators.push_back(conj_rel(g(x), y, g(x, -1) * val(row.z[1])));
    // t is shorthand for y^2 in this family.
    p.relators.push_back(g(t, -1) * g(y, 2));
    return p;
  }
  p.relators.push_back(g(t, 2));
  p.relators.push_back(g(y, 2) * val(row.z[0]).inverse());
  if (s.family == Family::Fam59) {
    p.relators.push_back(conj_rel(g(x), y, g(x, -1) * val(row.z[1])));
  } else {
    p.relators.push_back(conj_rel(g(x), y, g(x, -1) * val(row.z[1]) * g(t)));
  }
  p.relators.push_back(conj_rel(g(x), t, g(x) * val(row.z[2])));
  p.relators.push_back(conj_rel(g(t), y, g(t) * val(row.z[3])));
  return p;
}

Presentation g17_presentation(const GroupSpec& s) {
  constexpr int x1 = 0, x2 = 1, y = 2;
  Presentation p;
  p.generators = {"x1", "x2", "y"};
  p.order_claim = s.order();
  p.relators = {
      g(x1, 8),
      g(x2, 4),
      g(y, 4) * g(x1, -4),
      conj_rel(g(x1), y, g(y, 2) * g(x1) * g(x2)),
      conj_rel(g(x2), y, g(x1, -2)),
      conj_rel(g(x2), x1, g(x2, -1) * g(x1, 2) * g(x2)),
  };
  return p;
}

Presentation fam8_presentation(const GroupSpec& s) {
  constexpr int x1 = 0, x2 = 1, y = 2;
  const int k = s.k;
  const int eps = s.epsilon;
  const Word z1 = eps == 0 ? g(x2, pow2(k - 1)) : g(x1, pow2(k));
  const Word z2 = eps == 0 ? g(x1, pow2(k - 1)) : g(x2, pow2(k - 1));
  auto val = [&](Z z) -> Word {
    switch (z) {
      case Z1: return z1;
      case Z2: return z2;
      case Z1Z2: return z1 * z2;
      default: return {};
    }
  };
  const auto& row = kFam8Rows[static_cast<std::size_t>(s.m - 18)];
  Presentation p;
  p.generators = {"x1", "x2", "y"};
  p.order_claim = s.order();
  p.relators = {
      g(x1, pow2(k + eps)),
      g(x2, pow2(k)),
      g(y, 4) * val(row[0]).inverse(),
      conj_rel(g(x1), y, g(x1) * g(x2)),
      conj_rel(g(x2), y, g(x1, -2) * g(x2, -1) * val(row[1])),
      conj_rel(g(x2), x1, g(x2) * val(row[2])),
  };
  return p;
}

Presentation fam7_presentation(const GroupSpec& s) {
  constexpr int x1 = 0, x2 = 1, y = 2;
  const int k = s.k;
  Presentation p;
  p.generators = {"x1", "x2", "y"};
  p.order_claim = s.order();
  if (s.epsilon == 0) {
    const Word z1 = g(x1, pow2(k));
    const Word z2 = g(x1, pow2(k - 1)) * g(x2, pow2(k - 2));
    auto val = [&](Z z) -> Word {
      switch (z) {
        case Z1: return z1;
        case Z2: return z2;
        default: return {};
      }
    };
    const auto& row = kFam7EvenRows[static_cast<std::size_t>(s.m - 28)];
    p.relators = {
        g(x1, pow2(k + 1)),
        g(x2, pow2(k - 1)) * z1.inverse(),
        g(y, 4) * val(row[0]).inverse(),
        conj_rel(g(x1), y, g(y, 2) * g(x1) * g(x2) * val(row[1])),
        conj_rel(g(x2), y, g(x1, -2) * val(row[2])),
        conj_rel(g(x2), x1, g(x2, -1) * val(row[3])),
    };
    return p;
  }
  const Word z = g(x1, pow2(k)) * g(x2, pow2(k - 1));
  const auto& row = kFam7OddRows[static_cast<std::size_t>(s.m - 40)];
  auto val = [&](Z c) -> Word { return c == Z1 ? z : Word{}; };
  p.relators = {
      g(x1, pow2(k + 1)),
      g(x2, pow2(k)),
      g(y, 4) * val(row[0]).inverse(),
      conj_rel(g(x1), y, g(y, 2) * g(x1) * g(x2)),
      conj_rel(g(x2), y, g(x1, -2)),
      conj_rel(g(x2), x1, g(x2, -1) * val(row[1])),
  };
  return p;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Fam7: return "Fam7";
    case Family::Fam8: return "Fam8";
    case Family::Fam9: return "Fam9";
    case Family::Fam50: return "Fam50";
    case Family::Fam59: return "Fam59";
  }
  return "?";
}

Family family_of(int m) {
  if (m >= 1 && m <= 6) return Family::Fam59;
  if (m >= 7 && m <= 12) return Family::Fam9;
  if (m >= 13 && m <= 16) return Family::Fam50;
  if (m >= 17 && m <= 27) return Family::Fam8;
  if (m >= 28 && m <= 43) return Family::Fam7;
  throw OutOfRange("group index G" + std::to_string(m) + " outside 1..43");
}

int Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::optional<std::string> validity_violation(int m, int n) {
  const std::string id = "G" + std::to_string(m);
  if (m < 1 || m > 43) return id + ": index outside 1..43";
  if (n < kMinCatalogN || n > kMaxCatalogN) {
    return id + ": n=" + std::to_string(n) + " outside catalog range " +
           std::to_string(kMinCatalogN) + ".." + std::to_string(kMaxCatalogN);
  }
  const bool even = n % 2 == 0;
  auto need = [&](bool ok, const char* bound) -> std::optional<std::string> {
    if (ok) return std::nullopt;
    return id + " requires " + bound + " (got n=" + std::to_string(n) + ")";
  };
  switch (m) {
    case 9: case 11: case 12: case 16:
      return need(n > 5, "n>5");
    case 17:
      return need(n == 5, "n=5");
    case 20: case 23:
      return need(n >= 6, "n>=6");
    case 21: case 22: case 24: case 25: case 26: case 27:
      return need(n >= 7, "n>=7");
    case 28: case 29:
      return need(n >= 6 && even, "even n>=6");
    default:
      break;
  }
  if (m >= 30 && m <= 39) return need(n > 6 && even, "even n>6");
  if (m >= 40 && m <= 43) return need(n > 6 && !even, "odd n>6");
  return std::nullopt;
}

GroupSpec make_spec(int m, int n) {
  if (auto why = validity_violation(m, n)) throw OutOfRange(*why);
  GroupSpec s;
  s.family = family_of(m);
  s.m = m;
  s.n = n;
  if (s.family == Family::Fam7 || s.family == Family::Fam8) {
    std::tie(s.k, s.epsilon) = derived_params(s.family, n);
  }
  if (m == 25 && n % 2 == 1) s.duplicate_of = 24;
  return s;
}

int parse_group_id(std::string_view id) {
  std::string_view digits = id;
  if (!digits.empty() && (digits.front() == 'G' || digits.front() == 'g')) digits.remove_prefix(1);
  int m = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("cannot parse group id '" + std::string(id) + "'");
  }
  return m;
}

std::vector<GroupSpec> catalog_at(int n) {
  if (n < kMinCatalogN || n > kMaxCatalogN) {
    throw InvalidArgument("catalog is defined for " + std::to_string(kMinCatalogN) +
                          " <= n <= " + std::to_string(kMaxCatalogN) + ", got n=" +
                          std::to_string(n));
  }
  std::vector<GroupSpec> out;
  for (int m = 1; m <= 43; ++m) {
    if (!validity_violation(m, n)) out.push_back(make_spec(m, n));
  }
  return out;
}

std::pair<int, int> derived_params(Family family, int n) {
  if (family != Family::Fam7 && family != Family::Fam8) {
    throw NotApplicable(std::string(family_name(family)) + " has no (k, epsilon) parameters");
  }
  if (n < kMinCatalogN) throw InvalidArgument("derived_params needs n >= 5");
  return {(n - 2) / 2, (n - 2) % 2};
}

Presentation build_presentation(const GroupSpec& spec) {
  if (auto why = validity_violation(spec.m, spec.n)) throw OutOfRange(*why);
  switch (spec.family) {
    case Family::Fam59:
    case Family::Fam9:
    case Family::Fam50:
      return cyclic_commutator_presentation(spec);
    case Family::Fam8:
      return spec.m == 17 ? g17_presentation(spec) : fam8_presentation(spec);
    case Family::Fam7:
      return fam7_presentation(spec);
  }
  throw OutOfRange("unknown family");
}

}  // namespace cc2

namespace cc2 {

std::optional<std::uint64_t> abelianization_order(const Presentation& p) {
  const std::size_t cols = p.generators.size();
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : p.relators) {
    std::vector<std::int64_t> v(cols, 0);
    for (const auto& l : r.letters()) v[static_cast<std::size_t>(l.gen)] += l.exp;
    rows.push_back(std::move(v));
  }
  // Integer row reduction to echelon form; the index is the product of the
  // pivots.
  std::uint64_t index = 1;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || std::abs(rows[r][c]) < std::abs(rows[best][c]))) best = r;
      }
      if (best == rows.size()) return std::nullopt;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        const std::int64_t q = rows[r][c] / rows[top][c];
        for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[top][k];
        done = done && rows[r][c] == 0;
      }
      if (done) break;
    }
    index *= static_cast<std::uint64_t>(std::abs(rows[top][c]));
    ++top;
  }
  return index;
}

}  // namespace cc2
