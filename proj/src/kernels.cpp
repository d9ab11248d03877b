#include "cc2/kernels.hpp"

namespace cc2::kernels {

namespace {

inline void fill_row(const SpanningTree& t, std::size_t order, std::size_t a,
                     std::span<std::uint16_t> out) {
  std::uint16_t* row = out.data() + a * order;
  row[0] = static_cast<std::uint16_t>(a);
  const auto cols = static_cast<std::size_t>(t.columns);
  for (std::size_t i = 1; i < order; ++i) {
    const std::uint32_t b = t.bfs_order[i];
    const std::uint16_t base = row[t.parent[b]];
    row[b] = static_cast<std::uint16_t>(t.action[base * cols + t.parent_column[b]]);
  }
}

inline std::uint32_t count_commuting(std::span<const std::uint16_t> table, std::size_t order,
                                     std::size_t g) {
  std::uint32_t c = 0;
  const std::uint16_t* row = table.data() + g * order;
  for (std::size_t h = 0; h < order; ++h) {
    c += row[h] == table[h * order + g] ? 1u : 0u;
  }
  return c;
}

inline bool light_row(std::span<const std::uint16_t> table, std::size_t order, std::size_t x,
                      std::uint32_t g) {
  const std::uint16_t* row = table.data() + x * order;
  const std::uint16_t* grow = table.data() + static_cast<std::size_t>(g) * order;
  const std::uint16_t* xg_row = table.data() + static_cast<std::size_t>(row[g]) * order;
  for (std::size_t y = 0; y < order; ++y) {
    if (xg_row[y] != row[grow[y]]) return false;
  }
  return true;
}

inline bool assoc_row(std::span<const std::uint16_t> table, std::size_t order, std::size_t a) {
  const std::uint16_t* arow = table.data() + a * order;
  for (std::size_t b = 0; b < order; ++b) {
    const std::uint16_t* abrow = table.data() + static_cast<std::size_t>(arow[b]) * order;
    const std::uint16_t* brow = table.data() + b * order;
    for (std::size_t c = 0; c < order; ++c) {
      if (abrow[c] != arow[brow[c]]) return false;
    }
  }
  return true;
}

}  // namespace

void fill_dense_table(const SpanningTree& tree, std::size_t order, std::span<std::uint16_t> out) {
  const auto n = static_cast<std::ptrdiff_t>(order);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t a = 0; a < n; ++a) fill_row(tree, order, static_cast<std::size_t>(a), out);
}

void fill_dense_table_serial(const SpanningTree& tree, std::size_t order,
                             std::span<std::uint16_t> out) {
  for (std::size_t a = 0; a < order; ++a) fill_row(tree, order, a, out);
}

std::vector<std::uint32_t> centralizer_orders(std::span<const std::uint16_t> table,
                                              std::size_t order) {
  std::vector<std::uint32_t> out(order);
  const auto n = static_cast<std::ptrdiff_t>(order);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t g = 0; g < n; ++g) {
    out[static_cast<std::size_t>(g)] = count_commuting(table, order, static_cast<std::size_t>(g));
  }
  return out;
}

std::vector<std::uint32_t> centralizer_orders_serial(std::span<const std::uint16_t> table,
                                                     std::size_t order) {
  std::vector<std::uint32_t> out(order);
  for (std::size_t g = 0; g < order; ++g) out[g] = count_commuting(table, order, g);
  return out;
}

bool light_associativity(std::span<const std::uint16_t> table, std::size_t order,
                         std::span<const std::uint32_t> gens) {
  bool ok = true;
  const auto n = static_cast<std::ptrdiff_t>(order);
  for (const std::uint32_t g : gens) {
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (std::ptrdiff_t x = 0; x < n; ++x) {
      ok = ok && light_row(table, order, static_cast<std::size_t>(x), g);
    }
  }
  return ok;
}

bool light_associativity_serial(std::span<const std::uint16_t> table, std::size_t order,
                                std::span<const std::uint32_t> gens) {
  for (const std::uint32_t g : gens) {
    for (std::size_t x = 0; x < order; ++x) {
      if (!light_row(table, order, x, g)) return false;
    }
  }
  return true;
}

bool full_associativity(std::span<const std::uint16_t> table, std::size_t order) {
  bool ok = true;
  const auto n = static_cast<std::ptrdiff_t>(order);
#pragma omp parallel for schedule(dynamic, 4) reduction(&& : ok)
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    ok = ok && assoc_row(table, order, static_cast<std::size_t>(a));
  }
  return ok;
}

bool full_associativity_serial(std::span<const std::uint16_t> table, std::size_t order) {
  for (std::size_t a = 0; a < order; ++a) {
    if (!assoc_row(table, order, a)) return false;
  }
  return true;
}

}  // namespace cc2::kernels
