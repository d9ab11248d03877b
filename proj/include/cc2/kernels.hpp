#pragma once

// Data-parallel inner loops over dense Cayley tables. Each kernel has an
// OpenMP version (used by the library) and a serial reference version that
// the tests compare against and the benchmarks race.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cc2::kernels {

/// Breadth-first spanning tree of the right Cayley graph: every element
/// b != 0 equals parent[b] * generator-column parent_column[b].
struct SpanningTree {
  std::span<const std::uint32_t> action;  // order * columns
  int columns = 0;
  std::span<const std::uint32_t> parent;
  std::span<const std::uint8_t> parent_column;
  std::span<const std::uint32_t> bfs_order;  // bfs_order[0] == 0
};

/// out[a*N + b] = a*b, rows filled independently.
void fill_dense_table(const SpanningTree& tree, std::size_t order, std::span<std::uint16_t> out);
void fill_dense_table_serial(const SpanningTree& tree, std::size_t order,
                             std::span<std::uint16_t> out);

/// counts[g] = |{h : gh = hg}| = |C_G(g)|.
std::vector<std::uint32_t> centralizer_orders(std::span<const std::uint16_t> table,
                                              std::size_t order);
std::vector<std::uint32_t> centralizer_orders_serial(std::span<const std::uint16_t> table,
                                                     std::size_t order);

/// Light's test restricted to a generating set: (x g) y == x (g y) for all
/// x, y and every g in `gens`. Together with generation this is equivalent
/// to associativity of the whole table.
bool light_associativity(std::span<const std::uint16_t> table, std::size_t order,
                         std::span<const std::uint32_t> gens);
bool light_associativity_serial(std::span<const std::uint16_t> table, std::size_t order,
                                std::span<const std::uint32_t> gens);

/// Brute-force (ab)c == a(bc) over all triples. O(N^3).
bool full_associativity(std::span<const std::uint16_t> table, std::size_t order);
bool full_associativity_serial(std::span<const std::uint16_t> table, std::size_t order);

}  // namespace cc2::kernels
