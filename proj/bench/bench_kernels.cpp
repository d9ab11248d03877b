// Serial reference kernels against their OpenMP versions on realized groups.

#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "cc2/catalog.hpp"
#include "cc2/group.hpp"
#include "cc2/kernels.hpp"

namespace {

const cc2::ConcreteGroup& group_at(int n) {
  static std::map<int, cc2::ConcreteGroup> memo;
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, cc2::realize(cc2::make_spec(28, n))).first;
  return it->second;
}

/// Rebuilds a breadth-first spanning tree from the public generator action,
/// so the table kernel can be timed outside realization.
struct Tree {
  std::vector<std::uint32_t> action, parent, bfs;
  std::vector<std::uint8_t> column;
  int columns = 0;

  explicit Tree(const cc2::ConcreteGroup& g) : columns(g.columns()) {
    const std::size_t n = g.order();
    action.resize(n * static_cast<std::size_t>(columns));
    for (std::size_t a = 0; a < n; ++a) {
      for (int c = 0; c < columns; ++c) action[a * columns + c] = g.act(static_cast<cc2::Element>(a), c);
    }
    parent.assign(n, 0);
    column.assign(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    seen[0] = 1;
    bfs.push_back(0);
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      for (int c = 0; c < columns; ++c) {
        const std::uint32_t b = action[bfs[i] * columns + c];
        if (seen[b]) continue;
        seen[b] = 1;
        parent[b] = bfs[i];
        column[b] = static_cast<std::uint8_t>(c);
        bfs.push_back(b);
      }
    }
  }

  [[nodiscard]] cc2::kernels::SpanningTree view() const { return {action, columns, parent, column, bfs}; }
};

template <auto Kernel>
void BM_FillTable(benchmark::State& state) {
  const auto& g = group_at(static_cast<int>(state.range(0)));
  const Tree tree(g);
  std::vector<std::uint16_t> out(g.order() * g.order());
  for (auto _ : state) {
    Kernel(tree.view(), g.order(), out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

template <auto Kernel>
void BM_CentralizerOrders(benchmark::State& state) {
  const auto& g = group_at(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g.dense_table(), g.order()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.order() * g.order()));
}

template <auto Kernel>
void BM_LightAssociativity(benchmark::State& state) {
  const auto& g = group_at(static_cast<int>(state.range(0)));
  const std::vector<std::uint32_t> gens(g.generators().begin(), g.generators().end());
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g.dense_table(), g.order(), gens));
}

BENCHMARK_TEMPLATE(BM_FillTable, cc2::kernels::fill_dense_table_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_FillTable, cc2::kernels::fill_dense_table)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_CentralizerOrders, cc2::kernels::centralizer_orders_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_CentralizerOrders, cc2::kernels::centralizer_orders)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_LightAssociativity, cc2::kernels::light_associativity_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_LightAssociativity, cc2::kernels::light_associativity)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
