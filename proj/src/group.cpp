#include "cc2/group.hpp"

#include <bit>
#include <string>

#include "cc2/error.hpp"
#include "cc2/kernels.hpp"

namespace cc2 {

namespace {

int exact_log2(std::size_t n) {
  if (n == 0 || !std::has_single_bit(n)) {
    throw ConsistencyError("group order " + std::to_string(n) + " is not a power of 2");
  }
  return std::countr_zero(n);
}

}  // namespace

ConcreteGroup::ConcreteGroup(const CosetTable& table, std::vector<std::string> generator_names,
                             std::optional<GroupSpec> spec)
    : order_(table.size),
      log2_order_(exact_log2(table.size)),
      columns_(table.columns),
      action_(table.action),
      names_(std::move(generator_names)),
      spec_(std::move(spec)) {
  if (static_cast<int>(names_.size()) * 2 != columns_) {
    throw InvalidArgument("generator name count does not match coset table");
  }
  if (order_ > 65536) throw InvalidArgument("group order exceeds 16-bit element indices");
  gens_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) gens_.push_back(act(kIdentity, 2 * static_cast<int>(i)));
  build_tree();
  build_dense();
  build_inverse();
}

ConcreteGroup ConcreteGroup::from_table(std::vector<std::uint16_t> table,
                                        std::vector<std::string> generator_names,
                                        std::vector<Element> generator_elements,
                                        std::optional<GroupSpec> spec) {
  ConcreteGroup g;
  std::size_t n = 1;
  while (n * n < table.size()) ++n;
  if (n * n != table.size()) throw ConsistencyError("multiplication table is not square");
  g.order_ = n;
  g.log2_order_ = exact_log2(n);
  if (generator_names.size() != generator_elements.size()) {
    throw InvalidArgument("generator names and elements differ in length");
  }
  for (const Element e : generator_elements) {
    if (e >= n) throw ConsistencyError("generator element out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a] != a || table[a * n] != a) {
      throw ConsistencyError("index 0 is not the identity of the table");
    }
  }
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a * n + b] == 0) {
        g.inverse_[a] = static_cast<Element>(b);
        found = true;
        break;
      }
    }
    if (!found) throw ConsistencyError("element without inverse in table");
  }
  g.names_ = std::move(generator_names);
  g.gens_ = std::move(generator_elements);
  g.columns_ = 2 * static_cast<int>(g.gens_.size());
  g.action_.resize(n * static_cast<std::size_t>(g.columns_));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < g.gens_.size(); ++i) {
      g.action_[c * static_cast<std::size_t>(g.columns_) + 2 * i] = table[c * n + g.gens_[i]];
      g.action_[c * static_cast<std::size_t>(g.columns_) + 2 * i + 1] =
          table[c * n + g.inverse_[g.gens_[i]]];
    }
  }
  g.dense_ = std::move(table);
  g.spec_ = std::move(spec);
  g.build_tree();
  return g;
}

void ConcreteGroup::build_tree() {
  parent_.assign(order_, 0);
  parent_column_.assign(order_, 0);
  bfs_order_.clear();
  bfs_order_.reserve(order_);
  std::vector<std::uint8_t> seen(order_, 0);
  seen[0] = 1;
  bfs_order_.push_back(0);
  for (std::size_t qi = 0; qi < bfs_order_.size(); ++qi) {
    const Element c = bfs_order_[qi];
    for (int col = 0; col < columns_; ++col) {
      const Element d = act(c, col);
      if (!seen[d]) {
        seen[d] = 1;
        parent_[d] = c;
        parent_column_[d] = static_cast<std::uint8_t>(col);
        bfs_order_.push_back(d);
      }
    }
  }
  if (bfs_order_.size() != order_) throw ConsistencyError("generators do not generate the group");
}

void ConcreteGroup::build_dense() {
  if (order_ > kDenseTableLimit) return;
  dense_.assign(order_ * order_, 0);
  const kernels::SpanningTree tree{action_, columns_, parent_, parent_column_, bfs_order_};
  kernels::fill_dense_table(tree, order_, dense_);
}

void ConcreteGroup::build_inverse() {
  inverse_.assign(order_, 0);
  // inv(p * g) = g^-1 * inv(p); elements are visited parents first.
  for (std::size_t i = 1; i < order_; ++i) {
    const Element b = bfs_order_[i];
    const int col = parent_column_[b];
    const Element ginv = act(kIdentity, col ^ 1);
    inverse_[b] = mul_unchecked(ginv, inverse_[parent_[b]]);
  }
}

Element ConcreteGroup::mul_by_word(Element a, Element b) const {
  thread_local std::vector<std::uint8_t> path;
  path.clear();
  for (Element c = b; c != kIdentity; c = parent_[c]) path.push_back(parent_column_[c]);
  Element x = a;
  for (auto it = path.rbegin(); it != path.rend(); ++it) x = act(x, *it);
  return x;
}

void ConcreteGroup::check(Element a) const {
  if (a >= order_) {
    throw InvalidArgument("element index " + std::to_string(a) + " out of range for group of order " +
                          std::to_string(order_));
  }
}

Element ConcreteGroup::mul(Element a, Element b) const {
  check(a);
  check(b);
  return mul_unchecked(a, b);
}

Element ConcreteGroup::inv(Element a) const {
  check(a);
  return inverse_[a];
}

Element ConcreteGroup::power(Element a, std::int64_t e) const {
  check(a);
  Element base = e < 0 ? inverse_[a] : a;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Element result = kIdentity;
  // Reduce by the element order; it is a power of two.
  k %= static_cast<std::uint64_t>(element_order(base));
  while (k) {
    if (k & 1) result = mul_unchecked(result, base);
    base = mul_unchecked(base, base);
    k >>= 1;
  }
  return result;
}

std::int64_t ConcreteGroup::element_order(Element a) const {
  check(a);
  std::int64_t o = 1;
  for (Element x = a; x != kIdentity; x = mul_unchecked(x, x)) o *= 2;
  return o;
}

Element ConcreteGroup::conjugate(Element g, Element h) const {
  check(g);
  check(h);
  return conjugate_unchecked(g, h);
}

Element ConcreteGroup::commutator(Element g, Element h) const {
  check(g);
  check(h);
  return mul_unchecked(mul_unchecked(inverse_[g], inverse_[h]), mul_unchecked(g, h));
}

Element ConcreteGroup::generator(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return gens_[i];
  }
  throw InvalidArgument("unknown generator '" + std::string(name) + "'");
}

Element ConcreteGroup::evaluate(const Word& w) const {
  Element x = kIdentity;
  for (const auto& l : w.letters()) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= gens_.size()) {
      throw InvalidArgument("word references unknown generator");
    }
    x = mul_unchecked(x, power(gens_[static_cast<std::size_t>(l.gen)], l.exp));
  }
  return x;
}

}  // namespace cc2
