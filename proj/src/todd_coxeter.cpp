#include "cc2/todd_coxeter.hpp"

#include <algorithm>
#include <string>

#include "cc2/error.hpp"

namespace cc2 {

namespace {

constexpr std::int32_t kUndef = -1;

constexpr int inverse_column(int c) { return c ^ 1; }

class Enumerator {
 public:
  Enumerator(const Presentation& p, const EnumerationOptions& opts)
      : columns_(2 * static_cast<int>(p.generators.size())), limit_(opts.max_cosets) {
    if (p.generators.empty()) throw InvalidArgument("presentation has no generators");
    for (const auto& r : p.relators) {
      std::vector<int> cols;
      for (const auto& l : r.letters()) {
        if (l.gen < 0 || l.gen >= static_cast<int>(p.generators.size())) {
          throw InvalidArgument("relator references undeclared generator");
        }
        const int c = 2 * l.gen + (l.exp < 0 ? 1 : 0);
        for (std::int64_t i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i) cols.push_back(c);
      }
      if (!cols.empty()) relators_.push_back(std::move(cols));
    }
    if (limit_ < 1) throw InvalidArgument("coset limit must be positive");
    allocate_first();
  }

  CosetTable run() {
    std::size_t alpha = 0;
    while (alpha < next_) {
      if (!alive(alpha)) {
        ++alpha;
        continue;
      }
      if (!process(alpha)) {
        lookahead();
        alpha = compact(alpha);
        if (next_ >= limit_) {
          throw ResourceError("coset enumeration exceeded limit of " + std::to_string(limit_) +
                              " cosets");
        }
        continue;
      }
      ++alpha;
    }
    return standardize();
  }

 private:
  std::int32_t& cell(std::size_t c, int col) {
    return table_[c * static_cast<std::size_t>(columns_) + static_cast<std::size_t>(col)];
  }

  bool alive(std::size_t c) const { return forward_[c] == static_cast<std::int32_t>(c); }

  void allocate_first() {
    table_.assign(static_cast<std::size_t>(columns_), kUndef);
    forward_.assign(1, 0);
    next_ = 1;
    live_ = 1;
    stats_.cosets_defined = 1;
    stats_.max_live = 1;
  }

  bool define(std::size_t a, int col) {
    if (next_ >= limit_) return false;
    const std::size_t b = next_++;
    table_.resize(next_ * static_cast<std::size_t>(columns_), kUndef);
    forward_.push_back(static_cast<std::int32_t>(b));
    cell(a, col) = static_cast<std::int32_t>(b);
    cell(b, inverse_column(col)) = static_cast<std::int32_t>(a);
    ++live_;
    ++stats_.cosets_defined;
    stats_.max_live = std::max(stats_.max_live, live_);
    return true;
  }

  // Scans every relator at alpha, defining cosets as needed, then fills the
  // remaining row entries. Returns false when a definition hit the limit.
  bool process(std::size_t alpha) {
    for (const auto& rel : relators_) {
      if (!scan_and_fill(alpha, rel)) return false;
      if (!alive(alpha)) return true;
    }
    for (int col = 0; col < columns_; ++col) {
      if (cell(alpha, col) == kUndef && !define(alpha, col)) return false;
    }
    return true;
  }

  bool scan_and_fill(std::size_t alpha, const std::vector<int>& rel) {
    std::size_t f = alpha, b = alpha;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(rel.size()) - 1;
    while (true) {
      while (i <= j && cell(f, rel[static_cast<std::size_t>(i)]) != kUndef) {
        f = static_cast<std::size_t>(cell(f, rel[static_cast<std::size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && cell(b, inverse_column(rel[static_cast<std::size_t>(j)])) != kUndef) {
        b = static_cast<std::size_t>(cell(b, inverse_column(rel[static_cast<std::size_t>(j)])));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        const int col = rel[static_cast<std::size_t>(i)];
        cell(f, col) = static_cast<std::int32_t>(b);
        cell(b, inverse_column(col)) = static_cast<std::int32_t>(f);
        return true;
      }
      if (!define(f, rel[static_cast<std::size_t>(i)])) return false;
    }
  }

  // Scan without defining; records deductions and coincidences.
  void scan(std::size_t alpha, const std::vector<int>& rel) {
    std::size_t f = alpha, b = alpha;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(rel.size()) - 1;
    while (i <= j && cell(f, rel[static_cast<std::size_t>(i)]) != kUndef) {
      f = static_cast<std::size_t>(cell(f, rel[static_cast<std::size_t>(i)]));
      ++i;
    }
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && cell(b, inverse_column(rel[static_cast<std::size_t>(j)])) != kUndef) {
      b = static_cast<std::size_t>(cell(b, inverse_column(rel[static_cast<std::size_t>(j)])));
      --j;
    }
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      const int col = rel[static_cast<std::size_t>(i)];
      cell(f, col) = static_cast<std::int32_t>(b);
      cell(b, inverse_column(col)) = static_cast<std::int32_t>(f);
    }
  }

  void lookahead() {
    ++stats_.lookaheads;
    for (std::size_t c = 0; c < next_; ++c) {
      for (const auto& rel : relators_) {
        if (!alive(c)) break;
        scan(c, rel);
      }
    }
  }

  std::size_t rep(std::size_t k) {
    std::size_t r = k;
    while (static_cast<std::size_t>(forward_[r]) != r) r = static_cast<std::size_t>(forward_[r]);
    while (static_cast<std::size_t>(forward_[k]) != r) {
      const auto nxt = static_cast<std::size_t>(forward_[k]);
      forward_[k] = static_cast<std::int32_t>(r);
      k = nxt;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l) {
    const std::size_t a = rep(k), b = rep(l);
    if (a == b) return;
    const std::size_t lo = std::min(a, b), hi = std::max(a, b);
    forward_[hi] = static_cast<std::int32_t>(lo);
    --live_;
    queue_.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const std::size_t gamma = queue_[qi];
      for (int col = 0; col < columns_; ++col) {
        const std::int32_t d = cell(gamma, col);
        if (d == kUndef) continue;
        const auto delta = static_cast<std::size_t>(d);
        cell(delta, inverse_column(col)) = kUndef;
        const std::size_t mu = rep(gamma), nu = rep(delta);
        if (cell(mu, col) != kUndef) {
          merge(nu, static_cast<std::size_t>(cell(mu, col)));
        } else if (cell(nu, inverse_column(col)) != kUndef) {
          merge(mu, static_cast<std::size_t>(cell(nu, inverse_column(col))));
        } else {
          cell(mu, col) = static_cast<std::int32_t>(nu);
          cell(nu, inverse_column(col)) = static_cast<std::int32_t>(mu);
        }
      }
    }
    queue_.clear();
  }

  // Removes dead cosets preserving order; returns the new index of the
  // first live coset at or after `alpha`.
  std::size_t compact(std::size_t alpha) {
    std::vector<std::int32_t> remap(next_, kUndef);
    std::size_t live = 0;
    std::size_t new_alpha = std::size_t(-1);
    for (std::size_t c = 0; c < next_; ++c) {
      if (c >= alpha && new_alpha == std::size_t(-1) && alive(c)) new_alpha = live;
      if (alive(c)) remap[c] = static_cast<std::int32_t>(live++);
    }
    if (new_alpha == std::size_t(-1)) new_alpha = live;
    std::vector<std::int32_t> t(live * static_cast<std::size_t>(columns_), kUndef);
    for (std::size_t c = 0; c < next_; ++c) {
      if (!alive(c)) continue;
      for (int col = 0; col < columns_; ++col) {
        const std::int32_t v = cell(c, col);
        t[static_cast<std::size_t>(remap[c]) * static_cast<std::size_t>(columns_) +
          static_cast<std::size_t>(col)] = v == kUndef ? kUndef : remap[static_cast<std::size_t>(v)];
      }
    }
    table_ = std::move(t);
    next_ = live;
    live_ = live;
    forward_.resize(live);
    for (std::size_t c = 0; c < live; ++c) forward_[c] = static_cast<std::int32_t>(c);
    return new_alpha;
  }

  CosetTable standardize() {
    std::vector<std::int32_t> order_of(next_, kUndef);
    std::vector<std::size_t> bfs;
    bfs.reserve(live_);
    order_of[0] = 0;
    bfs.push_back(0);
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
      const std::size_t c = bfs[qi];
      for (int col = 0; col < columns_; ++col) {
        const std::int32_t v = cell(c, col);
        if (v == kUndef) throw ConsistencyError("coset table incomplete after enumeration");
        const auto d = static_cast<std::size_t>(v);
        if (order_of[d] == kUndef) {
          order_of[d] = static_cast<std::int32_t>(bfs.size());
          bfs.push_back(d);
        }
      }
    }
    CosetTable out;
    out.columns = columns_;
    out.size = bfs.size();
    out.action.resize(out.size * static_cast<std::size_t>(columns_));
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      for (int col = 0; col < columns_; ++col) {
        out.action[i * static_cast<std::size_t>(columns_) + static_cast<std::size_t>(col)] =
            static_cast<std::uint32_t>(order_of[static_cast<std::size_t>(cell(bfs[i], col))]);
      }
    }
    out.stats = stats_;
    return out;
  }

  int columns_;
  std::size_t limit_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> forward_;
  std::vector<std::size_t> queue_;
  std::size_t next_ = 0;
  std::size_t live_ = 0;
  EnumerationStats stats_;
};

}  // namespace

CosetTable enumerate_cosets(const Presentation& p, const EnumerationOptions& opts) {
  return Enumerator(p, opts).run();
}

}  // namespace cc2
