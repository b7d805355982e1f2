#include <algorithm>
#include <bit>
#include <unordered_set>

#include "monid/oracles.hpp"

namespace monid {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& bits) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : bits) {
      h ^= w;
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1U; }
void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
void clear_bit(Bits& b, std::size_t i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

// Cells of the box [0, g] indexed in lex order (last variable fastest).
class Box {
public:
  explicit Box(const Exponent& g) : g_(g), stride_(g.size()) {
    std::uint64_t size = 1;
    for (std::size_t k = g.size(); k-- > 0;) {
      stride_[k] = static_cast<std::size_t>(size);
      size *= std::uint64_t{g[k]} + 1;
      if (size > (std::uint64_t{1} << 32))
        throw CapExceeded("characteristic box too large");
    }
    size_ = static_cast<std::size_t>(size);
  }

  std::size_t size() const { return size_; }
  std::size_t stride(Var v) const { return stride_[v]; }
  const Exponent& bound() const { return g_; }

  Exponent point(std::size_t index) const {
    Exponent a(g_.size());
    for (Var v = 0; v < g_.size(); ++v) {
      a[v] = static_cast<Coord>(index / stride_[v]);
      index %= stride_[v];
    }
    return a;
  }

  std::size_t index(const Exponent& a) const {
    std::size_t i = 0;
    for (Var v = 0; v < g_.size(); ++v)
      i += a[v] * stride_[v];
    return i;
  }

  std::size_t dimension(const Exponent& d) const {
    std::size_t r = 0;
    for (Var v = 0; v < g_.size(); ++v)
      r += d[v] == g_[v];
    return r;
  }

  /// Calls f(index) for every cell of [lo, hi] in lex order.
  template <class F>
  void for_each(const Exponent& lo, const Exponent& hi, F&& f) const {
    Exponent a = lo;
    while (true) {
      f(index(a));
      std::size_t k = g_.size();
      while (k > 0) {
        if (a[k - 1] < hi[k - 1]) {
          ++a[k - 1];
          break;
        }
        a[k - 1] = lo[k - 1];
        --k;
      }
      if (k == 0)
        return;
    }
  }

private:
  Exponent g_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 0;
};

constexpr std::size_t kMaxBoxCells = std::size_t{1} << 22;

struct Budget {
  std::uint64_t nodes = 0;
  std::uint64_t work = 0;
  std::uint64_t max_work = 0;

  void charge(std::uint64_t cells) {
    work += cells;
    if (work > max_work)
      throw CapExceeded("exact sdepth search exceeded its budget of " + std::to_string(max_work) +
                        " steps");
  }
};

struct Interval {
  Exponent lo;
  Exponent hi;
};

// Decides whether the poset has an interval partition in which every
// interval has dimension >= level. Elements of dimension >= level can
// always be covered as singletons, so only the low elements drive the
// search. An interval containing a low element has a low bottom (dimension
// only grows going up), so a free low element with no free low element
// below it is necessarily the bottom of its interval. Each step branches on
// such an element with the fewest candidate intervals.
//
// Candidate intervals: any interval [c, d] of dimension >= level splits into
// intervals of the same or larger dimension whose tops agree with their
// bottoms except on a set B of coordinates raised to g, where
// |B| = level - #{j : c_j = g_j} (or B empty when that is negative). So a
// candidate is a bottom plus a bitmask B.
class PartitionSearch {
public:
  PartitionSearch(const Box& box, const Bits& in_poset, std::size_t level, Budget& budget)
      : box_(box), n_(box.bound().size()), free_(in_poset), budget_(budget) {
    const Exponent& g = box.bound();
    for (std::size_t i = 0; i < box.size(); ++i) {
      if (!test(in_poset, i))
        continue;
      const Exponent c = box.point(i);
      if (box.dimension(c) >= level)
        continue;
      low_.push_back(i);
      coords_.insert(coords_.end(), c.coords().begin(), c.coords().end());
      masks_.push_back(candidate_masks(c, g, level));
    }
  }

  bool run() { return recurse(0); }

  /// Intervals of the successful partition, low part only.
  std::vector<Interval> chosen() const {
    std::vector<Interval> out;
    for (const auto& [p, mask] : chosen_) {
      Interval iv{box_.point(low_[p]), {}};
      iv.hi = iv.lo;
      for (Var v = 0; v < n_; ++v)
        if (mask >> v & 1U)
          iv.hi[v] = box_.bound()[v];
      out.push_back(std::move(iv));
    }
    return out;
  }
  /// Cells still free after success (covered as singletons).
  const Bits& remaining() const { return free_; }

private:
  using Mask = std::uint32_t;

  static std::vector<Mask> candidate_masks(const Exponent& c, const Exponent& g, std::size_t level) {
    Mask open = 0;
    std::size_t at_bound = 0;
    for (Var v = 0; v < c.size(); ++v) {
      if (c[v] == g[v])
        ++at_bound;
      else
        open |= Mask{1} << v;
    }
    const std::size_t need = level > at_bound ? level - at_bound : 0;
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask{1} << c.size()); ++m)
      if ((m & ~open) == 0 && static_cast<std::size_t>(std::popcount(m)) == need)
        out.push_back(m);
    return out;
  }

  Coord coord(std::size_t p, Var v) const { return coords_[p * n_ + v]; }

  // Calls f(cell) for every cell of the candidate (low_[p], mask); stops
  // early when f returns false. Returns the number of cells visited.
  template <class F>
  std::size_t for_each_cell(std::size_t p, Mask mask, F&& f) const {
    std::size_t axes[32], extent[32], counter[32];
    std::size_t k = 0;
    for (Var v = 0; v < n_; ++v)
      if (mask >> v & 1U) {
        axes[k] = box_.stride(v);
        extent[k] = box_.bound()[v] - coord(p, v);
        counter[k] = 0;
        ++k;
      }
    std::size_t cell = low_[p];
    std::size_t visited = 0;
    while (true) {
      ++visited;
      if (!f(cell))
        return visited;
      std::size_t a = 0;
      while (a < k && counter[a] == extent[a]) {
        cell -= counter[a] * axes[a];
        counter[a] = 0;
        ++a;
      }
      if (a == k)
        return visited;
      ++counter[a];
      cell += axes[a];
    }
  }

  bool available(std::size_t p, Mask mask) {
    bool ok = true;
    budget_.charge(for_each_cell(p, mask, [&](std::size_t cell) { return ok = test(free_, cell); }));
    return ok;
  }

  void fill(std::size_t p, Mask mask, bool value) {
    for_each_cell(p, mask, [&](std::size_t cell) {
      value ? set_bit(free_, cell) : clear_bit(free_, cell);
      return true;
    });
  }

  bool recurse(std::size_t pos) {
    while (pos < low_.size() && !test(free_, low_[pos]))
      ++pos;
    if (pos == low_.size())
      return true;
    ++budget_.nodes;
    budget_.charge(low_.size() - pos);
    if (dead_.contains(free_))
      return false;

    std::size_t best = 0;
    std::vector<Mask> tops;
    if (most_constrained(pos, best, tops)) {
      for (Mask mask : tops) {
        fill(best, mask, false);
        chosen_.emplace_back(best, mask);
        if (recurse(pos))
          return true;
        chosen_.pop_back();
        fill(best, mask, true);
      }
    }
    if ((dead_.size() + 1) * free_.size() < kMemoWords)
      dead_.insert(free_);
    return false;
  }

  // Among free low elements with no free low element below them, the one
  // with the fewest available candidates (lex-first on ties). False when
  // one of them has none. Everything between two low elements is low, so
  // "has a free low element below" propagates through low cells in index
  // order.
  bool most_constrained(std::size_t pos, std::size_t& best, std::vector<Mask>& tops) {
    below_.assign(free_.size(), 0);
    std::vector<Mask> here;
    bool found = false;
    for (std::size_t p = pos; p < low_.size(); ++p) {
      const std::size_t i = low_[p];
      bool has_below = false;
      for (Var v = 0; v < n_ && !has_below; ++v)
        has_below = coord(p, v) > 0 && test(below_, i - box_.stride(v));
      const bool is_free = test(free_, i);
      if (is_free && !has_below) {
        here.clear();
        for (Mask mask : masks_[p]) {
          if (found && here.size() >= tops.size())
            break;
          if (available(p, mask))
            here.push_back(mask);
        }
        if (here.empty())
          return false;
        if (!found || here.size() < tops.size()) {
          best = p;
          tops = here;
          found = true;
        }
      }
      if (is_free || has_below)
        set_bit(below_, i);
    }
    return found;
  }

  // About 256 MiB of stored bitsets.
  static constexpr std::size_t kMemoWords = std::size_t{1} << 25;

  const Box& box_;
  std::size_t n_;
  Bits free_;
  Budget& budget_;
  std::vector<std::size_t> low_;
  std::vector<Coord> coords_;             // coordinates of low_[p], row-major
  std::vector<std::vector<Mask>> masks_;  // candidate masks of low_[p]
  std::vector<std::pair<std::size_t, Mask>> chosen_;
  Bits below_;
  std::unordered_set<Bits, BitsHash> dead_;
};

// Stanley spaces of an interval [c, d]: one space x^e K[Z] per e in [c, d]
// that agrees with c on Z = {j : d_j = g_j}.
void interval_spaces(const Box& box, const Interval& iv, std::vector<StanleySpace>& out) {
  const Exponent& g = box.bound();
  std::vector<Var> free;
  Exponent hi = iv.hi;
  for (Var v = 0; v < g.size(); ++v) {
    if (iv.hi[v] == g[v]) {
      free.push_back(v);
      hi[v] = iv.lo[v];
    }
  }
  box.for_each(iv.lo, hi, [&](std::size_t i) { out.push_back({box.point(i), free}); });
}

} // namespace

CharacteristicPoset characteristic_poset(const MonomialIdeal& ideal, Target target,
                                         const SdepthCaps& caps) {
  ideal.require_proper_nonzero("exact_sdepth");
  if (ideal.num_vars() > caps.max_n)
    throw CapExceeded("exact sdepth limited to n <= " + std::to_string(caps.max_n));
  const Exponent g = generator_lcm(ideal);
  const Box box(g);
  if (box.size() > kMaxBoxCells)
    throw CapExceeded("characteristic box exceeds " + std::to_string(kMaxBoxCells) + " cells");
  CharacteristicPoset poset{g, {}};
  for (std::size_t i = 0; i < box.size(); ++i) {
    Exponent a = box.point(i);
    if (ideal.contains(a) == (target == Target::Ideal)) {
      if (poset.elements.size() == caps.max_poset)
        throw CapExceeded("characteristic poset exceeds " + std::to_string(caps.max_poset) + " elements");
      poset.elements.push_back(std::move(a));
    }
  }
  return poset;
}

ExactSdepthResult exact_sdepth(const MonomialIdeal& ideal, Target target, const SdepthCaps& caps) {
  const auto poset = characteristic_poset(ideal, target, caps);
  const Box box(poset.bound);
  Bits in_poset((box.size() + 63) / 64, 0);
  for (const auto& a : poset.elements)
    set_bit(in_poset, box.index(a));

  Budget budget{0, 0, caps.max_work};
  for (std::size_t level = ideal.num_vars() + 1; level-- > 0;) {
    PartitionSearch search(box, in_poset, level, budget);
    if (!search.run())
      continue;
    std::vector<StanleySpace> spaces;
    for (const auto& iv : search.chosen())
      interval_spaces(box, iv, spaces);
    for (std::size_t i = 0; i < box.size(); ++i) {
      if (!test(search.remaining(), i))
        continue;
      const Exponent a = box.point(i);
      interval_spaces(box, {a, a}, spaces);
    }
    return {level, poset.elements.size(), budget.nodes,
            StanleyDecomposition(ideal, target, std::move(spaces))};
  }
  // Level 0 always succeeds with singletons.
  throw InvariantViolation("exact sdepth search found no partition");
}

} // namespace monid
