// Player B on <a, a+1, ..., 2a-3> for even a >= 8.
//
// S without 0 splits into blocks S_i = [a + i(2a+1), 3a + i(2a+1)] ∩ S; (i, x)
// denotes a + i(2a+1) + x. Block 0 lacks (0, a-2) and (0, a-1). When A first
// touches a block, B answers from a fixed table; afterwards B keeps the part
// of the position at or above the active block a loss for whoever must leave
// it first, so A is the one forced down into a fresh block. B also never
// leaves a block with (i, a-3) present and (i, 0..a-4) all gone, since A
// would answer with (i-1, 2a-1).

#include <algorithm>
#include <map>
#include <mutex>

#include "semichomp/families.hpp"

namespace semichomp {

namespace {

// Normal-play values of "region plus a bottom element" positions, keyed by
// the region's values shifted to start at 0 (the order only sees differences).
class RegionCache {
 public:
  explicit RegionCache(NumericalSemigroup s) : s_(std::move(s)) {}

  bool mover_loses(const std::vector<Int>& values) {
    if (values.empty()) return true;
    std::vector<Int> key;
    key.reserve(values.size());
    for (Int v : values) key.push_back(v - values.front());
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const std::size_t n = key.size() + 1;
    std::vector<std::string> labels{"_"};
    for (Int v : key) labels.push_back(std::to_string(v));
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) below[0][i] = true;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) below[i][j] = s_.contains(key[j - 1] - key[i - 1]);
    const bool loses = !solve(FinitePoset(std::move(labels), below)).mover_wins;
    std::lock_guard lock(mu_);
    cache_.emplace(std::move(key), loses);
    return loses;
  }

 private:
  NumericalSemigroup s_;
  std::mutex mu_;
  std::map<std::vector<Int>, bool> cache_;
};

class IntervalBStrategy : public Strategy {
 public:
  IntervalBStrategy(std::shared_ptr<const FinitePoset> p, NumericalSemigroup s, Int a, Int first,
                    std::shared_ptr<RegionCache> cache)
      : Strategy(p), s_(std::move(s)), a_(a), w_(2 * a + 1), first_(first), cache_(std::move(cache)) {
    const auto& vals = poset().values();
    block_.resize(vals.size(), -1);
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (vals[i] > 0) block_[i] = (vals[i] - a_) / w_;
    blocks_ = vals.empty() ? 0 : static_cast<std::size_t>(block_.back() + 1);
    members_.assign(blocks_, {});
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (block_[i] >= 0) members_[static_cast<std::size_t>(block_[i])].push_back(i);
  }

  std::string kind() const override { return "interval-blocks"; }

  std::size_t opening(const ElementSet& position) const override {
    const Int i = (first_ - a_) / w_;
    return entry(i, offset(first_), position);
  }

  std::size_t reply(const ElementSet& before, std::size_t move) const override {
    const ElementSet after = poset().after_move(before, move);
    const Int i = block_[move];
    if (i >= 0 && complete(before, i)) return entry(i, offset(poset().values()[move]), after);
    Int active = 0;
    while (active < static_cast<Int>(blocks_) && complete(before, active)) ++active;
    return continuation(after, active);
  }

 private:
  Int offset(Int v) const { return (v - a_) % w_; }
  Int value(Int i, Int x) const { return a_ + i * w_ + x; }

  // Every element of S in block i is still present.
  bool complete(const ElementSet& pos, Int i) const {
    const auto& m = members_[static_cast<std::size_t>(i)];
    const std::size_t full = i == 0 ? static_cast<std::size_t>(w_ - 2) : static_cast<std::size_t>(w_);
    if (m.size() != full) return false;
    return std::all_of(m.begin(), m.end(), [&](std::size_t e) { return pos.test(e); });
  }

  bool present(const ElementSet& pos, Int i, Int x) const {
    auto e = poset().index_of_value(value(i, x));
    return e && pos.test(*e);
  }

  // No block keeps (i, a-3) once (i, 0..a-4) are all gone.
  bool guarded(const ElementSet& pos) const {
    for (Int i = 0; i < static_cast<Int>(blocks_); ++i) {
      if (!present(pos, i, a_ - 3)) continue;
      bool low = false;
      for (Int x = 0; x <= a_ - 4 && !low; ++x) low = present(pos, i, x);
      if (!low) return false;
    }
    return true;
  }

  std::size_t entry(Int i, Int y, const ElementSet& after) const {
    const Int a = a_;
    Int target = -1;
    if (y == 0 || y == a - 1) {
      target = 2;
    } else if (y >= 2 && y <= a - 2) {
      target = 0;
    } else if (y == 1) {
      target = 2 * a;
    } else if (y == 2 * a) {
      target = 1;
    } else if (y == a) {
      target = a + 2;
    } else if (y >= a + 2 && y <= 2 * a - 2) {
      target = a;
    } else if (y == a + 1) {
      target = a + 3;
    } else if (y == 2 * a - 1) {
      // Keyed on the least surviving element of the next block.
      Int lambda = -1;
      for (Int x = 0; x <= 2 * a && lambda < 0; ++x)
        if (present(after, i + 1, x)) lambda = x;
      target = (lambda < 0 || lambda >= a - 2) ? a : a + lambda + 2;
    }
    if (target >= 0) {
      if (auto e = poset().index_of_value(value(i, target)); e && after.test(*e)) {
        if (guarded(poset().after_move(after, *e))) return *e;
      }
    }
    return continuation(after, i);
  }

  std::size_t continuation(const ElementSet& after, Int active) const {
    const FinitePoset& p = poset();
    std::vector<std::size_t> region;
    after.for_each([&](std::size_t e) {
      if (block_[e] >= active) region.push_back(e);
    });
    auto region_loses = [&](const ElementSet& pos) {
      std::vector<Int> vals;
      for (std::size_t e : region)
        if (pos.test(e)) vals.push_back(p.values()[e]);
      return cache_->mover_loses(vals);
    };
    std::optional<std::size_t> unguarded;
    for (std::size_t z : region) {
      const ElementSet next = p.after_move(after, z);
      if (!region_loses(next)) continue;
      if (guarded(next)) return z;
      if (!unguarded) unguarded = z;
    }
    if (unguarded) return *unguarded;
    if (!region.empty()) return region.front();
    std::optional<std::size_t> any;
    after.for_each([&](std::size_t e) {
      if (!any && e != p.minimum()) any = e;
    });
    return any.value_or(p.minimum());
  }

  NumericalSemigroup s_;
  Int a_, w_, first_;
  std::shared_ptr<RegionCache> cache_;
  std::vector<Int> block_;  // -1 for 0
  std::size_t blocks_ = 0;
  std::vector<std::vector<std::size_t>> members_;
};

}  // namespace

SemigroupStrategy interval_2am3_b_strategy(Int a) {
  if (a < 8 || a % 2 != 0)
    fail(ErrorKind::kInvalidArgument, "the block strategy needs a even and at least 8 (a = 6 is won by A with 36)");
  const NumericalSemigroup s = interval_semigroup(a, a - 3);
  auto cache = std::make_shared<RegionCache>(s);
  SemigroupStrategy out;
  out.side = Player::kB;
  out.kind = "interval-blocks";
  out.continuation = [s, a, cache](Int first) -> StrategyPtr {
    auto p = std::make_shared<const FinitePoset>(apery_poset(s, first));
    return std::make_shared<IntervalBStrategy>(p, s, a, first, cache);
  };
  return out;
}

}  // namespace semichomp
