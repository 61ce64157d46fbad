#include "semichomp/strategy.hpp"

#include <unordered_set>

#include "semichomp/semigroup.hpp"

namespace semichomp {

std::string_view to_string(Player p) { return p == Player::kA ? "A" : "B"; }

std::size_t Strategy::opening(const ElementSet&) const {
  fail(ErrorKind::kNoStrategy, kind() + " strategy does not move first");
}

namespace {

// Least element other than the minimum, or the minimum when nothing else is left.
std::size_t fallback_move(const FinitePoset& poset, const ElementSet& position) {
  std::optional<std::size_t> out;
  position.for_each([&](std::size_t i) {
    if (!out && i != poset.minimum()) out = i;
  });
  return out.value_or(poset.minimum());
}

}  // namespace

SolverStrategy::SolverStrategy(std::shared_ptr<const FinitePoset> poset, SolveLimits limits)
    : Strategy(std::move(poset)), solver_(this->poset(), limits) {}

std::optional<std::size_t> SolverStrategy::best_move(const ElementSet& position) const {
  std::lock_guard lock(mu_);
  return solver_.least_winning_move(position);
}

std::size_t SolverStrategy::opening(const ElementSet& position) const {
  return best_move(position).value_or(fallback_move(poset(), position));
}

std::size_t SolverStrategy::reply(const ElementSet& before, std::size_t move) const {
  const ElementSet after = poset().after_move(before, move);
  return best_move(after).value_or(fallback_move(poset(), after));
}

FunctionStrategy::FunctionStrategy(std::shared_ptr<const FinitePoset> poset, std::string kind, Reply reply,
                                   Opening opening)
    : Strategy(std::move(poset)), kind_(std::move(kind)), reply_(std::move(reply)), opening_(std::move(opening)) {}

std::size_t FunctionStrategy::opening(const ElementSet& position) const {
  if (!opening_) return Strategy::opening(position);
  return opening_(position);
}

PairingReport check_pairing(const FinitePoset& poset, const std::vector<std::size_t>& phi) {
  PairingReport r;
  const std::size_t n = poset.size();
  r.fixed = ElementSet(n);
  auto violate = [&](char c, std::size_t x, std::size_t y, const std::string& what) {
    r.valid = false;
    r.condition = c;
    r.witness_x = x;
    r.witness_y = y;
    r.message = std::string("pairing condition (") + c + ") fails: " + what + " [" + poset.label(x) + ", " +
                poset.label(y) + "]";
    return r;
  };
  if (phi.size() != n) {
    r.valid = false;
    r.condition = 'a';
    r.message = "pairing map has the wrong number of entries";
    return r;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (phi[x] >= n) {
      r.valid = false;
      r.condition = 'a';
      r.witness_x = x;
      r.message = "pairing map sends " + poset.label(x) + " outside the poset";
      return r;
    }
    if (phi[phi[x]] != x) return violate('a', x, phi[x], "phi(phi(x)) != x");
  }
  for (std::size_t x = 0; x < n; ++x)
    if (phi[x] != x && poset.leq(x, phi[x])) return violate('b', x, phi[x], "x < phi(x)");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (poset.leq(x, y) && !poset.leq(phi[x], phi[y]) && !poset.leq(x, phi[y]))
        return violate('c', x, y, "x <= y but neither phi(x) <= phi(y) nor x <= phi(y)");
  for (std::size_t x = 0; x < n; ++x)
    if (phi[x] == x) r.fixed.set(x);
  for (std::size_t x = 0; x < n; ++x) {
    if (!r.fixed.test(x)) continue;
    for (std::size_t y = 0; y < n; ++y)
      if (poset.leq(y, x) && !r.fixed.test(y)) return violate('d', y, x, "fixed points are not a down-set");
  }
  return r;
}

PairingStrategy::PairingStrategy(std::shared_ptr<const FinitePoset> poset, std::vector<std::size_t> phi,
                                 ElementSet fixed, SolveLimits limits, FixedReply fixed_reply)
    : Strategy(poset),
      phi_(std::move(phi)),
      fixed_(std::move(fixed)),
      fixed_solver_(poset, limits),
      fixed_reply_(std::move(fixed_reply)) {}

bool PairingStrategy::mover_wins_fixed_game() const { return fixed_solver_.best_move(fixed_).has_value(); }

std::size_t PairingStrategy::opening(const ElementSet& position) const {
  ElementSet f = position;
  f &= fixed_;
  auto m = fixed_solver_.best_move(f);
  if (!m) fail(ErrorKind::kNoStrategy, "the fixed-point game is lost for the player to move");
  return *m;
}

std::size_t PairingStrategy::reply(const ElementSet& before, std::size_t move) const {
  const ElementSet after = poset().after_move(before, move);
  if (!fixed_.test(move)) {
    const std::size_t r = phi_[move];
    if (!after.test(r))
      fail(ErrorKind::kInternal, "paired element " + poset().label(r) + " is no longer available");
    return r;
  }
  // The fixed points form a down-set, so moves outside F never touch F.
  if (fixed_reply_) {
    ElementSet fb = before;
    fb &= fixed_;
    if (auto r = fixed_reply_(fb, move); r && after.test(*r)) return *r;
  }
  ElementSet f = after;
  f &= fixed_;
  return fixed_solver_.best_move(f).value_or(fallback_move(poset(), f));
}

std::shared_ptr<const PairingStrategy> pairing_strategy(std::shared_ptr<const FinitePoset> poset,
                                                        std::vector<std::size_t> phi, SolveLimits limits,
                                                        PairingStrategy::FixedReply fixed_reply) {
  PairingReport report = check_pairing(*poset, phi);
  if (!report.valid) fail(ErrorKind::kValidation, report.message);
  return std::make_shared<PairingStrategy>(std::move(poset), std::move(phi), std::move(report.fixed), limits,
                                           std::move(fixed_reply));
}

namespace {

class Verifier {
 public:
  Verifier(const Strategy& s, VerifyLimits limits) : strategy_(s), poset_(s.poset()), limits_(limits) {}

  // True when the adversary, to move on `pos`, loses against the strategy.
  bool adversary_loses(const ElementSet& pos) {
    if (seen_.count(pos)) return true;
    const std::size_t minimum = poset_.minimum();
    bool ok = true;
    pos.for_each([&](std::size_t y) {
      if (!ok || y == minimum) return;
      line_.push_back(y);
      const ElementSet after = poset_.after_move(pos, y);
      const std::size_t r = strategy_.reply(pos, y);
      if (!after.test(r)) {
        ok = false;
        failure_ = "reply " + poset_.label(r) + " to " + poset_.label(y) + " is not a legal move";
        return;
      }
      line_.push_back(r);
      if (r == minimum) {
        ok = false;
        failure_ = "strategy is forced to take the minimum after " + poset_.label(y) + " at " +
                   render_position(poset_, after);
        return;
      }
      if (!adversary_loses(poset_.after_move(after, r))) {
        ok = false;
        return;
      }
      line_.pop_back();
      line_.pop_back();
    });
    if (!ok) return false;
    if (seen_.size() >= limits_.max_positions)
      fail(ErrorKind::kMemoOverflow, "strategy verification exceeded " + std::to_string(limits_.max_positions) +
                                         " positions");
    seen_.insert(pos);
    return true;
  }

  const Strategy& strategy_;
  const FinitePoset& poset_;
  VerifyLimits limits_;
  std::unordered_set<ElementSet, ElementSetHash> seen_;
  std::vector<std::size_t> line_;
  std::string failure_;
};

}  // namespace

StrategyCheck verify_strategy(const Strategy& strategy, const ElementSet& start, bool strategy_moves_first,
                              VerifyLimits limits) {
  const FinitePoset& poset = strategy.poset();
  if (!poset.is_down_set(start) || !start.test(poset.minimum()))
    fail(ErrorKind::kInvalidPosition, "start position is not a down-set containing the minimum");
  Verifier v(strategy, limits);
  StrategyCheck out;
  ElementSet pos = start;
  if (strategy_moves_first) {
    const std::size_t r = strategy.opening(start);
    v.line_.push_back(r);
    if (!start.test(r) || r == poset.minimum()) {
      out.sound = false;
      out.failure = "opening " + poset.label(r) + " is illegal or takes the minimum";
      out.line = v.line_;
      return out;
    }
    pos = poset.after_move(start, r);
  }
  out.sound = v.adversary_loses(pos);
  out.positions = v.seen_.size();
  if (!out.sound) {
    out.failure = v.failure_.empty() ? "adversary escaped" : v.failure_;
    out.line = v.line_;
  }
  return out;
}

SemigroupStrategyCheck verify_semigroup_strategy(const NumericalSemigroup& s, const SemigroupStrategy& strategy,
                                                 Int horizon, VerifyLimits limits) {
  SemigroupStrategyCheck out;
  auto check_one = [&](Int a, bool strategy_moves_first) {
    StrategyPtr cont = strategy.continuation(a);
    if (!cont) fail(ErrorKind::kNoStrategy, "no continuation for first move " + std::to_string(a));
    const StrategyCheck c = verify_strategy(*cont, cont->poset().all(), strategy_moves_first, limits);
    ++out.first_moves_checked;
    out.positions += c.positions;
    if (!c.sound && out.sound) {
      out.sound = false;
      out.failing_first_move = a;
      std::string line;
      for (auto i : c.line) line += (line.empty() ? "" : " ") + cont->poset().label(i);
      out.failure = c.failure + " (line: " + line + ")";
    }
  };
  if (strategy.side == Player::kA) {
    if (!strategy.first_move) fail(ErrorKind::kNoStrategy, "side A strategy has no first move");
    check_one(*strategy.first_move, false);
  } else {
    for (Int a = 1; a <= horizon && out.sound; ++a)
      if (s.contains(a)) check_one(a, true);
  }
  return out;
}

}  // namespace semichomp
