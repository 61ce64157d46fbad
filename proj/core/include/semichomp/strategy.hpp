#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "semichomp/poset.hpp"

namespace semichomp {

class NumericalSemigroup;

enum class Player { kA, kB };
std::string_view to_string(Player p);

// A deterministic plan for one side of chomp on a fixed finite poset.
// Replies must depend only on (position before the opponent's move, that
// move); the verifier memoizes on positions and relies on this.
class Strategy {
 public:
  explicit Strategy(std::shared_ptr<const FinitePoset> poset) : poset_(std::move(poset)) {}
  virtual ~Strategy() = default;

  const FinitePoset& poset() const { return *poset_; }
  const std::shared_ptr<const FinitePoset>& poset_ptr() const { return poset_; }

  // First move when this side is to move on `position` with no prior move.
  // Default: kNoStrategy.
  virtual std::size_t opening(const ElementSet& position) const;
  // Answer to the opponent picking `move` on `before`.
  virtual std::size_t reply(const ElementSet& before, std::size_t move) const = 0;
  // Short provenance tag shown by the CLI and service ("solver", "pairing", ...).
  virtual std::string kind() const = 0;

 private:
  std::shared_ptr<const FinitePoset> poset_;
};

using StrategyPtr = std::shared_ptr<const Strategy>;

// Plays least winning moves from an exact solve; when no winning move exists
// it plays the least element other than the minimum.
class SolverStrategy : public Strategy {
 public:
  explicit SolverStrategy(std::shared_ptr<const FinitePoset> poset, SolveLimits limits = {});
  std::size_t opening(const ElementSet& position) const override;
  std::size_t reply(const ElementSet& before, std::size_t move) const override;
  std::string kind() const override { return "solver"; }

  // Least winning move of `position`, if any. Thread-safe.
  std::optional<std::size_t> best_move(const ElementSet& position) const;

 private:
  mutable std::mutex mu_;
  mutable PosetSolver solver_;
};

// Wraps plain callables; used for the closed-form strategies.
class FunctionStrategy : public Strategy {
 public:
  using Opening = std::function<std::size_t(const ElementSet&)>;
  using Reply = std::function<std::size_t(const ElementSet&, std::size_t)>;

  FunctionStrategy(std::shared_ptr<const FinitePoset> poset, std::string kind, Reply reply, Opening opening = {});
  std::size_t opening(const ElementSet& position) const override;
  std::size_t reply(const ElementSet& before, std::size_t move) const override { return reply_(before, move); }
  std::string kind() const override { return kind_; }

 private:
  std::string kind_;
  Reply reply_;
  Opening opening_;
};

// Result of checking the four hypotheses of the pairing reduction for phi:
// (a) phi is an involution; (b) x <= phi(x) implies x = phi(x);
// (c) x <= y implies phi(x) <= phi(y) or x <= phi(y);
// (d) the fixed points form a down-set.
struct PairingReport {
  bool valid = true;
  char condition = 0;  // 'a'..'d' for the first violated hypothesis
  std::size_t witness_x = 0;
  std::size_t witness_y = 0;
  std::string message;
  ElementSet fixed;
};

PairingReport check_pairing(const FinitePoset& poset, const std::vector<std::size_t>& phi);

// Answers a non-fixed move x with phi(x) and plays the fixed-point game with
// an exact solver otherwise. Wins for whichever side wins the fixed-point game.
class PairingStrategy : public Strategy {
 public:
  // Optional override for moves inside F: given the fixed part of the
  // position before the move and the move, return a reply or nothing to fall
  // back to the solver.
  using FixedReply = std::function<std::optional<std::size_t>(const ElementSet&, std::size_t)>;

  PairingStrategy(std::shared_ptr<const FinitePoset> poset, std::vector<std::size_t> phi, ElementSet fixed,
                  SolveLimits limits = {}, FixedReply fixed_reply = {});
  std::size_t opening(const ElementSet& position) const override;
  std::size_t reply(const ElementSet& before, std::size_t move) const override;
  std::string kind() const override { return "pairing"; }

  const std::vector<std::size_t>& involution() const { return phi_; }
  const ElementSet& fixed() const { return fixed_; }
  // Whether the player to move on the full poset wins the fixed-point game.
  bool mover_wins_fixed_game() const;

 private:
  std::vector<std::size_t> phi_;
  ElementSet fixed_;
  SolverStrategy fixed_solver_;
  FixedReply fixed_reply_;
};

// Throws kValidation naming the violated hypothesis and a witness pair.
std::shared_ptr<const PairingStrategy> pairing_strategy(std::shared_ptr<const FinitePoset> poset,
                                                        std::vector<std::size_t> phi, SolveLimits limits = {},
                                                        PairingStrategy::FixedReply fixed_reply = {});

struct StrategyCheck {
  bool sound = true;
  std::size_t positions = 0;       // adversary-to-move positions examined
  std::string failure;             // empty when sound
  std::vector<std::size_t> line;   // move sequence reaching the failure
};

struct VerifyLimits {
  std::size_t max_positions = std::size_t{1} << 24;
};

// Plays `strategy` against an adversary that tries every legal reply. When
// `strategy_moves_first` the strategy opens on `start`, otherwise the
// adversary does. Sound means the adversary is always the one forced to
// take the minimum.
StrategyCheck verify_strategy(const Strategy& strategy, const ElementSet& start, bool strategy_moves_first,
                              VerifyLimits limits = {});

// A strategy for chomp on a numerical semigroup: side A fixes a first move
// and then plays second on Ap(S, first); side B answers every first move a
// with a strategy that moves first on Ap(S, a).
struct SemigroupStrategy {
  Player side = Player::kA;
  std::optional<Int> first_move;  // side A only
  std::string kind;
  std::function<StrategyPtr(Int first_move)> continuation;
};

struct SemigroupStrategyCheck {
  bool sound = true;
  std::size_t first_moves_checked = 0;
  std::size_t positions = 0;
  std::optional<Int> failing_first_move;
  std::string failure;
};

// Side A: verifies the continuation after its first move. Side B: verifies
// the answer to every first move a in S with 0 < a <= horizon.
SemigroupStrategyCheck verify_semigroup_strategy(const NumericalSemigroup& s, const SemigroupStrategy& strategy,
                                                 Int horizon, VerifyLimits limits = {});

}  // namespace semichomp
