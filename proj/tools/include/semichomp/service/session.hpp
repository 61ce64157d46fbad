#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "semichomp/families.hpp"
#include "semichomp/serialize.hpp"

namespace semichomp::service {

// HTTP-shaped result; the server forwards it verbatim.
struct Response {
  int status = 200;
  Json body;
};

struct EngineLimits {
  SolveLimits solve{std::size_t{1} << 19};
  SolveLimits probe{std::size_t{1} << 13};  // per-move probes of the heuristic
  std::uint64_t decider_budget = 2'000'000; // opening search when no rule applies
  Int max_first_move = 4096;
};

// One game of chomp on a numerical semigroup. Not thread-safe; the manager
// serializes access per session.
class GameSession {
 public:
  enum class EngineSide { kA, kB, kNone };

  GameSession(std::string id, NumericalSemigroup s, EngineSide engine, EngineLimits limits);

  const std::string& id() const { return id_; }
  bool finished() const { return loser_.has_value(); }
  Player to_move() const { return history_.size() % 2 == 0 ? Player::kA : Player::kB; }

  // Lets the engine move while it is its turn and the game is on.
  void run_engine();
  // Human move; returns false (and leaves the game untouched) when illegal.
  bool play(Int element);

  std::vector<Int> legal_moves() const;
  Json view() const;

 private:
  struct Move {
    Player player;
    Int element;
    bool by_engine;
  };
  struct Certificate {
    std::string source = "none";  // theorem | search | heuristic | none
    std::string rule;
    bool unsolved = false;
  };

  void apply(Int element, bool by_engine);
  Int choose_opening();
  Int choose_reply();
  std::size_t heuristic_move(Certificate& cert) const;
  bool in_position(Int element) const;
  Int horizon() const;

  std::string id_;
  NumericalSemigroup s_;
  EngineSide engine_;
  EngineLimits limits_;
  ClassificationReport report_;

  std::vector<Move> history_;
  std::optional<Player> loser_;
  std::shared_ptr<const FinitePoset> poset_;  // Ap(S, first move)
  ElementSet position_;
  ElementSet before_human_;  // position before the latest human move
  std::optional<std::size_t> last_human_;
  StrategyPtr strategy_;      // engine plan on poset_, if any
  std::optional<Int> planned_opening_;
  Certificate cert_;
};

std::string_view to_string(GameSession::EngineSide side);

class SessionManager {
 public:
  explicit SessionManager(EngineLimits limits = {}) : limits_(limits) {}

  // {generators, engineSide: "A"|"B"|"none", firstMove?}
  Response create(const Json& request);
  Response get(const std::string& id);
  Response move(const std::string& id, const Json& request);
  Response remove(const std::string& id);
  Response classify(const std::string& generators);

  std::size_t size() const;

 private:
  struct Slot {
    std::mutex mu;
    std::unique_ptr<GameSession> game;
  };
  std::shared_ptr<Slot> find(const std::string& id) const;
  std::string next_id();

  EngineLimits limits_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_ = 0;
};

Response error_response(int status, const std::string& error, const std::string& message);

}  // namespace semichomp::service
