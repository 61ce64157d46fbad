#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "semichomp/state_codec.hpp"

namespace semichomp {

struct DeciderLimits {
  std::uint64_t budget = 100'000'000;        // state evaluations
  std::size_t max_table_gaps = 22;           // full W-table mode above this is refused
  std::size_t max_memo_entries = std::size_t{1} << 26;
  std::size_t max_table_bytes = std::size_t{1} << 30;
};

struct DeciderCounters {
  std::uint64_t evaluations = 0;   // (x, C) states evaluated
  std::uint64_t levels = 0;        // W_x tables built
  std::uint64_t valid_sets = 0;    // down-closed gap sets per level
  std::uint64_t memo_states = 0;   // hashed states (x <= g or bounded mode)
};

// Exact win/loss evaluation on (x, C) states. For x > g the states are kept
// in level tables W_x (one bit per down-closed gap set C, set when the
// player to move wins), built in increasing x; everything else goes through
// a memo keyed by the state.
class CodecSolver {
 public:
  // table_mode false never builds levels (any gap count up to 62).
  CodecSolver(NumericalSemigroup s, DeciderLimits limits = {}, bool table_mode = true);

  const StateCodec& codec() const { return codec_; }
  bool table_mode() const { return table_mode_; }

  bool mover_wins(const GameState& st);
  // True when the player who moves after a (on Ap(S, a)) loses.
  bool is_winning_first_move(Int a);

  // Builds every level up to x (table mode). Throws kBudgetExhausted.
  void extend_to(Int x);
  Int highest_level() const { return codec_.frobenius() + static_cast<Int>(levels_.size()); }
  // Compact W_x over valid_sets() order; x in (g, highest_level()].
  const std::vector<std::uint64_t>& level(Int x) const;
  bool level_contains(Int x, std::uint64_t c) const;
  // Down-closed gap sets in increasing numeric order.
  const std::vector<std::uint64_t>& valid_sets() const { return valid_; }

  const DeciderCounters& counters() const { return counters_; }

 private:
  bool evaluate_memo(const GameState& st);
  void build_level(Int x);
  void charge();
  bool first_move_wins_below(Int x);

  StateCodec codec_;
  DeciderLimits limits_;
  bool table_mode_;
  std::vector<std::uint64_t> valid_;
  std::vector<std::int32_t> index_;   // dense C -> position in valid_
  std::vector<std::vector<std::uint64_t>> levels_;
  std::size_t table_bytes_ = 0;
  std::unordered_map<GameState, bool, GameStateHash> memo_;
  std::optional<Int> least_winning_first_move_;  // among first moves of built levels and <= g
  Int first_moves_cleared_to_ = 0;                // every first move <= this is known
  DeciderCounters counters_;
};

// Whether `a` is a winning first move, through the codec solver.
bool is_winning_first_move(const NumericalSemigroup& s, Int a, DeciderLimits limits = {});
// The same question answered by an exact solve of the finite poset Ap(S, a).
bool is_winning_first_move_by_poset(const NumericalSemigroup& s, Int a);

// Least winning first move <= x_max; table mode when the gap count allows.
std::optional<Int> smallest_winning_move(const NumericalSemigroup& s, Int x_max, DeciderLimits limits = {});

enum class Winner { kA, kB, kUnknown };
std::string_view to_string(Winner w);

enum class CertificateKind { kWinningMove, kPeriodicity, kBudgetExhausted };
std::string_view to_string(CertificateKind k);

struct Verdict {
  Winner winner = Winner::kUnknown;
  CertificateKind certificate = CertificateKind::kBudgetExhausted;
  std::optional<Int> move;   // winning first move (A)
  // Periodicity: (W_first..W_first+length-1) == (W_second..W_second+length-1)
  // and every first move below second + length is losing.
  Int window_first = 0;
  Int window_second = 0;
  Int window_length = 0;
  Int x_max = 0;             // largest level built
  bool verified = false;     // certificate re-checked independently of the search
  DeciderCounters counters;
};

// Searches first moves in increasing order; B is certified by a repeated
// window of g consecutive W-levels once every first move below the end of
// the repeat is cleared. Budget exhaustion yields Unknown.
// Throws kTableTooLarge when the gap count exceeds the table limit.
Verdict decide_winner(const NumericalSemigroup& s, DeciderLimits limits = {});

// 2^(g * 2^n). value is filled when the exponent is at most 2^24.
struct BigBound {
  mpz_class exponent;
  std::optional<mpz_class> value;
  std::string to_string() const;
};
BigBound power_of_two_bound(const mpz_class& exponent);
// Throws kUndefinedBound for S = N.
BigBound theoretical_bound(const NumericalSemigroup& s);

}  // namespace semichomp
