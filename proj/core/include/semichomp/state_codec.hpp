#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semichomp/semigroup.hpp"

namespace semichomp {

// A position of chomp on S after the first move, written as
// ([0, x-1] n S) u (x + C): x is the least removed element and C a set of
// gaps, stored as a bitmask over indices into the sorted gap list.
struct GameState {
  Int x = 0;
  std::uint64_t gaps = 0;

  friend bool operator==(const GameState&, const GameState&) = default;
};

struct GameStateHash {
  std::size_t operator()(const GameState& s) const {
    std::uint64_t h = static_cast<std::uint64_t>(s.x) * 0x9e3779b97f4a7c15ull ^ s.gaps;
    h = (h ^ (h >> 31)) * 0xbf58476d1ce4e5b9ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

class StateCodec {
 public:
  static constexpr std::size_t kMaxGaps = 62;

  // Throws kTableTooLarge when S has more than 62 gaps.
  explicit StateCodec(NumericalSemigroup s);

  const NumericalSemigroup& semigroup() const { return s_; }
  std::size_t gap_count() const { return gaps_.size(); }
  const std::vector<Int>& gap_values() const { return gaps_; }
  std::uint64_t full_mask() const { return full_; }
  Int frobenius() const { return s_.frobenius(); }

  // Index of gap value v, or -1.
  int gap_index(Int v) const {
    return v >= 1 && v <= s_.frobenius() ? gap_index_[static_cast<std::size_t>(v)] : -1;
  }

  // (a, {c : a + c in S}); throws kInvalidArgument unless a is a nonzero element.
  GameState initial_state(Int a) const;
  // {c : a + c in S} as a mask; the full mask above g.
  std::uint64_t reachable_gaps(Int a) const;

  bool is_valid(const GameState& st) const;
  bool contains(const GameState& st, Int y) const;
  std::vector<Int> elements(const GameState& st) const;
  std::size_t element_count(const GameState& st) const;

  // Removes y + S by explicit set arithmetic and re-encodes. Throws
  // kIllegalMove when y is 0 or not in the position.
  GameState apply_move(const GameState& st, Int y) const;

  // The same move through the shift/kill bit kernels the decider uses.
  GameState apply_move_fast(const GameState& st, Int y) const;

  // (x + delta, C); both bases must exceed g, else kOutOfWindow.
  GameState translate(const GameState& st, Int delta) const;

  // Encodes an explicit proper down-set given as a sorted element list.
  // Throws kInvalidPosition when the set is not of the form above.
  GameState encode(const std::vector<Int>& elements) const;

  std::string render(const GameState& st) const;

  // Checks the structural laws a move must satisfy: the new base is
  // min(x, y); a move above x strictly shrinks C; a move y with
  // g < y < x - g lands on (y, all gaps). Returns a description of the
  // first violated law.
  std::optional<std::string> check_move_laws(const GameState& before, Int y, const GameState& after) const;

  // Kernels. kill(j): gaps c with c - c_j in S, i.e. the part of x + C that
  // the move x + c_j removes. lower_move(C, x, y) is D for a move y < x.
  std::uint64_t kill(std::size_t j) const { return kill_[j]; }
  std::uint64_t lower_move(std::uint64_t c, Int x, Int y) const;
  // {c_i : c_i - delta in C} for 1 <= delta.
  std::uint64_t shift_up(std::uint64_t c, Int delta) const;
  // below(i): gaps c_j with c_i - c_j in S (including i itself).
  std::uint64_t below(std::size_t i) const { return below_[i]; }
  bool is_gap_down_set(std::uint64_t c) const;

 private:
  NumericalSemigroup s_;
  std::vector<Int> gaps_;
  std::vector<int> gap_index_;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> kill_;
  std::vector<std::uint64_t> below_;
  std::vector<std::uint64_t> low_;    // low_[d] = {c_i < d}, d in [0, g + 1]
  std::vector<std::uint64_t> in_s_;   // in_s_[y] = {c_i : y + c_i in S}, y in [0, g]
  // shift_[(delta - 1) * chunks * 256 + chunk * 256 + byte]
  std::vector<std::uint64_t> shift_;
  std::size_t chunks_ = 0;
};

}  // namespace semichomp
