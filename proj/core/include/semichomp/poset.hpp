#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "semichomp/element_set.hpp"
#include "semichomp/error.hpp"

namespace semichomp {

class NumericalSemigroup;

// A finite poset with a global minimum. The order is stored transitively
// closed in both directions (down-sets and up-sets per element).
class FinitePoset {
 public:
  // below[i][j] <=> element i <= element j. Validates reflexivity,
  // antisymmetry, transitivity and the existence of a unique minimum.
  FinitePoset(std::vector<std::string> labels, const std::vector<std::vector<bool>>& below);

  // Builds the order as the reflexive-transitive closure of the cover pairs
  // (lower, upper).
  static FinitePoset from_covers(std::vector<std::string> labels,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  std::size_t size() const { return labels_.size(); }
  std::size_t minimum() const { return minimum_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  const ElementSet& up_set(std::size_t i) const { return up_[i]; }
  const ElementSet& down_set(std::size_t i) const { return down_[i]; }

  // Integer values attached to elements when the poset comes from a
  // semigroup; empty otherwise.
  const std::vector<Int>& values() const { return values_; }
  void set_values(std::vector<Int> values);
  std::optional<std::size_t> index_of_value(Int v) const;

  ElementSet all() const { return ElementSet::full(size()); }
  bool is_down_set(const ElementSet& s) const;
  // (i, j) with i covered by j inside the subset `within`.
  std::vector<std::pair<std::size_t, std::size_t>> covers(const ElementSet& within) const;
  std::vector<std::size_t> maximal_elements(const ElementSet& within) const;

  // Removes the up-set of `move` from `position`.
  ElementSet after_move(const ElementSet& position, std::size_t move) const { return position.minus(up_[move]); }

  // Induced subposet on `subset` (must contain the minimum).
  FinitePoset restricted_to(const ElementSet& subset) const;

 private:
  FinitePoset() = default;
  void finish(std::vector<std::vector<bool>> below);

  std::vector<std::string> labels_;
  std::vector<Int> values_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::size_t minimum_ = 0;
};

// The product of a chain of `rows` and a chain of `cols` elements.
FinitePoset grid_poset(std::size_t rows, std::size_t cols);

// The ten-element poset {0} + {x_ij : 1 <= i,j <= 3} generated by
// 0 < x_1j, x_ij < x_(i+1)j, x_i3 < x_(i+1)2 and x_31 < x_33. Labels are "0"
// and "x11".."x33". Its mover loses.
FinitePoset ten_element_poset();

// Ap(S, a) as a poset; labels are the decimal elements, values() the elements.
FinitePoset apery_poset(const NumericalSemigroup& s, Int a);

// Adjacency text format: one "label: lower-cover lower-cover ..." line per element.
FinitePoset read_poset(std::istream& in);
std::string write_poset(const FinitePoset& poset);
std::string render_position(const FinitePoset& poset, const ElementSet& position);

struct SolveLimits {
  std::size_t max_memo_entries = std::size_t{1} << 26;
};

struct GameOutcome {
  bool mover_wins = false;
  std::vector<std::size_t> winning_moves;  // ascending element index
  std::size_t explored_states = 0;
};

// Exact retrograde solver for chomp on one poset. Memoized on positions;
// exceeding the memo cap throws kMemoOverflow instead of evicting.
class PosetSolver {
 public:
  explicit PosetSolver(const FinitePoset& poset, SolveLimits limits = {});

  bool mover_wins(const ElementSet& position);
  // All winning moves of `position`, ascending.
  std::vector<std::size_t> winning_moves(const ElementSet& position);
  std::optional<std::size_t> least_winning_move(const ElementSet& position);
  std::size_t explored_states() const { return memo_.size(); }
  const FinitePoset& poset() const { return poset_; }

 private:
  bool evaluate(const ElementSet& position);

  const FinitePoset& poset_;
  SolveLimits limits_;
  std::unordered_map<ElementSet, bool, ElementSetHash> memo_;
};

// Throws kInvalidPosition when `start` is not a down-set containing the minimum.
GameOutcome solve(const FinitePoset& poset, const ElementSet& start, SolveLimits limits = {});
GameOutcome solve(const FinitePoset& poset);

}  // namespace semichomp
