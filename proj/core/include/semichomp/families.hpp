#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semichomp/decider.hpp"
#include "semichomp/semigroup.hpp"
#include "semichomp/strategy.hpp"

namespace semichomp {

// Minimal generators a < ha+d < ha+2d < ... < ha+kd with gcd(a, d) = 1, k < a.
// Ap(S, a) splits into layers A_0 = {0}, A_j = {x_(j,l)} with
// x_(j,l) = j(ha+kd) - kd + ld; layers 1..s-1 are full (l = 1..k) and the top
// layer s has l = 1..t, where t = (a-1) mod k taken in 1..k.
struct ArithmeticShape {
  Int a = 0, h = 0, d = 0, k = 0;
  Int t = 0;  // size of the top layer
  Int s = 0;  // index of the top layer
  bool interval = false;  // h = d = 1

  Int element(Int j, Int l) const;
  // (j, l) of every element of Ap(S, a), layer by layer; (0, k) is 0.
  std::vector<std::pair<Int, Int>> coordinates() const;
  // { ceil(i/k) h a + i d : 0 <= i < a }, ascending.
  std::vector<Int> closed_form_apery() const;
  // x_(j,l) < x_(j',l') iff j < j' and l >= l'.
  static bool layer_order(Int j, Int l, Int j2, Int l2) { return j < j2 && l >= l2; }
  // Symmetric iff a = 2 (mod k).
  bool symmetric_by_shape() const;
  std::string to_string() const;
};

std::optional<ArithmeticShape> detect_shape(const NumericalSemigroup& s);

enum class Family {
  kNaturals,
  kSymmetric,
  kMaxEmbeddingDimension,
  kArithmetic,      // generalized arithmetic sequence (k = 2, or a odd and k even)
  kInterval,        // interval <a..a+k> resolved by the arithmetic rules
  kInterval3k,      // <3k..4k>, k odd
  kInterval2aMinus3,
  kNone,
};
std::string_view to_string(Family f);

struct ClassificationReport {
  Family family = Family::kNone;   // highest-priority matching family
  Winner winner = Winner::kUnknown;
  std::optional<Int> winning_move;
  std::string theorem;             // descriptive tag of the deciding rule
  // Every rule that matched, as (family, rule tag, winner); all agree.
  struct Match {
    Family family;
    std::string rule;
    Winner winner;
    std::optional<Int> move;
  };
  std::vector<Match> matches;
  std::optional<SemigroupStrategy> strategy;
  std::optional<ArithmeticShape> shape;
};

// Rules, in priority order: N; symmetric; maximal embedding dimension;
// arithmetic with k = 2; arithmetic with a odd and k even; <3k..4k> with k odd;
// <a..2a-3>. Throws kInternal when two matching rules disagree.
ClassificationReport classify(const NumericalSemigroup& s);

// Side B on a symmetric semigroup: answer a with the maximum of Ap(S, a)
// when that wins, else the least winning answer; then play by exact solve.
SemigroupStrategy symmetric_strategy(const NumericalSemigroup& s);

// Side A needs m odd, side B m even; otherwise kNoStrategy.
SemigroupStrategy med_strategy(const NumericalSemigroup& s, Player side);

// The layer of x in S for a semigroup of maximal embedding dimension:
// x/m for multiples of m, otherwise (x - w)/m + 1 with w the Apery element
// of m in the residue class of x.
Int med_layer(const NumericalSemigroup& s, Int x);

// Pairing on a (restricted) Apery poset. `removed` is the element dropped
// before pairing, for the even-a variant.
struct Involution {
  std::shared_ptr<const FinitePoset> poset;
  std::vector<std::size_t> phi;
  std::optional<Int> removed;
};

// l odd -> l+1, l even -> l-1 within each layer; 0 fixed. Needs k even. For
// a odd the pairing is on Ap(S, a); for a even it is on Ap(S, a) without
// x_(s,t), the maximal element B answers a with.
Involution arithmetic_involution(const ArithmeticShape& shape);

// Side A with first move a (a odd, k even).
SemigroupStrategy arithmetic_strategy(const ArithmeticShape& shape);
// Side B's answer x_(s,t) to the first move a (a even, k even), then pairing.
StrategyPtr arithmetic_even_answer(const ArithmeticShape& shape);

// Pairing on Ap(<3k..4k>, 3k+1): 3k+i <-> 3k+i+1, 7k+i <-> 7k+i+1 and
// 11k+i <-> 11k+i+1 for even i in 2..k-3. Needs k odd >= 3.
Involution interval_3k_involution(Int k);
// Values of the ten-element poset's elements inside Ap(<3k..4k>, 3k+1), in
// ten_element_poset() index order: 0, then x_i1 = 3ik, x_i2 = 4ik-1, x_i3 = 4ik.
std::vector<Int> ten_element_embedding(Int k);
// Winning answer on the ten-element poset to the opponent's first pick, by
// label ("x11" -> "x32", ...).
std::optional<std::string> ten_element_reply(const std::string& label);
// Side A with first move 3k+1.
SemigroupStrategy interval_3k_strategy(Int k);

// Side B on <a..2a-3>, a even >= 8. kInvalidArgument otherwise.
SemigroupStrategy interval_2am3_b_strategy(Int a);

}  // namespace semichomp
