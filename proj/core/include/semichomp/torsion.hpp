#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semichomp/decider.hpp"
#include "semichomp/finite_group.hpp"
#include "semichomp/lattice.hpp"
#include "semichomp/poset.hpp"

namespace semichomp {

// (a, t) in Z x T; t is an element index of the ambient monoid.
struct TorsionElement {
  Int a = 0;
  std::size_t t = 0;
  friend auto operator<=>(const TorsionElement&, const TorsionElement&) = default;
};

// "(2,0),(3,1)" or "(3,id),(2,(12))"; "(5)" means (5, identity). Throws kParse.
std::vector<TorsionElement> parse_torsion_elements(std::string_view text, const FiniteMonoid& t);

// A finitely generated submonoid S of N x T for a finite group T, with every
// slice S_t nonempty and some generator of positive first coordinate.
class TorsionSemigroup {
 public:
  // Throws kInvalidArgument for a non-group ambient, a finite S, or an empty
  // slice S_t (the message suggests a smaller T).
  TorsionSemigroup(FiniteGroup group, std::vector<TorsionElement> generators);

  const FiniteGroup& group() const { return group_; }
  const std::vector<TorsionElement>& generators() const { return generators_; }

  TorsionElement op(const TorsionElement& x, const TorsionElement& y) const;
  TorsionElement inverse(const TorsionElement& x) const;

  // Membership in ZS, the subgroup of Z x T generated by S. Uses a Hermite
  // normal form for cyclic-product groups and a finite closure otherwise.
  bool in_difference_group(const TorsionElement& x) const;
  // Always through the closure in Z/c0 x T (c0 a multiple of the period).
  bool in_difference_group_by_closure(const TorsionElement& x) const;
  // (a, e) in ZS iff period divides a.
  Int difference_period() const { return period_; }

  bool contains(const TorsionElement& x) const;
  // x <= y iff x^-1 * y in S, so the up-set of x is x * S (the part a move
  // on x removes). Same as y - x in S when T is abelian.
  bool leq(const TorsionElement& x, const TorsionElement& y) const { return contains(op(inverse(x), y)); }

  // Largest first coordinate of a gap (-1 without gaps); least value with
  // the Frobenius contract.
  Int frobenius() const { return frobenius_; }
  // g_e + max_t m_t, the constructive bound.
  Int frobenius_recipe() const { return recipe_; }
  Int identity_frobenius() const { return g_e_; }
  // m_t = min first coordinate in S_t, by element index.
  const std::vector<Int>& slice_minima() const { return m_t_; }
  // N(S) = (ZS ∩ (N x T)) \ S, sorted.
  const std::vector<TorsionElement>& gaps() const { return gaps_; }

  // (0, t) in S iff t = e.
  bool is_ordered() const;
  // Every (a, u) in ZS with g < a <= g + window is in S.
  bool contract_holds(Int g, Int window) const;

  std::string render(const TorsionElement& x) const;
  std::string to_string() const;

 private:
  void build_table(Int limit);

  FiniteGroup group_;
  std::vector<TorsionElement> generators_;
  std::optional<IntegerLattice> lattice_;
  Int c0_ = 0;
  Int period_ = 0;
  std::vector<bool> closure_;   // Z/c0 x T
  Int limit_ = 0;
  std::vector<bool> member_;    // [a * |T| + t] for 0 <= a <= limit_
  Int g_e_ = -1;
  Int recipe_ = -1;
  Int frobenius_ = -1;
  std::vector<Int> m_t_;
  std::vector<TorsionElement> gaps_;
};

// S \ (x * S) with the order y <= z iff y^-1 * z in S.
struct TorsionApery {
  TorsionElement base;
  std::vector<TorsionElement> elements;  // sorted; front() is (0, e)
  std::vector<std::vector<bool>> below;  // below[i][j] <=> elements[i] <= elements[j]
  std::vector<std::size_t> maximal;      // indices into elements
};

// Throws kInvalidArgument when x is (0, e) or not in S.
TorsionApery apery_torsion(const TorsionSemigroup& s, const TorsionElement& x);
// As a poset with labels "(a,t)"; needs an ordered S.
FinitePoset torsion_apery_poset(const TorsionSemigroup& s, const TorsionElement& x);

std::vector<TorsionElement> maximal_gaps(const TorsionSemigroup& s);

// Exact test for a finite monoid: some (a, e) with a > 0 lies in the
// submonoid generated by `generators`. The witness has least first coordinate.
struct NicelyGenerated {
  bool nicely_generated = false;
  std::optional<TorsionElement> witness;
};
NicelyGenerated is_nicely_generated(const FiniteMonoid& t, const std::vector<TorsionElement>& generators);

// S \ (x * S) restricted to first coordinates <= bound, for any finite
// monoid. `truncated` is set when elements at the bound survive, so the set
// may continue past it.
struct TruncatedApery {
  std::vector<TorsionElement> elements;
  Int bound = 0;
  bool truncated = false;
};
TruncatedApery truncated_apery(const FiniteMonoid& t, const std::vector<TorsionElement>& generators,
                               const TorsionElement& x, Int bound);

struct TorsionSymmetry {
  bool symmetric = false;
  std::optional<TorsionElement> witness;
  bool definitional = false;  // exists x in N with: y in N <=> x - y in S
  bool by_maximum = false;    // N has a maximum under <=_S
};
// Needs abelian T and ordered S (kInvalidArgument). Throws kInternal when the
// two forms disagree.
TorsionSymmetry is_symmetric_torsion(const TorsionSemigroup& s);

// The semigroup {(0,e)} ∪ {(i,s): i>=1} ∪ {(i,st): i>=3} ∪ {(i,u): i>=2, u
// not in {s, st}} for non-commuting s, t, with its two Apery sets whose
// maximal-element counts differ.
struct NoncommutativeWitness {
  std::vector<TorsionElement> generators;
  TorsionElement x, y;  // (2, e) and (1, s)
  TorsionApery apery_x, apery_y;
  std::vector<TorsionElement> expected_apery_x;
  bool apery_x_matches = false;
  std::size_t maximal_x = 0, maximal_y = 0;
  bool facts_hold = false;  // |max Ap_x| >= |T|-1, |Ap_y| = |T|, |max Ap_y| <= |T|-2
};
// Throws kInvalidArgument when s and t commute.
NoncommutativeWitness noncommutative_witness(const FiniteGroup& t, std::size_t s_elem, std::size_t t_elem);

// Least winning first move with first coordinate <= x_max, ordered by first
// coordinate then element index, by exact solves of Ap(S, y). Needs abelian
// T and ordered S.
std::optional<TorsionElement> smallest_winning_move_torsion(const TorsionSemigroup& s, Int x_max,
                                                            SolveLimits limits = {});
// 2^(g |T| 2^n) with g the largest gap coordinate and n = |N(S)|.
BigBound theoretical_bound_torsion(const TorsionSemigroup& s);

struct TorsionClassification {
  Winner winner = Winner::kUnknown;
  std::string rule;  // "symmetric" when decided
};
TorsionClassification classify_torsion(const TorsionSemigroup& s);

}  // namespace semichomp
