#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semichomp/error.hpp"

namespace semichomp {

// A numerical semigroup <a_1, ..., a_n> after division by gcd(a_i).
// Immutable once constructed; every query is const and thread-safe.
class NumericalSemigroup {
 public:
  // Throws kInvalidInput on an empty list or a non-positive entry.
  explicit NumericalSemigroup(std::span<const Int> generators);
  NumericalSemigroup(std::initializer_list<Int> generators);

  const std::vector<Int>& generators() const { return generators_; }
  const std::vector<Int>& minimal_generators() const { return minimal_generators_; }
  Int multiplicity() const { return minimal_generators_.front(); }
  std::size_t embedding_dimension() const { return minimal_generators_.size(); }
  // -1 when the semigroup is all of N.
  Int frobenius() const { return frobenius_; }
  const std::vector<Int>& gaps() const { return gaps_; }
  std::size_t gap_count() const { return gaps_.size(); }
  Int max_generator() const { return generators_.back(); }
  bool is_naturals() const { return frobenius_ < 0; }

  bool contains(Int x) const {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return membership_[static_cast<std::size_t>(x)];
  }

  // x <=_S y  iff  y - x in S.
  bool leq(Int x, Int y) const { return contains(y - x); }

  // Elements of S in [lo, hi], ascending.
  std::vector<Int> elements_between(Int lo, Int hi) const;

  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.minimal_generators_ == b.minimal_generators_;
  }

 private:
  std::vector<Int> generators_;
  std::vector<Int> minimal_generators_;
  Int frobenius_ = -1;
  std::vector<Int> gaps_;
  std::vector<bool> membership_;  // indices [0, frobenius + max generator]
};

// The Apery set Ap(S, a) = { s in S : s - a not in S } with the induced order.
struct AperySet {
  Int base = 0;
  std::vector<Int> elements;               // ascending; elements.front() == 0
  std::vector<std::vector<bool>> below;    // below[i][j] <=> elements[i] <=_S elements[j]
  std::vector<Int> maximal_elements;       // ascending

  std::size_t size() const { return elements.size(); }
  bool contains(Int v) const;
};

// Throws kInvalidArgument when a is 0 or not in S.
AperySet apery(const NumericalSemigroup& s, Int a);

// Pseudo-Frobenius numbers read off the maximal elements of Ap(S, m).
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);
std::size_t type(const NumericalSemigroup& s);

// type(S) == 1, checked against the definitional x in S xor g - x in S test.
bool is_symmetric(const NumericalSemigroup& s);

// e(S) == m(S), checked against Ap(S, m) == {0} + (minimal generators \ {m}).
bool is_max_embedding_dimension(const NumericalSemigroup& s);

// "6,7,11" -> {6,7,11}. Throws kParse carrying the offending character offset.
std::vector<Int> parse_generators(std::string_view text);

NumericalSemigroup semigroup_from_string(std::string_view text);

// Interval semigroup <a, a+1, ..., a+k>.
NumericalSemigroup interval_semigroup(Int a, Int k);

}  // namespace semichomp
