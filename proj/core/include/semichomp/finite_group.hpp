#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semichomp/error.hpp"

namespace semichomp {

// A finite monoid given by its multiplication table. Elements are indices;
// names are used for parsing and printing. Groups built from cyclic factors
// keep the factor list and name elements by residue tuples "r1;r2;...",
// ordered lexicographically.
class FiniteMonoid {
 public:
  // Validates closure, associativity and a two-sided identity.
  FiniteMonoid(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names);

  // Z/m1 x Z/m2 x ...; an empty list is the trivial group.
  static FiniteMonoid cyclic_product(const std::vector<Int>& factors);
  // Permutations of {1,2,3}: id (12) (13) (23) (123) (132), composed right to left.
  static FiniteMonoid symmetric3();
  // {0, ..., n} with i * j = min(i + j, n).
  static FiniteMonoid capped(std::size_t n);

  std::size_t size() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t op(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // Accepts residue tuples ("1;3", reduced mod the factors) for cyclic products.
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool is_group() const { return is_group_; }
  bool is_abelian() const { return is_abelian_; }
  // kInvalidArgument when the monoid is not a group.
  std::size_t inverse(std::size_t i) const;
  std::size_t order(std::size_t i) const;
  // i^k for any integer k (negative k needs a group).
  std::size_t power(std::size_t i, Int k) const;

  // Cyclic factors when built by cyclic_product; empty otherwise (and for the trivial group).
  const std::vector<Int>& factors() const { return factors_; }
  bool has_factor_form() const { return factor_form_; }
  std::vector<Int> residues(std::size_t i) const;

  std::string describe() const;

 private:
  FiniteMonoid() = default;
  void finish();

  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> names_;
  std::size_t identity_ = 0;
  bool is_group_ = false;
  bool is_abelian_ = false;
  std::vector<std::size_t> inverse_;
  std::vector<Int> factors_;
  bool factor_form_ = false;
};

using FiniteGroup = FiniteMonoid;

// Text table: first line the element names, then one row per element giving
// the names of its products with each element in order. '#' starts a comment.
FiniteMonoid read_monoid_table(std::istream& in);

// "Z2", "Z2xZ4", "trivial", "S3", or "table:<path>". Throws kParse.
FiniteMonoid parse_group(std::string_view spec);

}  // namespace semichomp
