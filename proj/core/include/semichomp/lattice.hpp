#pragma once

#include <vector>

#include "semichomp/error.hpp"

namespace semichomp {

// Integer lattice spanned by row vectors, stored in row Hermite normal form
// (positive pivots, entries above each pivot reduced into [0, pivot)).
class IntegerLattice {
 public:
  IntegerLattice(std::vector<std::vector<Int>> rows, std::size_t dimension);

  std::size_t dimension() const { return dim_; }
  const std::vector<std::vector<Int>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool contains(std::vector<Int> v) const;

 private:
  std::size_t dim_;
  std::vector<std::vector<Int>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace semichomp
