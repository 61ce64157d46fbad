#include "semichomp/lattice.hpp"

#include <cstdlib>
#include <utility>

namespace semichomp {

namespace {

// row_a -= q * row_b
void sub_multiple(std::vector<Int>& a, const std::vector<Int>& b, Int q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < a.size(); ++c) a[c] = checked_add(a[c], -checked_mul(q, b[c]));
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntegerLattice::IntegerLattice(std::vector<std::vector<Int>> rows, std::size_t dimension) : dim_(dimension) {
  for (const auto& r : rows)
    if (r.size() != dim_) fail(ErrorKind::kInvalidArgument, "lattice row has the wrong dimension");
  std::size_t top = 0;
  for (std::size_t col = 0; col < dim_ && top < rows.size(); ++col) {
    // Euclid on column `col` among rows top.. until one nonzero entry remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        sub_multiple(rows[r], rows[top], rows[r][col] / rows[top][col]);
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0)
      for (auto& v : rows[top]) v = -v;
    for (std::size_t r = 0; r < top; ++r) sub_multiple(rows[r], rows[top], floor_div(rows[r][col], rows[top][col]));
    pivots_.push_back(col);
    ++top;
  }
  rows.resize(top);
  basis_ = std::move(rows);
}

bool IntegerLattice::contains(std::vector<Int> v) const {
  if (v.size() != dim_) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    for (std::size_t c = i == 0 ? 0 : pivots_[i - 1] + 1; c < p; ++c)
      if (v[c] != 0) return false;
    if (v[p] % basis_[i][p] != 0) return false;
    sub_multiple(v, basis_[i], v[p] / basis_[i][p]);
  }
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace semichomp
