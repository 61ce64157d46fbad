#pragma once

#include <numeric>
#include <vector>

#include "semichomp/families.hpp"

namespace semichomp::testing {

// Maximal-embedding-dimension semigroups <m, q_1 m + 1, ..., q_(m-1) m + m-1>
// with multiplicity 2 <= m <= max_m and every q_r in [1, max_q].
inline std::vector<NumericalSemigroup> med_corpus(Int max_m, Int max_q) {
  std::vector<NumericalSemigroup> out;
  for (Int m = 2; m <= max_m; ++m) {
    std::vector<Int> q(static_cast<std::size_t>(m - 1), 1);
    while (true) {
      std::vector<Int> gens{m};
      for (Int r = 1; r < m; ++r) gens.push_back(q[static_cast<std::size_t>(r - 1)] * m + r);
      NumericalSemigroup s(gens);
      if (is_max_embedding_dimension(s) && s.multiplicity() == m) out.push_back(std::move(s));
      std::size_t i = 0;
      while (i < q.size() && q[i] == max_q) q[i++] = 1;
      if (i == q.size()) break;
      ++q[i];
    }
  }
  return out;
}

// Generalized arithmetic sequences <a, ha+d, ..., ha+kd>, gcd(a, d) = 1,
// k < a, whose minimal generators are exactly these.
inline std::vector<NumericalSemigroup> arithmetic_corpus(Int max_a, Int max_k, Int max_h, Int max_d) {
  std::vector<NumericalSemigroup> out;
  for (Int a = 2; a <= max_a; ++a)
    for (Int k = 1; k <= std::min(max_k, a - 1); ++k)
      for (Int h = 1; h <= max_h; ++h)
        for (Int d = 1; d <= max_d; ++d) {
          if (std::gcd(a, d) != 1) continue;
          std::vector<Int> gens{a};
          for (Int i = 1; i <= k; ++i) gens.push_back(h * a + i * d);
          NumericalSemigroup s(gens);
          if (s.minimal_generators() != gens) continue;
          out.push_back(std::move(s));
        }
  return out;
}

// Small assorted semigroups for agreement checks between independent paths.
inline std::vector<NumericalSemigroup> small_corpus() {
  return {{2, 3},       {2, 5},        {3, 4},       {3, 5},      {3, 7},       {4, 5},     {4, 6, 7},
          {3, 4, 5},    {4, 5, 6},     {4, 5, 7},    {5, 6, 7},   {5, 7, 9},    {5, 6, 8},  {5, 7, 8},
          {6, 7, 8},    {6, 7, 11},    {6, 7, 16},   {4, 7, 9},   {5, 8, 11},   {7, 8, 9}};
}

}  // namespace semichomp::testing
