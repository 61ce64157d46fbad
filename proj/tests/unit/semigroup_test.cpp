#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "common/corpus.hpp"
#include "semichomp/semigroup.hpp"

using namespace semichomp;

namespace {

// Membership by dynamic programming over the generators, up to `limit`.
std::vector<bool> brute_members(const std::vector<Int>& gens, Int limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit + 1), false);
  in[0] = true;
  for (Int x = 1; x <= limit; ++x)
    for (Int a : gens)
      if (x >= a && in[static_cast<std::size_t>(x - a)]) in[static_cast<std::size_t>(x)] = true;
  return in;
}

}  // namespace

TEST_SUITE("semigroup") {
  TEST_CASE("gaps and frobenius of <3,5>") {
    NumericalSemigroup s{3, 5};
    CHECK(s.gaps() == std::vector<Int>{1, 2, 4, 7});
    CHECK(s.frobenius() == 7);
    CHECK(s.multiplicity() == 3);
    CHECK(is_symmetric(s));
  }

  TEST_CASE("two generators: frobenius ab - a - b") {
    for (Int a = 2; a <= 9; ++a)
      for (Int b = a + 1; b <= 15; ++b) {
        if (std::gcd(a, b) != 1) continue;
        NumericalSemigroup s{a, b};
        CHECK(s.frobenius() == a * b - a - b);
        CHECK(s.gap_count() == static_cast<std::size_t>((a - 1) * (b - 1) / 2));
        CHECK(is_symmetric(s));
      }
  }

  TEST_CASE("membership agrees with a dynamic-programming oracle") {
    for (const auto& s : testing::small_corpus()) {
      const Int limit = s.frobenius() + 3 * s.max_generator();
      const auto in = brute_members(s.generators(), limit);
      for (Int x = 0; x <= limit; ++x) CHECK(s.contains(x) == in[static_cast<std::size_t>(x)]);
    }
  }

  TEST_CASE("gcd is divided out and generators are minimized") {
    NumericalSemigroup s{6, 10, 15, 12};
    CHECK(s.minimal_generators() == std::vector<Int>{6, 10, 15});
    NumericalSemigroup t{4, 6, 10};
    CHECK(t.minimal_generators() == std::vector<Int>{2, 3});
  }

  TEST_CASE("Apery sets have one element per residue and their listed order") {
    for (const auto& s : testing::small_corpus())
      for (Int a : s.elements_between(1, 3 * s.multiplicity())) {
        const AperySet ap = apery(s, a);
        CHECK(ap.size() == static_cast<std::size_t>(a));
        std::vector<bool> seen(static_cast<std::size_t>(a), false);
        for (Int w : ap.elements) {
          CHECK(s.contains(w));
          CHECK_FALSE(s.contains(w - a));
          seen[static_cast<std::size_t>(w % a)] = true;
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
        CHECK(ap.maximal_elements.back() == s.frobenius() + a);
      }
  }

  TEST_CASE("Apery set of <3,5> at 8") {
    const AperySet ap = apery(NumericalSemigroup{3, 5}, 8);
    CHECK(ap.elements == std::vector<Int>{0, 3, 5, 6, 9, 10, 12, 15});
    CHECK(ap.maximal_elements == std::vector<Int>{15});
  }

  TEST_CASE("type and pseudo-frobenius") {
    CHECK(pseudo_frobenius(NumericalSemigroup{3, 4, 5}) == std::vector<Int>{1, 2});
    CHECK(type(NumericalSemigroup{6, 7, 11}) >= 1);
    CHECK(type(NumericalSemigroup{4, 5, 7}) == 2);
    CHECK(pseudo_frobenius(NumericalSemigroup{4, 5, 7}) == std::vector<Int>{3, 6});
    CHECK_FALSE(is_symmetric(NumericalSemigroup{4, 5, 7}));
    CHECK(is_symmetric(NumericalSemigroup{4, 5, 6}));
    CHECK(is_symmetric(NumericalSemigroup{4, 5, 6, 7}) == false);
    CHECK(is_max_embedding_dimension(NumericalSemigroup{4, 5, 6, 7}));
    CHECK_FALSE(is_max_embedding_dimension(NumericalSemigroup{4, 5, 6}));
  }

  TEST_CASE("naturals") {
    NumericalSemigroup n{1};
    CHECK(n.is_naturals());
    CHECK(n.frobenius() == -1);
    CHECK(n.gaps().empty());
  }

  TEST_CASE("parse errors carry the offset") {
    CHECK(parse_generators("6,7,11") == std::vector<Int>{6, 7, 11});
    CHECK(parse_generators(" 6, 7 ,11 ") == std::vector<Int>{6, 7, 11});
    try {
      parse_generators("6,x");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kParse);
      CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_generators(""), Error);
    CHECK_THROWS_AS(NumericalSemigroup({0, 3}), Error);
    CHECK_THROWS_AS(apery(NumericalSemigroup{3, 5}, 4), Error);
  }

  TEST_CASE("interval semigroups") {
    CHECK(interval_semigroup(6, 3).minimal_generators() == std::vector<Int>{6, 7, 8, 9});
  }
}
