#include <doctest.h>

#include <sstream>

#include "common/corpus.hpp"
#include "semichomp/decider.hpp"
#include "semichomp/torsion.hpp"

using namespace semichomp;

namespace {

TorsionSemigroup make(const std::string& group, const std::string& gens) {
  FiniteGroup g = parse_group(group);
  auto elems = parse_torsion_elements(gens, g);
  return TorsionSemigroup(std::move(g), std::move(elems));
}

std::vector<TorsionElement> lift(const std::vector<Int>& xs) {
  std::vector<TorsionElement> out;
  for (Int x : xs) out.push_back({x, 0});
  return out;
}

}  // namespace

TEST_SUITE("torsion") {
  TEST_CASE("groups") {
    const FiniteGroup z = parse_group("Z2xZ4");
    CHECK(z.size() == 8);
    CHECK(z.is_abelian());
    CHECK(z.index_of("1;3").has_value());
    CHECK(z.order(*z.index_of("0;1")) == 4);
    const FiniteGroup s3 = parse_group("S3");
    CHECK_FALSE(s3.is_abelian());
    CHECK(s3.order(*s3.index_of("(123)")) == 3);
    CHECK(s3.op(*s3.index_of("(12)"), *s3.index_of("(12)")) == s3.identity());
    CHECK_THROWS_AS(parse_group("Z2y"), Error);
    std::istringstream capped("a b\na b\nb b\n");
    const FiniteMonoid m = read_monoid_table(capped);
    CHECK_FALSE(m.is_group());
    // (x x) y = x but x (x y) = y.
    std::istringstream skew("e x y\ne x y\nx y x\ny y x\n");
    CHECK_THROWS_AS(read_monoid_table(skew), Error);
    std::istringstream short_row("e x\ne x\nx\n");
    CHECK_THROWS_AS(read_monoid_table(short_row), Error);
  }

  TEST_CASE("integer lattice membership") {
    IntegerLattice l({{4, 2}, {6, 0}}, 2);
    CHECK(l.contains({2, 4}));    // (6,0) - (4,2) + ... = combos
    CHECK(l.contains({0, 6}));
    CHECK_FALSE(l.contains({1, 0}));
    CHECK_FALSE(l.contains({0, 1}));
  }

  TEST_CASE("element parsing") {
    const FiniteGroup s3 = parse_group("S3");
    const auto xs = parse_torsion_elements("(3,id),(2,(12)),(4)", s3);
    REQUIRE(xs.size() == 3);
    CHECK(xs[1].t == *s3.index_of("(12)"));
    CHECK(xs[2].t == s3.identity());
    CHECK_THROWS_AS(parse_torsion_elements("(3,(14))", s3), Error);
  }

  TEST_CASE("frobenius of the S3 semigroup") {
    const TorsionSemigroup s = make("S3", "(3,id),(2,(12)),(4,(123))");
    CHECK(s.difference_period() == 1);
    CHECK(s.identity_frobenius() == 5);
    CHECK(s.frobenius_recipe() == 13);
    CHECK(s.frobenius() == 13);
    CHECK(s.contract_holds(13, 40));
    CHECK_FALSE(s.contract_holds(12, 40));
    CHECK(s.contains({2, *s.group().index_of("(12)")}));
    CHECK(s.contains({6, *s.group().index_of("(23)")}));
    CHECK(s.contains({8, *s.group().index_of("(132)")}));
  }

  TEST_CASE("empty slices are reported") {
    try {
      make("Z6", "(7,2),(4,4)");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("1, 3, 5") != std::string::npos);
    }
  }

  TEST_CASE("nicely generated monoids") {
    const FiniteMonoid t = FiniteMonoid::capped(2);
    const auto gens = parse_torsion_elements("(3,0),(2,1),(3,2)", t);
    const NicelyGenerated ng = is_nicely_generated(t, gens);
    CHECK(ng.nicely_generated);
    CHECK(ng.witness->a == 3);
    const FiniteMonoid c4 = FiniteMonoid::capped(4);
    CHECK_FALSE(is_nicely_generated(c4, parse_torsion_elements("(1,1),(0,4)", c4)).nicely_generated);
    // Ap(S, (2,1)) contains all of <(3,0)>: the truncation never closes.
    CHECK(truncated_apery(t, gens, {2, 1}, 30).truncated);
  }

  TEST_CASE("symmetric Z2 example") {
    const TorsionSemigroup s = make("Z2", "(2,0),(3,1)");
    CHECK(s.is_ordered());
    CHECK(s.gaps().size() == 1);
    const TorsionSymmetry sym = is_symmetric_torsion(s);
    CHECK(sym.symmetric);
    CHECK(sym.definitional);
    CHECK(sym.by_maximum);
    CHECK(classify_torsion(s).winner == Winner::kB);
    CHECK(theoretical_bound_torsion(s).value == mpz_class(16));
  }

  TEST_CASE("non-commutative witness in S3") {
    const FiniteGroup s3 = parse_group("S3");
    const auto w = noncommutative_witness(s3, *s3.index_of("(12)"), *s3.index_of("(123)"));
    CHECK(w.apery_x_matches);
    CHECK(w.maximal_x >= 5);
    CHECK(w.maximal_y <= 4);
    CHECK(w.apery_y.elements.size() == 6);
    CHECK(w.facts_hold);
    CHECK_THROWS_AS(noncommutative_witness(s3, *s3.index_of("(12)"), *s3.index_of("(12)")), Error);
  }

  TEST_CASE("trivial torsion agrees with plain semigroups") {
    for (const auto& ns : testing::small_corpus()) {
      const TorsionSemigroup s(FiniteGroup::cyclic_product({}), lift(ns.minimal_generators()));
      CHECK(s.frobenius() == ns.frobenius());
      std::vector<Int> gaps;
      for (const auto& g : s.gaps()) gaps.push_back(g.a);
      CHECK(gaps == ns.gaps());
      CHECK(is_symmetric_torsion(s).symmetric == is_symmetric(ns));
      for (Int a : ns.elements_between(1, 12)) {
        const TorsionApery ap = apery_torsion(s, {a, 0});
        std::vector<Int> els;
        for (const auto& e : ap.elements) els.push_back(e.a);
        CHECK(els == apery(ns, a).elements);
      }
      if (ns.gap_count() > 0 && ns.gap_count() <= 8) {
        CHECK(theoretical_bound_torsion(s).exponent == theoretical_bound(ns).exponent);
        const auto t = smallest_winning_move_torsion(s, 8);
        const auto p = smallest_winning_move(ns, 8);
        CHECK(t.has_value() == p.has_value());
        if (t && p) CHECK(t->a == *p);
      }
    }
  }
}
