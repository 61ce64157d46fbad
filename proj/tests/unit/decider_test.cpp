#include <doctest.h>

#include "common/corpus.hpp"
#include "semichomp/decider.hpp"

using namespace semichomp;

TEST_SUITE("decider") {
  TEST_CASE("theoretical bounds") {
    CHECK(theoretical_bound(NumericalSemigroup{2, 3}).value == mpz_class(4));
    CHECK(theoretical_bound(NumericalSemigroup{3, 4, 5}).value == mpz_class(256));
    mpz_class two112;
    mpz_ui_pow_ui(two112.get_mpz_t(), 2, 112);
    CHECK(theoretical_bound(NumericalSemigroup{3, 5}).value == two112);
    CHECK_THROWS_AS(theoretical_bound(NumericalSemigroup{1}), Error);
    // Too large to expand: only the exponent is kept.
    const BigBound huge = theoretical_bound(NumericalSemigroup{11, 24, 26});
    CHECK_FALSE(huge.value.has_value());
  }

  TEST_CASE("codec and poset evaluations agree") {
    for (const auto& s : testing::small_corpus()) {
      if (s.gap_count() > 12) continue;
      for (Int a : s.elements_between(1, 30)) CHECK(is_winning_first_move(s, a) == is_winning_first_move_by_poset(s, a));
    }
  }

  TEST_CASE("smallest winning first moves") {
    CHECK(smallest_winning_move(NumericalSemigroup{6, 7, 11}, 30) == 25);
    CHECK(smallest_winning_move(NumericalSemigroup{6, 7, 16}, 30) == 20);
    CHECK(smallest_winning_move(NumericalSemigroup{3, 4, 5}, 10) == 3);
    CHECK_FALSE(smallest_winning_move(NumericalSemigroup{4, 5}, 40).has_value());
  }

  TEST_CASE("verdicts carry re-verified certificates") {
    const Verdict b = decide_winner(NumericalSemigroup{4, 5});
    CHECK(b.winner == Winner::kB);
    CHECK(b.certificate == CertificateKind::kPeriodicity);
    CHECK(b.verified);
    const Verdict a = decide_winner(NumericalSemigroup{6, 7, 8, 9});
    CHECK(a.winner == Winner::kA);
    CHECK(a.move == 36);
    const Verdict b2 = decide_winner(NumericalSemigroup{4, 5, 6, 7});
    CHECK(b2.winner == Winner::kB);
  }

  TEST_CASE("budget exhaustion is an unknown verdict") {
    DeciderLimits tiny;
    tiny.budget = 50;
    const Verdict v = decide_winner(NumericalSemigroup{7, 8, 9, 10}, tiny);
    CHECK(v.winner == Winner::kUnknown);
    CHECK(v.certificate == CertificateKind::kBudgetExhausted);
  }

  TEST_CASE("winning moves just past the usual search horizons") {
    // The interval table reports B up to 49 and 40 for these; both have a
    // winning first move a little further out.
    const NumericalSemigroup s{7, 8, 9, 10}, t{10, 11, 12, 13};
    CHECK(smallest_winning_move(s, 60) == 50);
    CHECK(smallest_winning_move(t, 60) == 55);
    CHECK(is_winning_first_move_by_poset(s, 50));
    CHECK(is_winning_first_move_by_poset(t, 55));
  }
}
