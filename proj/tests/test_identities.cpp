#include "shellcount/identities.hpp"

#include <doctest.h>

using namespace shellcount;
using namespace shellcount::identities;

TEST_CASE("story identity") {
  const auto integral = verify_story(2, 1, Rat(1), Rat(6));
  CHECK(integral.holds);
  CHECK(integral.lhs.as_rational() == Rat(30));
  CHECK(integral.rhs.as_rational() == Rat(30));

  CHECK(verify_story(1, 1, Rat(3, 2), Rat(9, 2)).holds);
  CHECK(verify_story(3, 2, Rat(5, 2), Rat(11, 2)).holds);  // w - z = x, single-term sum
  CHECK(verify_story(2, 3, Rat(7, 3), Rat(7, 3) + 5).holds);
  CHECK_THROWS(verify_story(2, 1, Rat(1, 2), Rat(2)));
  CHECK_THROWS(verify_story(0, 1, Rat(1), Rat(4)));

  CHECK(verify_story_polynomial(2, 2, 4, Rat(-7, 2)).holds);
  CHECK(verify_story_polynomial(1, 3, 3, Rat(1, 5)).holds);
}

TEST_CASE("binomial-sum lemma") {
  CHECK(verify_binomial_sum(2, 2, 1, 0).holds);
  CHECK(verify_binomial_sum(3, 4, 2, 1).holds);
  CHECK(verify_binomial_sum(6, 5, 4, 0).holds);
  CHECK_THROWS(verify_binomial_sum(2, 2, 2, 0));
  CHECK_THROWS(verify_binomial_sum(2, 2, 1, 3));
}

TEST_CASE("induction lemma") {
  CHECK(verify_induction_lemma(3, 3, 2, 1, 1).holds);
  CHECK(verify_induction_lemma(2, 3, 1, 0, 0).holds);
  CHECK(verify_induction_lemma(4, 5, 3, 2, 3).holds);
  CHECK(verify_induction_lemma_endpoint(3, 4, 2, 1).holds);
  CHECK_THROWS(verify_induction_lemma(3, 3, 2, 1, 3));
}

TEST_CASE("induction theorem") {
  CHECK(verify_induction_theorem(3, 3, 2).holds);
  CHECK(verify_induction_theorem(2, 4, 3).holds);
  CHECK(verify_induction_theorem(4, 4, 1).holds);
  CHECK(induction_theorem_lhs(2, 2).as_rational() == Rat(4));
  CHECK(induction_theorem_lhs(2, 3).as_rational() == Rat(30));
  CHECK_THROWS(verify_induction_theorem(3, 3, 3));
}

TEST_CASE("degree inequalities") {
  CHECK(lemma_a1_check({1, 1}, 3));
  CHECK_FALSE(lemma_a1_check({2, 2}, 3));
  CHECK(lemma_a1_check({1, 1, 1}, 4));
  CHECK_FALSE(lemma_a1_check({1, 2}, 3));
  CHECK_THROWS(lemma_a1_check({2, 1}, 3));
  CHECK_THROWS(lemma_a1_check({1, 1}, 4));

  CHECK(lemma_a2_check(2, 2));
  CHECK(lemma_a2_check(2, 5));
  CHECK(lemma_a2_check(4, 4));
  CHECK_THROWS(lemma_a2_check(3, 2));

  CHECK(lemma_a3_check(2, 4));
  CHECK_FALSE(lemma_a3_check(2, 5));
  CHECK_FALSE(lemma_a3_check(3, 3));
}

TEST_CASE("describe names the identity and its parameters") {
  const auto c = verify_binomial_sum(3, 4, 2, 1);
  const std::string text = c.describe();
  CHECK(text.find(c.name) != std::string::npos);
  CHECK(text.find("m=3") != std::string::npos);
}
