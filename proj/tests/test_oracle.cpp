#include <random>

#include "doctest.h"
#include "glpc/decider.hpp"
#include "glpc/oracle.hpp"
#include "glpc/sampling.hpp"

using namespace glpc;

TEST_SUITE("oracle") {

TEST_CASE("gl_valid basics") {
  CHECK(gl_valid(parse_formula("T")));
  CHECK(gl_valid(parse_formula("~<0>F")));
  CHECK_FALSE(gl_valid(parse_formula("<0>T -> <0><0>T")));
  CHECK(gl_valid(parse_formula("<0><0>T -> <0>T")));
  CHECK_THROWS_AS(gl_valid(parse_formula("<1>T")), std::invalid_argument);
}

TEST_CASE("gl_valid agrees with decide on samples") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 500; ++i) {
    const Formula f = random_closed_formula(rng, 0, 5);
    CHECK(gl_valid(f) == decide(f).provable);
  }
}

TEST_CASE("word formulas") {
  CHECK(word_formula(Word{}) == Formula::top());
  CHECK(word_formula(Word{{2, 0}}) ==
        Formula::diamond(2, Formula::diamond(0, Formula::top())));
}

TEST_CASE("fact1 instances") {
  CHECK(fact1_instance(Word{}) == parse_formula("T -> <0>T"));
  CHECK(fact1_instance(Word{{0}}) == parse_formula("<0>T -> <0><0>T"));
  CHECK(fact1_instance(Word{{2, 0}}) == parse_formula("<2><0>T -> <0><2><0>T"));
  CHECK_FALSE(decide(fact1_instance(Word{{0}})).provable);
  CHECK_FALSE(decide(fact1_instance(Word{{2, 0}})).provable);
}

TEST_CASE("generated theorems decide provable") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Formula theorem = theorem_gen(seed, 3, 4);
    CHECK(decide(theorem).provable);
  }
}

TEST_CASE("pinned axiom shapes are provable") {
  CHECK(decide(parse_formula("~<1>~T")).provable);
  CHECK(decide(parse_formula("<2><0>T -> <0><0>T")).provable);
  CHECK(decide(parse_formula("<0>T -> ~<1>~<0>T")).provable);
}

TEST_CASE("lemma schema instances") {
  // <1>(T & <0>T) <-> (<1>T & <0>T)
  CHECK(lemma1_instance(0, 1, Formula::top(), Formula::top(), false) ==
        parse_formula("<1>(T & <0>T) <-> (<1>T & <0>T)"));
  // negated inner conjunct, with a diamond inside xi2
  CHECK(lemma1_instance(0, 2, Formula::top(), Formula::diamond(0, Formula::top()), true) ==
        parse_formula("<2>(T & ~<0><0>T) <-> (<2>T & ~<0><0>T)"));
  // <1><0>T <-> <1>T
  CHECK(lemma3_instance(1, Word{{0}}) == parse_formula("<1><0>T <-> <1>T"));

  CHECK(decide(lemma1_instance(0, 1, Formula::top(), Formula::top(), false)).provable);
  CHECK(decide(lemma3_instance(1, Word{{0}})).provable);
  CHECK(decide(lemma2_instance(0, 1, 0, 1, 1)).provable);

  CHECK_THROWS_AS(lemma1_instance(2, 1, Formula::top(), Formula::top(), false),
                  std::invalid_argument);
  CHECK_THROWS_AS(lemma2_instance(1, 0, 1, 1, 2), std::invalid_argument);  // a < s
  CHECK_THROWS_AS(lemma2_instance(0, 1, 2, 1, 1), std::invalid_argument);  // b >= b2
  CHECK_THROWS_AS(lemma3_instance(1, Word{{1}}), std::invalid_argument);
}

TEST_CASE("exists_successor basics") {
  const Ordinal w = Ordinal::omega();
  const WorldCode full = full_code(1, w);
  CHECK_FALSE(exists_successor(World{{Ordinal()}}, 0, full, 1, w));
  CHECK(exists_successor(World{{Ordinal::natural(5)}}, 0, full, 1, w));

  const Ordinal w2 = Ordinal::omega_tower(2);
  std::mt19937_64 rng(53);
  for (int i = 0; i < 50; ++i) {
    const World sample = random_world(2, w2, rng);
    CHECK_FALSE(exists_successor(sample, 0, emp_s(2, w2), 2, w2));
    CHECK_FALSE(exists_successor(sample, 1, emp_s(2, w2), 2, w2));
  }
}

TEST_CASE("exists_successor agrees with r_inv pointwise") {
  std::mt19937_64 rng(59);
  for (std::size_t n = 1; n <= 3; ++n) {
    const Ordinal bound = Ordinal::omega_tower(static_cast<unsigned>(n));
    for (int i = 0; i < 30; ++i) {
      const WorldCode c = random_code(n, bound, rng);
      for (std::size_t k = 0; k < n; ++k) {
        const WorldCode pre = r_inv(n, k, bound, c);
        for (int s = 0; s < 6; ++s) {
          const World sample = random_world_for_code(n, bound, c, rng);
          CHECK(member(sample, pre, n, bound) == exists_successor(sample, k, c, n, bound));
        }
      }
    }
  }
}

}  // TEST_SUITE
