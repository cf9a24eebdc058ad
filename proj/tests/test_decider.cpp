#include <random>

#include "doctest.h"
#include "glpc/decider.hpp"
#include "glpc/oracle.hpp"

using namespace glpc;

TEST_SUITE("decider") {

TEST_CASE("pinned verdicts") {
  CHECK(decide(parse_formula("~<0>~T")).provable);
  CHECK(decide(parse_formula("<1>T -> <0>T")).provable);
  CHECK(decide(parse_formula("<1><0>T <-> <1>T")).provable);

  const Verdict gl_threshold = decide(parse_formula("<0>T -> <0><0>T"));
  CHECK_FALSE(gl_threshold.provable);
  REQUIRE(gl_threshold.witness.has_value());
  CHECK(gl_threshold.witness->to_string() == "(1)");

  const Verdict falsum = decide(parse_formula("F"));
  CHECK_FALSE(falsum.provable);
  REQUIRE(falsum.witness.has_value());
  CHECK(falsum.witness->to_string() == "()");
  CHECK(falsum.stats.level == 0);
}

TEST_CASE("eval_at") {
  const Formula f = parse_formula("<0>T");
  CHECK(eval_at(parse_formula("T"), World{}));
  CHECK(eval_at(parse_formula("T | <0>T"), World{{Ordinal::natural(2)}}));
  CHECK_FALSE(eval_at(f, World{{Ordinal()}}));
  CHECK(eval_at(f, World{{Ordinal::natural(3)}}));
  // wrong arity
  CHECK_THROWS_AS(eval_at(f, World{}), std::invalid_argument);
}

TEST_CASE("witness falsifies the formula") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const Formula f = random_closed_formula(rng, 2, 4);
    const Verdict verdict = decide(f);
    if (!verdict.provable) {
      REQUIRE(verdict.witness.has_value());
      CHECK(valid_world(*verdict.witness, verdict.stats.level,
                        Ordinal::omega_tower(verdict.stats.level)));
      CHECK_FALSE(eval_at(f, *verdict.witness));
    }
  }
}

TEST_CASE("verdicts are stable under model padding") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const Formula f = random_closed_formula(rng, 2, 4);
    const auto mm = max_modality(f);
    const unsigned level = mm ? *mm + 1 : 0;
    const bool base = decide(f).provable;
    CHECK(decide_at_level(f, level + 1).provable == base);
    CHECK(decide_at_level(f, level + 3).provable == base);
  }
}

TEST_CASE("deciding the normalized formula agrees") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const Formula f = random_closed_formula(rng, 2, 4);
    CHECK(decide(f).provable == decide(normalize(f)).provable);
  }
}

TEST_CASE("per-subformula measure bounds hold") {
  const auto violations_before = MeasureAudit::subformula_violations.load();
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    decide(random_closed_formula(rng, 3, 5));
  }
  CHECK(MeasureAudit::subformula_violations.load() == violations_before);
}

TEST_CASE("level too small is rejected") {
  CHECK_THROWS_AS(decide_at_level(parse_formula("<2>T"), 1), std::invalid_argument);
}

TEST_CASE("decide is deterministic") {
  const Formula f = parse_formula("<1>(T & ~<0>T) -> <0><0>T");
  const Verdict first = decide(f);
  const Verdict second = decide(f);
  CHECK(first.provable == second.provable);
  CHECK(first.witness.has_value() == second.witness.has_value());
  if (first.witness) CHECK(*first.witness == *second.witness);
  CHECK(first.stats.max_width == second.stats.max_width);
  CHECK(first.stats.max_ord_cost == second.stats.max_ord_cost);
}

TEST_CASE("trace rows cover every distinct subformula") {
  const Verdict verdict = decide(parse_formula("<0>T -> <0><0>T"), true);
  // normalized: ~(<0>~F & ~<0><0>~F) has 7 distinct subformulas
  CHECK(verdict.trace.size() == 7);
  for (const auto& row : verdict.trace) {
    CHECK(row.width <= row.size);
    CHECK(row.ord_cost <= 2 * row.size);  // (level + 1) * |psi| at level 1
  }
}

}  // TEST_SUITE
