#include <random>

#include "doctest.h"
#include "glpc/formula.hpp"
#include "glpc/oracle.hpp"

using namespace glpc;

TEST_SUITE("formula") {

TEST_CASE("parsing basics") {
  CHECK(parse_formula("<0>T") == Formula::diamond(0, Formula::top()));
  // [1]F desugars to ~<1>~F
  CHECK(parse_formula("[1]F") ==
        Formula::negation(Formula::diamond(1, Formula::negation(Formula::bot()))));
  CHECK(parse_formula(" ~ <10> ( T & F ) ") ==
        Formula::negation(Formula::diamond(
            10, Formula::conjunction(Formula::top(), Formula::bot()))));
}

TEST_CASE("variables are rejected as closed-fragment violations") {
  try {
    parse_formula("x0 & T");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.closed_fragment_violation());
  }
  try {
    parse_formula("<0>T & ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK_FALSE(e.closed_fragment_violation());
  }
}

TEST_CASE("precedence and associativity") {
  // -> binds right: T -> F -> F reads T -> (F -> F)
  CHECK(parse_formula("T -> F -> F") ==
        Formula::implication(Formula::top(),
                             Formula::implication(Formula::bot(), Formula::bot())));
  // & binds tighter than |
  CHECK(parse_formula("T & F | T") ==
        Formula::disjunction(Formula::conjunction(Formula::top(), Formula::bot()),
                             Formula::top()));
  // <-> desugars into both implications
  CHECK(parse_formula("T <-> F") == make_iff(Formula::top(), Formula::bot()));
}

TEST_CASE("size measure") {
  CHECK(formula_size(Formula::top()) == 1);
  CHECK(formula_size(Formula::diamond(0, Formula::top())) == 2);
  CHECK(formula_size(Formula::conjunction(Formula::top(), Formula::bot())) == 3);
  CHECK(formula_size(Formula::negation(Formula::top())) == 2);
}

TEST_CASE("max modality") {
  CHECK(!max_modality(Formula::top()).has_value());
  CHECK(max_modality(Formula::diamond(3, Formula::diamond(0, Formula::top()))) == 3);
  CHECK(max_modality(Formula::negation(Formula::diamond(1, Formula::bot()))) == 1);
}

TEST_CASE("normalization") {
  CHECK(normalize(Formula::top()) == Formula::negation(Formula::bot()));
  CHECK(normalize(Formula::disjunction(Formula::bot(), Formula::bot())) ==
        Formula::negation(Formula::conjunction(Formula::negation(Formula::bot()),
                                               Formula::negation(Formula::bot()))));
  CHECK(normalize(Formula::diamond(0, Formula::top())) ==
        Formula::diamond(0, Formula::negation(Formula::bot())));
}

TEST_CASE("bottom-up subformula order") {
  const Formula not_bot = Formula::negation(Formula::bot());
  auto order = subformulas_bottom_up(not_bot);
  REQUIRE(order.size() == 2);
  CHECK(order[0] == Formula::bot());
  CHECK(order[1] == not_bot);

  // duplicate operands collapse
  const Formula both = Formula::conjunction(Formula::bot(), Formula::bot());
  order = subformulas_bottom_up(both);
  REQUIRE(order.size() == 2);
  CHECK(order[0] == Formula::bot());
  CHECK(order[1] == both);

  const Formula dia = Formula::diamond(0, not_bot);
  order = subformulas_bottom_up(dia);
  REQUIRE(order.size() == 3);
  CHECK(order[0] == Formula::bot());
  CHECK(order[1] == not_bot);
  CHECK(order[2] == dia);
}

TEST_CASE("random round-trip and normalization properties") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_closed_formula(rng, 4, 5);
    CHECK(parse_formula(f.to_string()) == f);
    const Formula norm = normalize(f);
    CHECK(formula_size(norm) <= 3 * formula_size(f) + 2);
    for (const Formula& sub : subformulas_bottom_up(norm)) {
      const auto kind = sub.kind();
      CHECK((kind == FormulaKind::Bot || kind == FormulaKind::Not || kind == FormulaKind::And ||
             kind == FormulaKind::Diamond));
    }
  }
}

}  // TEST_SUITE
