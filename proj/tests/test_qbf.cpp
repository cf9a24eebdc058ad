#include "doctest.h"
#include "glpc/decider.hpp"
#include "glpc/qbf.hpp"

using namespace glpc;

TEST_SUITE("qbf") {

TEST_CASE("parsing") {
  const Qbf q = parse_qbf("E0 A1 : (x0 | ~x1)");
  REQUIRE(q.prefix.size() == 2);
  CHECK(q.prefix[0] == Quantifier::Exists);
  CHECK(q.prefix[1] == Quantifier::ForAll);
  CHECK(q.matrix.to_string() == "(x0 | ~x1)");

  const Qbf closed = parse_qbf(": T -> F");
  CHECK(closed.prefix.empty());

  CHECK_THROWS_AS(parse_qbf("E0 A1 : x9"), ParseError);     // unbound variable
  CHECK_THROWS_AS(parse_qbf("E1 : x0"), ParseError);        // indices out of order
  CHECK_THROWS_AS(parse_qbf("E0 x0"), ParseError);          // missing colon
}

TEST_CASE("brute-force evaluation") {
  CHECK(eval_brute(parse_qbf("E0 : x0")));
  CHECK_FALSE(eval_brute(parse_qbf("A0 : x0")));
  // forall x0 exists x1 (x0 <-> x1)
  CHECK(eval_brute(parse_qbf("A0 E1 : (x0 -> x1) & (x1 -> x0)")));
  CHECK_FALSE(eval_brute(parse_qbf("E0 A1 : (x0 -> x1) & (x1 -> x0)")));
}

TEST_CASE("reduction matches the pinned single-variable shapes") {
  // exists x0 . x0
  const Formula exists_case = reduce_to_glp(parse_qbf("E0 : x0"));
  CHECK(exists_case ==
        parse_formula("(<0><3>T -> <0><3><0><1><2>T) & (<0><3><0><1><2>T -> <0><3>T)"));

  // forall x0 . x0: psi_0 = eta_0 & ~<0><3><0>(T & ~theta_0)
  const Formula forall_case = reduce_to_glp(parse_qbf("A0 : x0"));
  CHECK(forall_case == make_iff(parse_formula("<0><3>T"),
                                parse_formula("<0><3>T & ~<0><3><0>(T & ~<1><2>T)")));
}

TEST_CASE("empty prefix collapses to the evaluated matrix") {
  CHECK(reduce_to_glp(parse_qbf(": T")) == parse_formula("(T -> T) & (T -> T)"));
  CHECK(reduce_to_glp(parse_qbf(": T & ~T")) == parse_formula("(T -> F) & (F -> T)"));
}

TEST_CASE("reduction uses modalities up to 4n-1") {
  CHECK(max_modality(reduce_to_glp(parse_qbf("E0 : x0"))) == 3);
  CHECK(max_modality(reduce_to_glp(parse_qbf("E0 A1 : x0 & x1"))) == 7);
  CHECK(max_modality(reduce_to_glp(parse_qbf("A0 E1 A2 : x0 | (x1 & x2)"))) == 11);
}

TEST_CASE("reduction size is linear in the instance") {
  const Qbf small = parse_qbf("E0 A1 : x0 & x1");
  const Qbf large = parse_qbf("E0 A1 : (x0 & x1) | (~x0 & ~x1) | (x0 -> x1)");
  const std::size_t base = formula_size(reduce_to_glp(small));
  const std::size_t grown = formula_size(reduce_to_glp(large));
  CHECK(grown > base);
  CHECK(grown < base + 200);
}

TEST_CASE("round-trips on pinned instances") {
  CHECK(check_roundtrip(parse_qbf("E0 : x0")));
  CHECK(check_roundtrip(parse_qbf("A0 : x0")));
  CHECK(check_roundtrip(parse_qbf("A0 E1 : (x0 -> x1) & (x1 -> x0)")));
  CHECK(check_roundtrip(parse_qbf(": T")));
  CHECK(check_roundtrip(parse_qbf(": F")));
}

TEST_CASE("eta_0 is not equivalent to falsum") {
  for (unsigned n = 1; n <= 2; ++n) {
    const Formula eta0 =
        Formula::diamond(0, Formula::diamond(4 * n - 1, Formula::top()));
    CHECK_FALSE(decide(make_iff(eta0, Formula::bot())).provable);
  }
}

}  // TEST_SUITE
