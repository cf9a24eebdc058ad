#include <random>

#include "doctest.h"
#include "glpc/ordinal.hpp"
#include "glpc/sampling.hpp"

using namespace glpc;

TEST_SUITE("ordinal") {

TEST_CASE("comparison basics") {
  const Ordinal zero;
  const Ordinal one = Ordinal::natural(1);
  const Ordinal w = Ordinal::omega();
  CHECK(zero < one);
  CHECK(w == Ordinal::omega());
  CHECK(w + one < w + w);
  CHECK(one < w);
  CHECK(w < w + one);
}

TEST_CASE("addition drops absorbed terms") {
  const Ordinal one = Ordinal::natural(1);
  const Ordinal w = Ordinal::omega();
  CHECK(one + w == w);
  CHECK(w + one == Ordinal::from_exponents({Ordinal::natural(1), Ordinal()}));
  const Ordinal w2 = Ordinal::omega_pow(Ordinal::natural(2));
  // (w^2 + w) + w^2 = w^2 + w^2
  CHECK((w2 + w) + w2 == Ordinal::from_exponents({Ordinal::natural(2), Ordinal::natural(2)}));
}

TEST_CASE("end_log") {
  CHECK(Ordinal().end_log().is_zero());
  CHECK(Ordinal::natural(5).end_log().is_zero());
  const Ordinal w_to_w = Ordinal::omega_pow(Ordinal::omega());
  CHECK((w_to_w + Ordinal::omega_pow(Ordinal::natural(2))).end_log() == Ordinal::natural(2));
}

TEST_CASE("complexity") {
  CHECK(Ordinal().complexity() == 1);
  CHECK(Ordinal::natural(1).complexity() == 2);
  CHECK(Ordinal::omega().complexity() == 3);
  CHECK(Ordinal::natural(3).complexity() == 4);
}

TEST_CASE("omega towers") {
  CHECK(Ordinal::omega_tower(0) == Ordinal::natural(1));
  CHECK(Ordinal::omega_tower(1) == Ordinal::omega());
  CHECK(Ordinal::omega_tower(2) == Ordinal::omega_pow(Ordinal::omega()));
}

TEST_CASE("from_exponents rejects unsorted sequences") {
  CHECK_THROWS_AS(Ordinal::from_exponents({Ordinal(), Ordinal::natural(1)}),
                  std::invalid_argument);
}

TEST_CASE("interval end_log on pinned cases") {
  const Ordinal w = Ordinal::omega();
  const Ordinal w_to_w = Ordinal::omega_tower(2);
  // [0, w): every member is finite, so end_log values are {0}.
  CHECK(end_log(Interval(Ordinal(), w)) == Ordinal::natural(1));
  // [0, w^w): end_log(w^k) = k is unbounded below w.
  CHECK(end_log(Interval(Ordinal(), w_to_w)) == w);
  // [w+1, w*2): everything in sight is a successor.
  CHECK(end_log(Interval(w + Ordinal::natural(1), w + w)) == Ordinal::natural(1));
  // [0, w+1) reaches w itself, whose end_log is 1.
  CHECK(end_log(Interval(Ordinal(), w + Ordinal::natural(1))) == Ordinal::natural(2));
  CHECK(end_log(Interval(Ordinal::natural(1), Ordinal::natural(2))) == Ordinal::natural(1));
}

TEST_CASE("interval end_log agrees with member enumeration") {
  // Sampled members of [0, w): all end_logs are 0, so the sup of
  // end_log + 1 over the interval is 1.
  const Interval a(Ordinal(), Ordinal::omega());
  Ordinal sup;
  for (std::size_t k = 0; k <= 20; ++k) {
    const Ordinal member = Ordinal::natural(k);
    const Ordinal bumped = member.end_log().successor();
    if (sup < bumped) sup = bumped;
  }
  CHECK(sup == end_log(a));

  // Sampled members w^k of [0, w^w) show end_log is unbounded below w.
  const Interval b(Ordinal(), Ordinal::omega_tower(2));
  const Ordinal limit = end_log(b);
  for (std::size_t k = 0; k <= 6; ++k) {
    const Ordinal member = Ordinal::omega_pow(Ordinal::natural(k));
    CHECK(b.contains(member));
    CHECK(member.end_log() < limit);
    CHECK(member.end_log().successor() < limit);  // never maximal: the sup is a limit
  }
}

TEST_CASE("interval end_log rejects limit lower ends") {
  CHECK_THROWS_AS(end_log(Interval(Ordinal::omega(), Ordinal::omega() + Ordinal::omega())),
                  std::invalid_argument);
}

TEST_CASE("rendering") {
  CHECK(Ordinal().to_string() == "0");
  CHECK(Ordinal::natural(5).to_string() == "5");
  CHECK(Ordinal::omega().to_string() == "w");
  const Ordinal big = Ordinal::omega_pow(Ordinal::omega()) +
                      Ordinal::omega_pow(Ordinal::natural(2)) + Ordinal::natural(1);
  CHECK(big.to_string() == "w^w + w^2 + 1");
  CHECK((Ordinal::omega() + Ordinal::natural(2)).to_string() == "w + 2");
  CHECK(Ordinal::omega_pow(Ordinal::omega() + Ordinal::natural(1)).to_string() == "w^(w + 1)");
}

namespace {
bool canonical(const Ordinal& a) {
  const auto& exps = a.exponents();
  for (std::size_t i = 0; i + 1 < exps.size(); ++i) {
    if (exps[i] < exps[i + 1]) return false;
  }
  for (const Ordinal& e : exps) {
    if (!canonical(e)) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("randomized order and addition properties") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    const Ordinal a = random_cnf_ordinal(rng, 3, 24);
    const Ordinal b = random_cnf_ordinal(rng, 3, 24);
    const Ordinal c = random_cnf_ordinal(rng, 3, 24);
    CHECK(((a < b) + (b < a) + (a == b)) == 1);
    if (a <= b && b <= c) CHECK(a <= c);
    CHECK((a + b) + c == a + (b + c));
    if (b < c) CHECK(a + b < a + c);
    CHECK((a + b).complexity() <= a.complexity() + b.complexity());
    CHECK(canonical(a + b));
    CHECK(canonical(a.successor()));
    CHECK(end_log(Interval(Ordinal(), a + Ordinal::natural(1))).complexity() <=
          (a + Ordinal::natural(1)).complexity());
  }
}

}  // TEST_SUITE
