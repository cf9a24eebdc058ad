#include "glpc/selftest.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "glpc/decider.hpp"
#include "glpc/formula.hpp"
#include "glpc/oracle.hpp"
#include "glpc/qbf.hpp"
#include "glpc/sampling.hpp"
#include "glpc/setcode.hpp"

namespace glpc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// ordinal: total order, addition laws, end_log coverage on random normal forms
// ---------------------------------------------------------------------------

SuiteReport ordinal_suite(std::uint64_t seed) {
  SuiteReport report{"ordinal"};
  std::mt19937_64 rng(seed);
  auto check = [&report](bool ok) {
    ++report.checks;
    if (!ok) ++report.failures;
  };
  std::vector<Ordinal> pool;
  pool.reserve(10000);
  for (int i = 0; i < 10000; ++i) {
    pool.push_back(random_cnf_ordinal(rng, 3, 40));
    check(pool.back().complexity() <= 40);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

  for (int i = 0; i < 10000; ++i) {
    const Ordinal& a = pool[pick(rng)];
    const Ordinal& b = pool[pick(rng)];
    const Ordinal& c = pool[pick(rng)];
    // Total order: antisymmetry, transitivity, equality = structural equality.
    check((a < b) + (b < a) + (a == b) == 1);
    if (a <= b && b <= c) check(a <= c);
    check((a == b) == (a.exponents() == b.exponents()));
    // Addition: associativity, strict right monotonicity, c subadditivity.
    check((a + b) + c == a + (b + c));
    if (b < c) check(a + b < a + c);
    check((a + b).complexity() <= a.complexity() + b.complexity());
  }

  // end_log coverage: members stay below end_log(A) and every smaller value
  // is attained inside A.
  for (int i = 0; i < 50; ++i) {
    Ordinal lo = random_cnf_ordinal(rng, 2, 10);
    if (!lo.end_log().is_zero()) lo = lo.successor();
    Ordinal span = random_cnf_ordinal(rng, 2, 20);
    if (span.is_zero()) span = Ordinal::natural(1);
    const Interval interval(lo, lo + span);
    const Ordinal limit = end_log(interval);
    check(limit.complexity() <= interval.hi.complexity());
    for (int s = 0; s < 200; ++s) {
      const Ordinal member = interval.lo + random_ordinal_below(span, rng);
      check(interval.contains(member));
      check(member.end_log() < limit);
    }
    for (int s = 0; s < 20; ++s) {
      const Ordinal delta = random_ordinal_below(limit, rng);
      const Ordinal gamma =
          delta.is_zero() ? interval.lo : interval.lo + Ordinal::omega_pow(delta);
      check(interval.contains(gamma));
      check(gamma.end_log() == delta);
    }
  }
  report.detail = std::to_string(report.checks) + " checks";
  return report;
}

// ---------------------------------------------------------------------------
// setcode: pointwise laws for cmpl/intr/rstr and r_inv vs successor search
// ---------------------------------------------------------------------------

SuiteReport setcode_suite(std::uint64_t seed) {
  SuiteReport report{"setcode"};
  std::mt19937_64 rng(seed);
  auto check = [&report](bool ok) {
    ++report.checks;
    if (!ok) ++report.failures;
  };

  for (std::size_t n = 1; n <= 3; ++n) {
    const Ordinal bound = Ordinal::omega_tower(static_cast<unsigned>(n));
    constexpr int kCodes = 60;
    constexpr int kSamples = 10;  // 600 sampled pairs per operation and level
    for (int rep = 0; rep < kCodes; ++rep) {
      const WorldCode c1 = random_code(n, bound, rng);
      const WorldCode c2 = random_code(n, bound, rng);
      const WorldCode complement = cmpl(n, bound, c1);
      const WorldCode intersection = intr(n, bound, c1, c2);
      Ordinal cut = random_ordinal_below(bound, rng).successor();
      const WorldCode restricted = rstr(n, bound, cut, c1);
      std::vector<WorldCode> preimages;
      for (std::size_t k = 0; k < n; ++k) preimages.push_back(r_inv(n, k, bound, c1));

      for (int s = 0; s < kSamples; ++s) {
        const World w = random_world_for_code(n, bound, c1, rng);
        check(member(w, complement, n, bound) == !member(w, c1, n, bound));
        check(member(w, intersection, n, bound) ==
              (member(w, c1, n, bound) && member(w, c2, n, bound)));
        if (w.coords[0] < cut) {
          check(member(w, restricted, n, cut) == member(w, c1, n, bound));
        } else {
          ++report.checks;  // sample outside the restriction; nothing to compare
        }
        for (std::size_t k = 0; k < n; ++k) {
          check(member(w, preimages[k], n, bound) == exists_successor(w, k, c1, n, bound));
        }
      }
      // is_emp soundness against witnesses.
      const auto witness = find_witness(n, bound, c1);
      check(is_emp(n, bound, c1) == !witness.has_value());
      if (witness) {
        check(member(*witness, c1, n, bound));
        check(witness->coords[0] == inf_first(n, bound, c1));
      }
      // Well-formedness closure of every produced code.
      try {
        validate_code(n, bound, complement);
        validate_code(n, bound, intersection);
        validate_code(n, cut, restricted);
        for (std::size_t k = 0; k < n; ++k) validate_code(n, bound, preimages[k]);
        ++report.checks;
      } catch (const std::invalid_argument&) {
        ++report.checks;
        ++report.failures;
      }
    }
  }
  report.detail = std::to_string(report.checks) + " checks";
  return report;
}

// ---------------------------------------------------------------------------
// gl-agreement: exhaustive comparison with the direct GL evaluation
// ---------------------------------------------------------------------------

SuiteReport gl_agreement_suite(std::uint64_t) {
  SuiteReport report{"gl-agreement"};
  // All closed formulas over T, F, ~, &, <0> of size <= 9.
  constexpr std::size_t kMaxSize = 9;
  std::vector<std::vector<Formula>> by_size(kMaxSize + 1);
  by_size[1] = {Formula::top(), Formula::bot()};
  for (std::size_t size = 2; size <= kMaxSize; ++size) {
    for (const Formula& f : by_size[size - 1]) {
      by_size[size].push_back(Formula::negation(f));
      by_size[size].push_back(Formula::diamond(0, f));
    }
    for (std::size_t left = 1; left + 2 <= size; ++left) {
      for (const Formula& a : by_size[left]) {
        for (const Formula& b : by_size[size - 1 - left]) {
          by_size[size].push_back(Formula::conjunction(a, b));
        }
      }
    }
  }
  for (std::size_t size = 1; size <= kMaxSize; ++size) {
    for (const Formula& f : by_size[size]) {
      ++report.checks;
      if (decide(f).provable != gl_valid(f)) ++report.failures;
    }
  }
  report.detail = std::to_string(report.checks - report.failures) + "/" +
                  std::to_string(report.checks) + " agree";
  return report;
}

// ---------------------------------------------------------------------------
// axioms: generated theorems decide provable
// ---------------------------------------------------------------------------

SuiteReport axioms_suite(std::uint64_t seed) {
  SuiteReport report{"axioms"};
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const Formula theorem = theorem_gen(seed + i, 3, 4);
    ++report.checks;
    if (!decide(theorem).provable) ++report.failures;
  }
  report.detail = std::to_string(report.checks - report.failures) + "/" +
                  std::to_string(report.checks) + " provable";
  return report;
}

// ---------------------------------------------------------------------------
// fact1: word -> <0>word is never provable (exhaustive small words)
// ---------------------------------------------------------------------------

SuiteReport fact1_suite(std::uint64_t) {
  SuiteReport report{"fact1"};
  // All 3^0 + ... + 3^5 = 364 words of length <= 5 over indices {0, 1, 2}.
  std::vector<Word> words{Word{}};
  std::vector<Word> frontier = words;
  for (std::size_t length = 1; length <= 5; ++length) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (unsigned i = 0; i <= 2; ++i) {
        Word extended = w;
        extended.indices.push_back(i);
        next.push_back(std::move(extended));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (const Word& w : words) {
    ++report.checks;
    if (decide(fact1_instance(w)).provable) ++report.failures;
  }
  report.detail = std::to_string(report.checks - report.failures) + "/" +
                  std::to_string(report.checks) + " rejected";
  return report;
}

// ---------------------------------------------------------------------------
// schemas: randomized provable instances of the three lemma schemata
// ---------------------------------------------------------------------------

SuiteReport schemas_suite(std::uint64_t seed) {
  SuiteReport report{"schemas"};
  std::mt19937_64 rng(seed);
  auto check_provable = [&report](const Formula& f) {
    ++report.checks;
    if (!decide(f).provable) ++report.failures;
  };
  std::uniform_int_distribution<unsigned> s2_dist(1, 4);
  std::uniform_int_distribution<unsigned> small(0, 2);
  for (int i = 0; i < 200; ++i) {
    // Lemma 1, plain and negated inner conjunct.
    const unsigned s2 = s2_dist(rng);
    std::uniform_int_distribution<unsigned> s1_dist(0, s2 - 1);
    const unsigned s1 = s1_dist(rng);
    const Formula xi1 = random_closed_formula(rng, 3, 2);
    const Formula xi2 = random_closed_formula(rng, 3, 2);
    check_provable(lemma1_instance(s1, s2, xi1, xi2, false));
    check_provable(lemma1_instance(s1, s2, xi1, xi2, true));

    // Lemma 2 on the pre-verified two-diamond family.
    const unsigned s = small(rng);
    const unsigned a = s + small(rng);
    const unsigned b = s + small(rng);
    const unsigned b2 = std::max(b + 1, a) + small(rng) % 2;
    const unsigned a2 = s + small(rng);
    check_provable(lemma2_instance(s, a, b, a2, b2));

    // Lemma 3.
    const unsigned s3 = s2_dist(rng);
    Word alpha;
    std::uniform_int_distribution<unsigned> len(0, 3);
    std::uniform_int_distribution<unsigned> below(0, s3 - 1);
    const unsigned length = len(rng);
    for (unsigned j = 0; j < length; ++j) alpha.indices.push_back(below(rng));
    check_provable(lemma3_instance(s3, alpha));
  }
  report.detail = std::to_string(report.checks - report.failures) + "/" +
                  std::to_string(report.checks) + " provable";
  return report;
}

// ---------------------------------------------------------------------------
// qbf-roundtrip: brute-force truth matches provability of the reduction
// ---------------------------------------------------------------------------

BoolExpr minterm_matrix(unsigned truth_table, unsigned vars) {
  // Disjunction of the minterms where the table bit is set; empty -> F.
  BoolExpr out = BoolExpr::constant(false);
  bool any = false;
  for (unsigned row = 0; row < (1u << vars); ++row) {
    if (((truth_table >> row) & 1u) == 0) continue;
    BoolExpr term = BoolExpr::constant(true);
    bool started = false;
    for (unsigned v = 0; v < vars; ++v) {
      BoolExpr literal = BoolExpr::variable(v);
      if (((row >> v) & 1u) == 0) literal = BoolExpr::negation(std::move(literal));
      term = started ? BoolExpr::conjunction(std::move(term), std::move(literal))
                     : std::move(literal);
      started = true;
    }
    out = any ? BoolExpr::disjunction(std::move(out), std::move(term)) : std::move(term);
    any = true;
  }
  return out;
}

BoolExpr random_matrix(std::mt19937_64& rng, unsigned vars, unsigned depth) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 1 : 7);
  std::uniform_int_distribution<unsigned> var(0, vars - 1);
  switch (pick(rng)) {
    case 0:
      return BoolExpr::variable(var(rng));
    case 1:
      return BoolExpr::constant(var(rng) % 2 == 0);
    case 2:
    case 3:
      return BoolExpr::negation(random_matrix(rng, vars, depth - 1));
    case 4:
      return BoolExpr::conjunction(random_matrix(rng, vars, depth - 1),
                                   random_matrix(rng, vars, depth - 1));
    case 5:
      return BoolExpr::disjunction(random_matrix(rng, vars, depth - 1),
                                   random_matrix(rng, vars, depth - 1));
    default:
      return BoolExpr::implication(random_matrix(rng, vars, depth - 1),
                                   random_matrix(rng, vars, depth - 1));
  }
}

SuiteReport qbf_roundtrip_suite(std::uint64_t seed) {
  SuiteReport report{"qbf-roundtrip"};
  std::mt19937_64 rng(seed);
  auto run_case = [&report](const Qbf& q) {
    const auto start = Clock::now();
    ++report.checks;
    if (!check_roundtrip(q)) ++report.failures;
    report.max_case_millis = std::max(report.max_case_millis, elapsed_ms(start));
  };

  // Exhaustive: every 2-variable prefix against every binary truth table.
  for (unsigned pattern = 0; pattern < 4; ++pattern) {
    for (unsigned table = 0; table < 16; ++table) {
      Qbf q;
      q.prefix = {pattern & 1 ? Quantifier::ForAll : Quantifier::Exists,
                  pattern & 2 ? Quantifier::ForAll : Quantifier::Exists};
      q.matrix = minterm_matrix(table, 2);
      run_case(q);
    }
  }
  // Randomized 3-variable instances (modal level 12).
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 50; ++i) {
    Qbf q;
    for (int v = 0; v < 3; ++v) {
      q.prefix.push_back(coin(rng) ? Quantifier::ForAll : Quantifier::Exists);
    }
    q.matrix = random_matrix(rng, 3, 4);
    run_case(q);
  }
  report.detail = std::to_string(report.checks - report.failures) + "/" +
                  std::to_string(report.checks) + " round-trips";
  return report;
}

using SuiteFn = SuiteReport (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"ordinal", ordinal_suite},
      {"setcode", setcode_suite},
      {"gl-agreement", gl_agreement_suite},
      {"axioms", axioms_suite},
      {"fact1", fact1_suite},
      {"schemas", schemas_suite},
      {"qbf-roundtrip", qbf_roundtrip_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& [suite_name, fn] : suite_table()) {
    if (suite_name == name) {
      const auto start = Clock::now();
      SuiteReport report = fn(seed);
      report.millis = elapsed_ms(start);
      return report;
    }
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_all_suites(std::uint64_t seed) {
  std::vector<SuiteReport> out;
  for (const auto& [name, fn] : suite_table()) out.push_back(run_suite(name, seed));
  return out;
}

}  // namespace glpc
