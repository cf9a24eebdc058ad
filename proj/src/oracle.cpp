#include "glpc/oracle.hpp"

#include <span>
#include <stdexcept>

namespace glpc {

Formula word_formula(const Word& w) {
  Formula f = Formula::top();
  for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it) {
    f = Formula::diamond(*it, std::move(f));
  }
  return f;
}

// ---------------------------------------------------------------------------
// GL oracle
// ---------------------------------------------------------------------------

namespace {

unsigned modal_depth(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bot:
      return 0;
    case FormulaKind::Not:
      return modal_depth(f.child());
    case FormulaKind::Diamond:
      return modal_depth(f.child()) + 1;
    default:
      return std::max(modal_depth(f.left()), modal_depth(f.right()));
  }
}

bool eval_gl(const Formula& f, unsigned world) {
  switch (f.kind()) {
    case FormulaKind::Top:
      return true;
    case FormulaKind::Bot:
      return false;
    case FormulaKind::Not:
      return !eval_gl(f.child(), world);
    case FormulaKind::And:
      return eval_gl(f.left(), world) && eval_gl(f.right(), world);
    case FormulaKind::Or:
      return eval_gl(f.left(), world) || eval_gl(f.right(), world);
    case FormulaKind::Implies:
      return !eval_gl(f.left(), world) || eval_gl(f.right(), world);
    case FormulaKind::Diamond: {
      for (unsigned j = 0; j < world; ++j) {
        if (eval_gl(f.child(), j)) return true;
      }
      return false;
    }
  }
  return false;  // unreachable
}

}  // namespace

bool gl_valid(const Formula& f) {
  if (const auto mm = max_modality(f); mm && *mm > 0) {
    throw std::invalid_argument("gl_valid: only modality 0 is supported");
  }
  const unsigned depth = modal_depth(f);
  for (unsigned world = 0; world <= depth; ++world) {
    if (!eval_gl(f, world)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Theorem generation
// ---------------------------------------------------------------------------

Formula random_closed_formula(std::mt19937_64& rng, unsigned max_index, unsigned max_depth) {
  std::uniform_int_distribution<int> pick(0, max_depth == 0 ? 1 : 9);
  switch (pick(rng)) {
    case 0:
      return Formula::top();
    case 1:
      return Formula::bot();
    case 2:
    case 3:
      return Formula::negation(random_closed_formula(rng, max_index, max_depth - 1));
    case 4:
      return Formula::conjunction(random_closed_formula(rng, max_index, max_depth - 1),
                                  random_closed_formula(rng, max_index, max_depth - 1));
    case 5:
      return Formula::disjunction(random_closed_formula(rng, max_index, max_depth - 1),
                                  random_closed_formula(rng, max_index, max_depth - 1));
    case 6:
      return Formula::implication(random_closed_formula(rng, max_index, max_depth - 1),
                                  random_closed_formula(rng, max_index, max_depth - 1));
    default: {
      std::uniform_int_distribution<unsigned> index(0, max_index);
      return Formula::diamond(index(rng), random_closed_formula(rng, max_index, max_depth - 1));
    }
  }
}

namespace {

Formula box(unsigned index, Formula f) {
  return Formula::negation(Formula::diamond(index, Formula::negation(std::move(f))));
}

// Closed instances of propositional tautology templates.
Formula tautology_instance(std::mt19937_64& rng, unsigned max_index) {
  const Formula a = random_closed_formula(rng, max_index, 2);
  const Formula b = random_closed_formula(rng, max_index, 2);
  std::uniform_int_distribution<int> pick(0, 9);
  switch (pick(rng)) {
    case 0:
      return Formula::implication(a, a);
    case 1:
      return Formula::implication(a, Formula::implication(b, a));
    case 2:
      return Formula::implication(Formula::conjunction(a, b), a);
    case 3:
      return Formula::implication(Formula::conjunction(a, b), b);
    case 4:
      return Formula::implication(a, Formula::disjunction(a, b));
    case 5:
      return Formula::implication(b, Formula::disjunction(a, b));
    case 6:
      return Formula::implication(Formula::negation(Formula::negation(a)), a);
    case 7:
      return Formula::implication(a, Formula::negation(Formula::negation(a)));
    case 8:
      return Formula::disjunction(a, Formula::negation(a));
    default:
      return Formula::implication(Formula::bot(), a);
  }
}

Formula axiom_instance(std::mt19937_64& rng, unsigned max_index) {
  std::uniform_int_distribution<unsigned> index(0, max_index);
  std::uniform_int_distribution<int> pick(0, 5);
  const unsigned n = index(rng);
  const Formula a = random_closed_formula(rng, max_index, 2);
  switch (pick(rng)) {
    case 0:
      return tautology_instance(rng, max_index);
    case 1: {
      // <n>(A | B) -> (<n>A | <n>B)
      const Formula b = random_closed_formula(rng, max_index, 2);
      return Formula::implication(
          Formula::diamond(n, Formula::disjunction(a, b)),
          Formula::disjunction(Formula::diamond(n, a), Formula::diamond(n, b)));
    }
    case 2:
      // ~<n>~T
      return Formula::negation(Formula::diamond(n, Formula::negation(Formula::top())));
    case 3:
      // <n>A -> <n>(A & ~<n>A)
      return Formula::implication(
          Formula::diamond(n, a),
          Formula::diamond(n, Formula::conjunction(a, Formula::negation(Formula::diamond(n, a)))));
    case 4: {
      // <n>A -> <k>A for k <= n
      std::uniform_int_distribution<unsigned> lower(0, n);
      const unsigned k = lower(rng);
      return Formula::implication(Formula::diamond(n, a), Formula::diamond(k, a));
    }
    default: {
      // <k>A -> ~<n>~<k>A for k < n; degenerates to the k <= n axiom when
      // only one modality is available.
      if (n == 0) {
        return Formula::implication(Formula::diamond(0, a), Formula::diamond(0, a));
      }
      std::uniform_int_distribution<unsigned> lower(0, n - 1);
      const unsigned k = lower(rng);
      return Formula::implication(Formula::diamond(k, a),
                                  Formula::negation(Formula::diamond(n, Formula::negation(
                                                                            Formula::diamond(k, a)))));
    }
  }
}

}  // namespace

Formula theorem_gen(std::uint64_t seed, unsigned max_index, unsigned depth) {
  std::mt19937_64 rng(seed);
  std::vector<Formula> pool;
  pool.push_back(axiom_instance(rng, max_index));
  std::uniform_int_distribution<unsigned> steps_dist(0, depth);
  const unsigned steps = steps_dist(rng);
  std::uniform_int_distribution<int> op(0, 4);
  std::uniform_int_distribution<unsigned> index(0, max_index);
  for (unsigned step = 0; step < steps; ++step) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const Formula& t = pool[pick(rng)];
    switch (op(rng)) {
      case 0:
        // weakening: from T conclude X -> T (detachment against A -> (B -> A))
        pool.push_back(Formula::implication(random_closed_formula(rng, max_index, 2), t));
        break;
      case 1:
        // monotonicity: from A -> B conclude <n>A -> <n>B
        if (t.kind() == FormulaKind::Implies) {
          const unsigned n = index(rng);
          pool.push_back(Formula::implication(Formula::diamond(n, t.left()),
                                              Formula::diamond(n, t.right())));
        } else {
          pool.push_back(axiom_instance(rng, max_index));
        }
        break;
      case 2: {
        // conjunction introduction
        const Formula& s = pool[pick(rng)];
        pool.push_back(Formula::conjunction(t, s));
        break;
      }
      case 3:
        // necessitation (derivable from monotonicity and ~<n>~T)
        pool.push_back(box(index(rng), t));
        break;
      default:
        pool.push_back(axiom_instance(rng, max_index));
        break;
    }
  }
  return pool.back();
}

Formula fact1_instance(const Word& w) {
  Formula alpha = word_formula(w);
  return Formula::implication(alpha, Formula::diamond(0, alpha));
}

Formula lemma1_instance(unsigned s1, unsigned s2, const Formula& xi1, const Formula& xi2,
                        bool negated_inner) {
  if (s1 >= s2) throw std::invalid_argument("lemma1_instance: requires s1 < s2");
  Formula inner = Formula::diamond(s1, xi2);
  if (negated_inner) inner = Formula::negation(std::move(inner));
  return make_iff(Formula::diamond(s2, Formula::conjunction(xi1, inner)),
                  Formula::conjunction(Formula::diamond(s2, xi1), inner));
}

Formula lemma2_instance(unsigned s, unsigned a, unsigned b, unsigned a2, unsigned b2) {
  if (a < s || b < s || a2 < s || b2 < s || !(b < b2) || !(a <= b2)) {
    throw std::invalid_argument("lemma2_instance: side conditions violated");
  }
  const Formula alpha = Formula::diamond(a, Formula::diamond(b, Formula::top()));
  const Formula beta = Formula::diamond(a2, Formula::diamond(b2, Formula::top()));
  return make_iff(
      Formula::diamond(s, Formula::conjunction(alpha, Formula::negation(beta))),
      Formula::diamond(s, alpha));
}

Formula lemma3_instance(unsigned s, const Word& alpha) {
  for (const unsigned i : alpha.indices) {
    if (i >= s) throw std::invalid_argument("lemma3_instance: word must use indices below s");
  }
  return make_iff(Formula::diamond(s, word_formula(alpha)),
                  Formula::diamond(s, Formula::top()));
}

// ---------------------------------------------------------------------------
// Successor search
// ---------------------------------------------------------------------------

namespace {

bool exists_successor_impl(std::span<const Ordinal> coords, std::size_t k, const WorldCode& c,
                           std::size_t n, const Ordinal& bound) {
  if (k == 0) {
    // Any successor under R_0 only needs some member with a smaller first
    // coordinate: cut the code below our head and test emptiness.
    const Ordinal& head = coords[0];
    if (head.is_zero()) return false;
    const WorldCode cut = rstr(n, bound, head, c);
    return !is_emp(n, head, cut);
  }
  const WorldCode::Part* hit = nullptr;
  for (const auto& part : c.parts()) {
    if (part.interval.contains(coords[0])) {
      hit = &part;
      break;
    }
  }
  if (!hit) throw std::invalid_argument("exists_successor: world outside the model bound");
  return exists_successor_impl(coords.subspan(1), k - 1, hit->child, n - 1, hit->child_bound);
}

}  // namespace

bool exists_successor(const World& w, std::size_t k, const WorldCode& c, std::size_t n,
                      const Ordinal& bound) {
  if (k >= n || !valid_world(w, n, bound)) {
    throw std::invalid_argument("exists_successor: level mismatch");
  }
  return exists_successor_impl(std::span<const Ordinal>(w.coords), k, c, n, bound);
}

}  // namespace glpc
