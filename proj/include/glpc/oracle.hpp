#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "glpc/formula.hpp"
#include "glpc/setcode.hpp"

namespace glpc {

/// A word <n_0><n_1>...<n_{k-1}>T; the empty word is T.
struct Word {
  std::vector<unsigned> indices;
};

Formula word_formula(const Word& w);

/// Validity oracle for the single-modality fragment (formulas over T, F, ~,
/// &, |, ->, <0> only). Evaluates directly in the model whose worlds are the
/// naturals with <0> looking strictly downwards; a closed formula of modal
/// depth d has constant truth value from world d on, so validity is checked
/// at worlds 0..d. Independent of the code-based decision procedure. Throws
/// when a modality index above 0 occurs.
bool gl_valid(const Formula& f);

/// A provable-by-construction formula: a random closed axiom instance
/// (propositional tautology templates plus the five modal axiom schemata)
/// extended by up to `depth` applications of theoremhood-preserving rules
/// (detachment against a tautology template, monotonicity, conjunction
/// introduction, necessitation).
Formula theorem_gen(std::uint64_t seed, unsigned max_index, unsigned depth);

/// word -> <0>word; never provable.
Formula fact1_instance(const Word& w);

/// <s2>(xi1 & <s1>xi2) <-> (<s2>xi1 & <s1>xi2), or with the inner conjunct
/// negated on both sides when negated_inner is set. Requires s1 < s2.
Formula lemma1_instance(unsigned s1, unsigned s2, const Formula& xi1, const Formula& xi2,
                        bool negated_inner);

/// <s>(alpha & ~beta) <-> <s>alpha for the pre-verified family
/// alpha = <a><b>T, beta = <a2><b2>T with a, b, a2, b2 >= s, b < b2 and
/// a <= b2. Under these side conditions alpha -> beta is underivable by a
/// purely syntactic argument (detachment through the axioms would contradict
/// the word -> <0>word non-theorem), so the instance is provable without
/// consulting the decision procedure.
Formula lemma2_instance(unsigned s, unsigned a, unsigned b, unsigned a2, unsigned b2);

/// <s>alpha <-> <s>T for a word alpha using only indices below s.
Formula lemma3_instance(unsigned s, const Word& alpha);

/// Does w have an R_k-successor inside the set denoted by c over U^n_bound?
/// Decided by structural search (restriction plus emptiness along the code),
/// a route disjoint from the r_inv construction it cross-checks.
bool exists_successor(const World& w, std::size_t k, const WorldCode& c, std::size_t n,
                      const Ordinal& bound);

/// Random closed formula over modalities 0..max_index, at most max_depth
/// connectives deep.
Formula random_closed_formula(std::mt19937_64& rng, unsigned max_index, unsigned max_depth);

}  // namespace glpc
