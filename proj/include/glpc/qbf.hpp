#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "glpc/formula.hpp"

namespace glpc {

enum class Quantifier : unsigned char { Exists, ForAll };

enum class BoolKind : unsigned char { Const, Var, Not, And, Or, Implies };

/// Boolean expression over variables x0..x{n-1}, constants, ~, &, |, ->.
class BoolExpr {
 public:
  BoolExpr();  // defaults to the constant true

  static BoolExpr constant(bool value);
  static BoolExpr variable(unsigned index);
  static BoolExpr negation(BoolExpr e);
  static BoolExpr conjunction(BoolExpr a, BoolExpr b);
  static BoolExpr disjunction(BoolExpr a, BoolExpr b);
  static BoolExpr implication(BoolExpr a, BoolExpr b);

  BoolKind kind() const;
  bool value() const;       // pre: Const
  unsigned index() const;   // pre: Var
  BoolExpr child() const;   // pre: Not
  BoolExpr left() const;
  BoolExpr right() const;

  unsigned max_var_index_plus_one() const;
  bool eval(const std::vector<bool>& assignment) const;
  std::string to_string() const;

  struct Node;  // opaque

 private:
  explicit BoolExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Closed quantified Boolean formula in prenex form: the prefix binds
/// x0, ..., x{n-1} in order; every variable in the matrix is bound.
struct Qbf {
  std::vector<Quantifier> prefix;
  BoolExpr matrix;

  std::string to_string() const;  // "E0 A1 : <matrix>"
};

/// Text format: `PREFIX : MATRIX` where PREFIX is whitespace-separated tokens
/// `E0 A1 E2 ...` (indices must run 0..n-1 in order) or empty, and MATRIX uses
/// xN, T, F, ~, &, |, ->, parentheses with the formula grammar's precedence.
Qbf parse_qbf(std::string_view text);

/// Truth value by exhaustive expansion of the quantifier prefix.
bool eval_brute(const Qbf& q);

/// The modal translation: builds eta_0 and psi_0 over modalities
/// <0>..<4n-1> such that the QBF is true iff (eta_0 -> psi_0) & (psi_0 ->
/// eta_0) is provable. With an empty prefix the constant matrix m collapses
/// the result to (m -> m) & (m -> m).
Formula reduce_to_glp(const Qbf& q);

/// true iff eval_brute and the decision procedure agree on the reduction.
bool check_roundtrip(const Qbf& q);

}  // namespace glpc
