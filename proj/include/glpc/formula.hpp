#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glpc {

enum class FormulaKind : unsigned char { Top, Bot, Not, And, Or, Implies, Diamond };

/// Immutable AST of closed polymodal formulas. There are no propositional
/// variables: the type cannot represent them and the parser rejects them.
/// Copies share structure; all operations are pure.
class Formula {
 public:
  Formula();  // defaults to Top

  static Formula top();
  static Formula bot();
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula diamond(unsigned index, Formula f);

  FormulaKind kind() const;
  /// Modality index; pre: kind() == Diamond.
  unsigned modality() const;
  /// Operand of Not / Diamond.
  Formula child() const;
  Formula left() const;
  Formula right() const;

  /// Structural equality.
  bool operator==(const Formula& rhs) const;
  std::size_t hash() const;

  /// Fully parenthesized binary connectives, "~" and "<k>" prefixes,
  /// "T" / "F" atoms. Round-trips through parse_formula.
  std::string to_string() const;

  struct Node;  // opaque

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};
struct FormulaEq {
  bool operator()(const Formula& a, const Formula& b) const { return a == b; }
};

/// Thrown on malformed input. closed_fragment_violation() distinguishes the
/// use of propositional variables from ordinary syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position, bool closed_fragment = false)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position),
        closed_fragment_(closed_fragment) {}

  std::size_t position() const { return position_; }
  bool closed_fragment_violation() const { return closed_fragment_; }

 private:
  std::size_t position_;
  bool closed_fragment_;
};

/// Grammar (ASCII, whitespace-insensitive):
///   formula := iff ; iff := impl ("<->" impl)*            (left-assoc, desugared)
///   impl    := or ("->" impl)?                            (right-assoc)
///   or      := and ("|" and)* ; and := unary ("&" unary)*
///   unary   := "~" unary | "<" NAT ">" unary | "[" NAT "]" unary | atom
///   atom    := "T" | "F" | "(" formula ")"
/// "[k]f" desugars to ~<k>~f and "a <-> b" to (a -> b) & (b -> a).
Formula parse_formula(std::string_view text);

/// Size measure: constants count 1, binary connectives |a|+|b|+1, the unary
/// "~" and "<k>" each add 1.
std::size_t formula_size(const Formula& f);

/// Largest diamond index occurring, or nullopt for modality-free formulas.
std::optional<unsigned> max_modality(const Formula& f);

/// Equivalent formula over the {Bot, Not, And, Diamond} basis:
/// T -> ~F, a|b -> ~(~a & ~b), a->b -> ~(a & ~b). No simplification is
/// performed; the result size is at most 3*|f| - 1.
Formula normalize(const Formula& f);

/// Subformulas ordered so that every entry follows all of its strict
/// subformulas; structurally identical subformulas appear once.
std::vector<Formula> subformulas_bottom_up(const Formula& f);

/// (a -> b) & (b -> a); the connective "<->" is not part of the language.
Formula make_iff(Formula a, Formula b);

}  // namespace glpc
