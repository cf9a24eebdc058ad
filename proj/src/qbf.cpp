#include "glpc/qbf.hpp"

#include <cctype>
#include <stdexcept>

#include "glpc/decider.hpp"

namespace glpc {

struct BoolExpr::Node {
  BoolKind kind;
  unsigned index;  // Var index, or Const value in the low bit
  std::shared_ptr<const Node> first;
  std::shared_ptr<const Node> second;
};

namespace {

using BNodePtr = std::shared_ptr<const BoolExpr::Node>;

BNodePtr make_bnode(BoolKind kind, unsigned index, BNodePtr a, BNodePtr b) {
  return std::make_shared<const BoolExpr::Node>(
      BoolExpr::Node{kind, index, std::move(a), std::move(b)});
}

}  // namespace

BoolExpr::BoolExpr() : node_(make_bnode(BoolKind::Const, 1, nullptr, nullptr)) {}

BoolExpr BoolExpr::constant(bool value) {
  return BoolExpr(make_bnode(BoolKind::Const, value ? 1u : 0u, nullptr, nullptr));
}

BoolExpr BoolExpr::variable(unsigned index) {
  return BoolExpr(make_bnode(BoolKind::Var, index, nullptr, nullptr));
}

BoolExpr BoolExpr::negation(BoolExpr e) {
  return BoolExpr(make_bnode(BoolKind::Not, 0, std::move(e.node_), nullptr));
}

BoolExpr BoolExpr::conjunction(BoolExpr a, BoolExpr b) {
  return BoolExpr(make_bnode(BoolKind::And, 0, std::move(a.node_), std::move(b.node_)));
}

BoolExpr BoolExpr::disjunction(BoolExpr a, BoolExpr b) {
  return BoolExpr(make_bnode(BoolKind::Or, 0, std::move(a.node_), std::move(b.node_)));
}

BoolExpr BoolExpr::implication(BoolExpr a, BoolExpr b) {
  return BoolExpr(make_bnode(BoolKind::Implies, 0, std::move(a.node_), std::move(b.node_)));
}

BoolKind BoolExpr::kind() const { return node_->kind; }

bool BoolExpr::value() const {
  if (node_->kind != BoolKind::Const) throw std::logic_error("BoolExpr::value: not a constant");
  return node_->index != 0;
}

unsigned BoolExpr::index() const {
  if (node_->kind != BoolKind::Var) throw std::logic_error("BoolExpr::index: not a variable");
  return node_->index;
}

BoolExpr BoolExpr::child() const {
  if (node_->kind != BoolKind::Not) throw std::logic_error("BoolExpr::child: not a negation");
  return BoolExpr(node_->first);
}

BoolExpr BoolExpr::left() const {
  if (!node_->second) throw std::logic_error("BoolExpr::left: not a binary node");
  return BoolExpr(node_->first);
}

BoolExpr BoolExpr::right() const {
  if (!node_->second) throw std::logic_error("BoolExpr::right: not a binary node");
  return BoolExpr(node_->second);
}

unsigned BoolExpr::max_var_index_plus_one() const {
  switch (kind()) {
    case BoolKind::Const:
      return 0;
    case BoolKind::Var:
      return index() + 1;
    case BoolKind::Not:
      return child().max_var_index_plus_one();
    default:
      return std::max(left().max_var_index_plus_one(), right().max_var_index_plus_one());
  }
}

bool BoolExpr::eval(const std::vector<bool>& assignment) const {
  switch (kind()) {
    case BoolKind::Const:
      return value();
    case BoolKind::Var:
      return assignment.at(index());
    case BoolKind::Not:
      return !child().eval(assignment);
    case BoolKind::And:
      return left().eval(assignment) && right().eval(assignment);
    case BoolKind::Or:
      return left().eval(assignment) || right().eval(assignment);
    case BoolKind::Implies:
      return !left().eval(assignment) || right().eval(assignment);
  }
  return false;  // unreachable
}

std::string BoolExpr::to_string() const {
  switch (kind()) {
    case BoolKind::Const:
      return value() ? "T" : "F";
    case BoolKind::Var:
      return "x" + std::to_string(index());
    case BoolKind::Not:
      return "~" + child().to_string();
    case BoolKind::And:
      return "(" + left().to_string() + " & " + right().to_string() + ")";
    case BoolKind::Or:
      return "(" + left().to_string() + " | " + right().to_string() + ")";
    case BoolKind::Implies:
      return "(" + left().to_string() + " -> " + right().to_string() + ")";
  }
  return {};  // unreachable
}

std::string Qbf::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i > 0) out += ' ';
    out += prefix[i] == Quantifier::Exists ? 'E' : 'A';
    out += std::to_string(i);
  }
  out += out.empty() ? ": " : " : ";
  out += matrix.to_string();
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class MatrixParser {
 public:
  MatrixParser(std::string_view text, std::size_t offset, unsigned bound_vars)
      : text_(text), offset_(offset), bound_vars_(bound_vars) {}

  BoolExpr run() {
    BoolExpr e = parse_impl();
    skip_ws();
    if (pos_ < text_.size()) throw ParseError("unexpected trailing input", offset_ + pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_arrow() {
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return true;
    }
    return false;
  }

  BoolExpr parse_impl() {
    BoolExpr a = parse_or();
    if (accept_arrow()) return BoolExpr::implication(std::move(a), parse_impl());
    return a;
  }

  BoolExpr parse_or() {
    BoolExpr a = parse_and();
    while (accept('|')) a = BoolExpr::disjunction(std::move(a), parse_and());
    return a;
  }

  BoolExpr parse_and() {
    BoolExpr a = parse_unary();
    while (accept('&')) a = BoolExpr::conjunction(std::move(a), parse_unary());
    return a;
  }

  BoolExpr parse_unary() {
    if (accept('~')) return BoolExpr::negation(parse_unary());
    return parse_atom();
  }

  BoolExpr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected a matrix expression", offset_ + pos_);
    const std::size_t start = pos_;
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      BoolExpr e = parse_impl();
      if (!accept(')')) throw ParseError("expected ')'", offset_ + pos_);
      return e;
    }
    if (ch == 'T') {
      ++pos_;
      return BoolExpr::constant(true);
    }
    if (ch == 'F') {
      ++pos_;
      return BoolExpr::constant(false);
    }
    if (ch == 'x') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("expected variable index after 'x'", offset_ + pos_);
      }
      unsigned long value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (value > 1000000) throw ParseError("variable index too large", offset_ + start);
        ++pos_;
      }
      if (value >= bound_vars_) {
        throw ParseError("unbound variable x" + std::to_string(value), offset_ + start);
      }
      return BoolExpr::variable(static_cast<unsigned>(value));
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", offset_ + start);
  }

  std::string_view text_;
  std::size_t offset_;
  unsigned bound_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Qbf parse_qbf(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("expected ':' between prefix and matrix", text.size());
  }
  Qbf out;
  std::size_t i = 0;
  while (i < colon) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    const char q = text[i];
    if (q != 'E' && q != 'A') {
      throw ParseError("expected quantifier token 'E<k>' or 'A<k>'", start);
    }
    ++i;
    if (i >= colon || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected variable index after quantifier", i);
    }
    unsigned long index = 0;
    while (i < colon && std::isdigit(static_cast<unsigned char>(text[i]))) {
      index = index * 10 + static_cast<unsigned long>(text[i] - '0');
      if (index > 1000000) throw ParseError("variable index too large", start);
      ++i;
    }
    if (index != out.prefix.size()) {
      throw ParseError("prefix must bind x0, x1, ... in order", start);
    }
    out.prefix.push_back(q == 'E' ? Quantifier::Exists : Quantifier::ForAll);
  }
  out.matrix = MatrixParser(text.substr(colon + 1), colon + 1,
                            static_cast<unsigned>(out.prefix.size()))
                   .run();
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation and reduction
// ---------------------------------------------------------------------------

namespace {

bool eval_quantified(const Qbf& q, std::size_t i, std::vector<bool>& assignment) {
  if (i == q.prefix.size()) return q.matrix.eval(assignment);
  assignment[i] = false;
  const bool when_false = eval_quantified(q, i + 1, assignment);
  assignment[i] = true;
  const bool when_true = eval_quantified(q, i + 1, assignment);
  return q.prefix[i] == Quantifier::Exists ? (when_false || when_true)
                                           : (when_false && when_true);
}

Formula substitute(const BoolExpr& e, const std::vector<Formula>& theta) {
  switch (e.kind()) {
    case BoolKind::Const:
      return e.value() ? Formula::top() : Formula::bot();
    case BoolKind::Var:
      return theta.at(e.index());
    case BoolKind::Not:
      return Formula::negation(substitute(e.child(), theta));
    case BoolKind::And:
      return Formula::conjunction(substitute(e.left(), theta), substitute(e.right(), theta));
    case BoolKind::Or:
      return Formula::disjunction(substitute(e.left(), theta), substitute(e.right(), theta));
    case BoolKind::Implies:
      return Formula::implication(substitute(e.left(), theta), substitute(e.right(), theta));
  }
  return Formula::top();  // unreachable
}

}  // namespace

bool eval_brute(const Qbf& q) {
  if (q.matrix.max_var_index_plus_one() > q.prefix.size()) {
    throw std::invalid_argument("eval_brute: matrix mentions an unbound variable");
  }
  std::vector<bool> assignment(q.prefix.size(), false);
  return eval_quantified(q, 0, assignment);
}

Formula reduce_to_glp(const Qbf& q) {
  const unsigned n = static_cast<unsigned>(q.prefix.size());
  if (q.matrix.max_var_index_plus_one() > n) {
    throw std::invalid_argument("reduce_to_glp: matrix mentions an unbound variable");
  }
  if (n == 0) {
    // eta_0 = eta_n = T and psi_0 = psi_n is the constant matrix.
    const Formula m = q.matrix.eval({}) ? Formula::top() : Formula::bot();
    return make_iff(Formula::top(), m);
  }
  // eta_n = T, eta_i = <2i><4n-2i-1>T, theta_i = <2i+1><4n-2i-2>T.
  std::vector<Formula> eta(n + 1, Formula::top());
  std::vector<Formula> theta(n, Formula::top());
  for (unsigned i = 0; i < n; ++i) {
    eta[i] = Formula::diamond(2 * i, Formula::diamond(4 * n - 2 * i - 1, Formula::top()));
    theta[i] = Formula::diamond(2 * i + 1, Formula::diamond(4 * n - 2 * i - 2, Formula::top()));
  }
  Formula psi = substitute(q.matrix, theta);
  for (unsigned step = 0; step < n; ++step) {
    const unsigned i = n - 1 - step;
    auto wrap = [&](Formula inner) {
      return Formula::diamond(
          2 * i, Formula::diamond(4 * n - 2 * i - 1, Formula::diamond(2 * i, std::move(inner))));
    };
    if (q.prefix[i] == Quantifier::Exists) {
      psi = wrap(std::move(psi));
    } else {
      psi = Formula::conjunction(
          eta[i], Formula::negation(wrap(
                      Formula::conjunction(eta[i + 1], Formula::negation(std::move(psi))))));
    }
  }
  return make_iff(eta[0], psi);
}

bool check_roundtrip(const Qbf& q) {
  return eval_brute(q) == decide(reduce_to_glp(q)).provable;
}

}  // namespace glpc
