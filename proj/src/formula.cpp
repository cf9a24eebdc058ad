#include "glpc/formula.hpp"

#include <cctype>
#include <unordered_set>
#include <utility>

namespace glpc {

struct Formula::Node {
  FormulaKind kind;
  unsigned index;
  std::shared_ptr<const Node> first;
  std::shared_ptr<const Node> second;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

using NodePtr = std::shared_ptr<const Formula::Node>;

NodePtr make_node(FormulaKind kind, unsigned index, NodePtr first, NodePtr second) {
  std::size_t h = mix(0x243f6a8885a308d3ull, static_cast<std::size_t>(kind));
  h = mix(h, index);
  h = mix(h, first ? first->hash : 0);
  h = mix(h, second ? second->hash : 0);
  return std::make_shared<const Formula::Node>(
      Formula::Node{kind, index, std::move(first), std::move(second), h});
}

const NodePtr& top_node() {
  static const NodePtr node = make_node(FormulaKind::Top, 0, nullptr, nullptr);
  return node;
}

const NodePtr& bot_node() {
  static const NodePtr node = make_node(FormulaKind::Bot, 0, nullptr, nullptr);
  return node;
}

bool node_equal(const Formula::Node* a, const Formula::Node* b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->index != b->index) return false;
  if ((a->first == nullptr) != (b->first == nullptr)) return false;
  if ((a->second == nullptr) != (b->second == nullptr)) return false;
  if (a->first && !node_equal(a->first.get(), b->first.get())) return false;
  if (a->second && !node_equal(a->second.get(), b->second.get())) return false;
  return true;
}

}  // namespace

Formula::Formula() : node_(top_node()) {}

Formula Formula::top() { return Formula(top_node()); }
Formula Formula::bot() { return Formula(bot_node()); }

Formula Formula::negation(Formula f) {
  return Formula(make_node(FormulaKind::Not, 0, std::move(f.node_), nullptr));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(make_node(FormulaKind::And, 0, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(make_node(FormulaKind::Or, 0, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::implication(Formula a, Formula b) {
  return Formula(make_node(FormulaKind::Implies, 0, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::diamond(unsigned index, Formula f) {
  return Formula(make_node(FormulaKind::Diamond, index, std::move(f.node_), nullptr));
}

FormulaKind Formula::kind() const { return node_->kind; }

unsigned Formula::modality() const {
  if (node_->kind != FormulaKind::Diamond) {
    throw std::logic_error("Formula::modality: not a diamond");
  }
  return node_->index;
}

Formula Formula::child() const {
  if (node_->kind != FormulaKind::Not && node_->kind != FormulaKind::Diamond) {
    throw std::logic_error("Formula::child: not a unary node");
  }
  return Formula(node_->first);
}

Formula Formula::left() const {
  if (!node_->second) throw std::logic_error("Formula::left: not a binary node");
  return Formula(node_->first);
}

Formula Formula::right() const {
  if (!node_->second) throw std::logic_error("Formula::right: not a binary node");
  return Formula(node_->second);
}

bool Formula::operator==(const Formula& rhs) const {
  return node_equal(node_.get(), rhs.node_.get());
}

std::size_t Formula::hash() const { return node_->hash; }

std::string Formula::to_string() const {
  std::string out;
  auto emit = [&out](const Node* n, auto&& self) -> void {
    switch (n->kind) {
      case FormulaKind::Top:
        out += 'T';
        return;
      case FormulaKind::Bot:
        out += 'F';
        return;
      case FormulaKind::Not:
        out += '~';
        self(n->first.get(), self);
        return;
      case FormulaKind::Diamond:
        out += '<';
        out += std::to_string(n->index);
        out += '>';
        self(n->first.get(), self);
        return;
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies: {
        out += '(';
        self(n->first.get(), self);
        out += n->kind == FormulaKind::And ? " & " : n->kind == FormulaKind::Or ? " | " : " -> ";
        self(n->second.get(), self);
        out += ')';
        return;
      }
    }
  };
  emit(node_.get(), emit);
  return out;
}

Formula make_iff(Formula a, Formula b) {
  return Formula::conjunction(Formula::implication(a, b), Formula::implication(b, a));
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum class Kind {
    End,
    Top,
    Bot,
    Tilde,
    Amp,
    Pipe,
    Arrow,
    Iff,
    Diamond,
    Box,
    LParen,
    RParen,
  };
  Kind kind;
  unsigned index = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
        continue;
      }
      const std::size_t start = pos_;
      switch (ch) {
        case 'T':
          out.push_back({Token::Kind::Top, 0, start});
          ++pos_;
          break;
        case 'F':
          out.push_back({Token::Kind::Bot, 0, start});
          ++pos_;
          break;
        case '~':
          out.push_back({Token::Kind::Tilde, 0, start});
          ++pos_;
          break;
        case '&':
          out.push_back({Token::Kind::Amp, 0, start});
          ++pos_;
          break;
        case '|':
          out.push_back({Token::Kind::Pipe, 0, start});
          ++pos_;
          break;
        case '(':
          out.push_back({Token::Kind::LParen, 0, start});
          ++pos_;
          break;
        case ')':
          out.push_back({Token::Kind::RParen, 0, start});
          ++pos_;
          break;
        case '-':
          ++pos_;
          expect('>', "expected '->'");
          out.push_back({Token::Kind::Arrow, 0, start});
          break;
        case '<':
          ++pos_;
          if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
            expect('>', "expected '<->'");
            out.push_back({Token::Kind::Iff, 0, start});
          } else {
            const unsigned index = lex_nat(start);
            expect('>', "expected '>' after modality index");
            out.push_back({Token::Kind::Diamond, index, start});
          }
          break;
        case '[': {
          ++pos_;
          const unsigned index = lex_nat(start);
          expect(']', "expected ']' after modality index");
          out.push_back({Token::Kind::Box, index, start});
          break;
        }
        default:
          if (std::islower(static_cast<unsigned char>(ch))) {
            throw ParseError("propositional variables are not allowed: closed fragment only",
                             start, true);
          }
          throw ParseError(std::string("unexpected character '") + ch + "'", start);
      }
    }
    out.push_back({Token::Kind::End, 0, text_.size()});
    return out;
  }

 private:
  void expect(char ch, const char* message) {
    if (pos_ >= text_.size() || text_[pos_] != ch) throw ParseError(message, pos_);
    ++pos_;
  }

  unsigned lex_nat(std::size_t start) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected modality index", pos_ < text_.size() ? pos_ : start);
    }
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > 1000000) throw ParseError("modality index too large", start);
      ++pos_;
    }
    return static_cast<unsigned>(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().kind != Token::Kind::End) {
      throw ParseError("unexpected trailing input", peek().pos);
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }
  bool accept(Token::Kind kind) {
    if (peek().kind != kind) return false;
    ++index_;
    return true;
  }

  Formula parse_iff() {
    Formula a = parse_impl();
    while (accept(Token::Kind::Iff)) {
      Formula b = parse_impl();
      a = make_iff(a, b);
    }
    return a;
  }

  Formula parse_impl() {
    Formula a = parse_or();
    if (accept(Token::Kind::Arrow)) {
      return Formula::implication(std::move(a), parse_impl());
    }
    return a;
  }

  Formula parse_or() {
    Formula a = parse_and();
    while (accept(Token::Kind::Pipe)) a = Formula::disjunction(std::move(a), parse_and());
    return a;
  }

  Formula parse_and() {
    Formula a = parse_unary();
    while (accept(Token::Kind::Amp)) a = Formula::conjunction(std::move(a), parse_unary());
    return a;
  }

  Formula parse_unary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Kind::Tilde:
        advance();
        return Formula::negation(parse_unary());
      case Token::Kind::Diamond: {
        const unsigned index = advance().index;
        return Formula::diamond(index, parse_unary());
      }
      case Token::Kind::Box: {
        const unsigned index = advance().index;
        return Formula::negation(Formula::diamond(index, Formula::negation(parse_unary())));
      }
      default:
        return parse_atom();
    }
  }

  Formula parse_atom() {
    const Token& tok = advance();
    switch (tok.kind) {
      case Token::Kind::Top:
        return Formula::top();
      case Token::Kind::Bot:
        return Formula::bot();
      case Token::Kind::LParen: {
        Formula f = parse_iff();
        if (!accept(Token::Kind::RParen)) throw ParseError("expected ')'", peek().pos);
        return f;
      }
      default:
        throw ParseError("expected a formula", tok.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(Lexer(text).run()).run(); }

// ---------------------------------------------------------------------------
// Structural measures and normalization
// ---------------------------------------------------------------------------

std::size_t formula_size(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bot:
      return 1;
    case FormulaKind::Not:
    case FormulaKind::Diamond:
      return formula_size(f.child()) + 1;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return formula_size(f.left()) + formula_size(f.right()) + 1;
  }
  return 0;  // unreachable
}

std::optional<unsigned> max_modality(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bot:
      return std::nullopt;
    case FormulaKind::Not:
      return max_modality(f.child());
    case FormulaKind::Diamond: {
      const auto sub = max_modality(f.child());
      return std::max(f.modality(), sub.value_or(0));
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
      const auto a = max_modality(f.left());
      const auto b = max_modality(f.right());
      if (!a) return b;
      if (!b) return a;
      return std::max(*a, *b);
    }
  }
  return std::nullopt;  // unreachable
}

Formula normalize(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Top:
      return Formula::negation(Formula::bot());
    case FormulaKind::Bot:
      return Formula::bot();
    case FormulaKind::Not:
      return Formula::negation(normalize(f.child()));
    case FormulaKind::Diamond:
      return Formula::diamond(f.modality(), normalize(f.child()));
    case FormulaKind::And:
      return Formula::conjunction(normalize(f.left()), normalize(f.right()));
    case FormulaKind::Or:
      // a | b  ==>  ~(~a & ~b)
      return Formula::negation(Formula::conjunction(Formula::negation(normalize(f.left())),
                                                    Formula::negation(normalize(f.right()))));
    case FormulaKind::Implies:
      // a -> b  ==>  ~(a & ~b)
      return Formula::negation(
          Formula::conjunction(normalize(f.left()), Formula::negation(normalize(f.right()))));
  }
  return f;  // unreachable
}

std::vector<Formula> subformulas_bottom_up(const Formula& f) {
  std::vector<Formula> order;
  std::unordered_set<Formula, FormulaHash, FormulaEq> seen;
  auto visit = [&](const Formula& g, auto&& self) -> void {
    if (seen.contains(g)) return;
    switch (g.kind()) {
      case FormulaKind::Top:
      case FormulaKind::Bot:
        break;
      case FormulaKind::Not:
      case FormulaKind::Diamond:
        self(g.child(), self);
        break;
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies:
        self(g.left(), self);
        self(g.right(), self);
        break;
    }
    if (seen.insert(g).second) order.push_back(g);
  };
  visit(f, visit);
  return order;
}

}  // namespace glpc
