#pragma once

// The three-layer deontic language.
//
// Layer 0 is classical propositional logic over a declared vocabulary of
// atoms. Layer 1 adds the dyadic operator oblige(psi1 | psi2), layer 2 the
// test operators ideal(psi1 | psi2) and ideal*(psi1 | psi2). Operator
// arguments are always plain propositional formulas; the language has no
// nesting of deontic operators.
//
// Concrete syntax (lowest to highest precedence, `->` right-associative,
// the other binary connectives left-associative):
//
//   formula  := iff
//   iff      := imp ("<->" imp)*
//   imp      := or ("->" or)*
//   or       := and ("|" and)*
//   and      := unary ("&" unary)*
//   unary    := "~" unary | atom | "true" | "false" | "(" formula ")"
//   sentence := formula | op "(" formula ["given" formula] ")"
//   op       := "oblige" | "ideal" | "ideal*"
//   atom     := [a-z_][a-z0-9_]*
//
// The conditional separator is the keyword `given` so that `|` stays free
// for disjunction; `oblige(x)` is shorthand for `oblige(x given true)`.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "deon/errors.hpp"
#include "deon/worlds.hpp"

namespace deon {

// Exact reasoning enumerates all 2^n worlds; this is the default ceiling
// for n, overridable where a cap parameter is exposed.
inline constexpr std::size_t kDefaultMaxAtoms = 20;

// ── Vocabulary ──────────────────────────────────────────────────────────

// The ordered atom list. The order is fixed for the lifetime of a run and
// determines world indexing: bit i of a world index is the value of
// atoms()[i].
class Vocabulary {
 public:
  explicit Vocabulary(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw Error("vocabulary must declare at least one atom");
    if (atoms_.size() > 32)
      throw VocabularyTooLargeError("vocabulary exceeds the implementation limit of 32 atoms");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      const std::string& a = atoms_[i];
      if (!valid_atom_name(a)) throw Error("invalid atom name '" + a + "'");
      if (is_reserved_word(a)) throw Error("atom name '" + a + "' is a reserved word");
      if (index_.count(a)) throw Error("duplicate atom '" + a + "'");
      index_.emplace(a, i);
    }
  }

  std::size_t size() const noexcept { return atoms_.size(); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::string& name(std::size_t i) const { return atoms_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t world_count() const noexcept { return std::size_t{1} << atoms_.size(); }

  static bool valid_atom_name(std::string_view s) {
    if (s.empty()) return false;
    auto head = [](char c) { return (c >= 'a' && c <= 'z') || c == '_'; };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (!head(s[0])) return false;
    for (char c : s.substr(1))
      if (!tail(c)) return false;
    return true;
  }

  static bool is_reserved_word(std::string_view s) {
    return s == "true" || s == "false" || s == "given" || s == "oblige" || s == "ideal";
  }

  bool operator==(const Vocabulary& o) const { return atoms_ == o.atoms_; }

 private:
  std::vector<std::string> atoms_;
  std::unordered_map<std::string, std::size_t> index_;
};

// ── Prop ────────────────────────────────────────────────────────────────

// An immutable propositional formula. Copies share structure.
class Prop {
 public:
  enum class Kind : std::uint8_t { True, False, Atom, Not, And, Or, Implies, Iff };

  static Prop top() { return Prop(make(Kind::True)); }
  static Prop bottom() { return Prop(make(Kind::False)); }

  static Prop atom(std::size_t index, std::string name) {
    auto n = make(Kind::Atom);
    n->atom_index = index;
    n->atom_name = std::move(name);
    return Prop(std::move(n));
  }

  static Prop atom(const Vocabulary& vocab, std::string_view name) {
    auto i = vocab.index_of(name);
    if (!i) throw UnknownAtomError("unknown atom '" + std::string(name) + "'", 0);
    return atom(*i, std::string(name));
  }

  static Prop negation(Prop operand) { return unary(Kind::Not, std::move(operand)); }
  static Prop conjunction(Prop l, Prop r) { return binary(Kind::And, std::move(l), std::move(r)); }
  static Prop disjunction(Prop l, Prop r) { return binary(Kind::Or, std::move(l), std::move(r)); }
  static Prop implication(Prop l, Prop r) { return binary(Kind::Implies, std::move(l), std::move(r)); }
  static Prop biconditional(Prop l, Prop r) { return binary(Kind::Iff, std::move(l), std::move(r)); }

  Kind kind() const noexcept { return node_->kind; }
  std::size_t atom_index() const { return node_->atom_index; }
  const std::string& atom_name() const { return node_->atom_name; }
  Prop lhs() const { return Prop(node_->lhs); }
  Prop rhs() const { return Prop(node_->rhs); }

  bool operator==(const Prop& o) const { return equal(node_.get(), o.node_.get()); }

 private:
  struct Node {
    Kind kind;
    std::size_t atom_index = 0;
    std::string atom_name;
    std::shared_ptr<const Node> lhs, rhs;
  };

  explicit Prop(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<Node> make(Kind k) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    return n;
  }

  static Prop unary(Kind k, Prop a) {
    auto n = make(k);
    n->lhs = a.node_;
    return Prop(std::move(n));
  }

  static Prop binary(Kind k, Prop a, Prop b) {
    auto n = make(k);
    n->lhs = a.node_;
    n->rhs = b.node_;
    return Prop(std::move(n));
  }

  static bool equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    if (a->kind == Kind::Atom) return a->atom_index == b->atom_index;
    return equal(a->lhs.get(), b->lhs.get()) && equal(a->rhs.get(), b->rhs.get());
  }

  std::shared_ptr<const Node> node_;
};

// ── Sentence ────────────────────────────────────────────────────────────

enum class SentenceKind : std::uint8_t { Fact, Oblige, Ideal, IdealStar };

// A top-level sentence: a bare propositional fact or one of the three
// dyadic operators. For facts the antecedent is canonically `true`.
struct Sentence {
  SentenceKind kind;
  Prop consequent;
  Prop antecedent;

  static Sentence fact(Prop p) { return {SentenceKind::Fact, std::move(p), Prop::top()}; }
  static Sentence oblige(Prop consequent, Prop antecedent = Prop::top()) {
    return {SentenceKind::Oblige, std::move(consequent), std::move(antecedent)};
  }
  static Sentence ideal(Prop consequent, Prop antecedent = Prop::top()) {
    return {SentenceKind::Ideal, std::move(consequent), std::move(antecedent)};
  }
  static Sentence ideal_star(Prop consequent, Prop antecedent = Prop::top()) {
    return {SentenceKind::IdealStar, std::move(consequent), std::move(antecedent)};
  }

  bool is_fact() const noexcept { return kind == SentenceKind::Fact; }

  bool operator==(const Sentence& o) const {
    if (kind != o.kind) return false;
    if (kind == SentenceKind::Fact) return consequent == o.consequent;
    return consequent == o.consequent && antecedent == o.antecedent;
  }
};

// ── Evaluation ──────────────────────────────────────────────────────────

inline bool eval_prop(const Prop& p, World w) {
  switch (p.kind()) {
    case Prop::Kind::True:
      return true;
    case Prop::Kind::False:
      return false;
    case Prop::Kind::Atom:
      return (w.index >> p.atom_index()) & 1;
    case Prop::Kind::Not:
      return !eval_prop(p.lhs(), w);
    case Prop::Kind::And:
      return eval_prop(p.lhs(), w) && eval_prop(p.rhs(), w);
    case Prop::Kind::Or:
      return eval_prop(p.lhs(), w) || eval_prop(p.rhs(), w);
    case Prop::Kind::Implies:
      return !eval_prop(p.lhs(), w) || eval_prop(p.rhs(), w);
    case Prop::Kind::Iff:
      return eval_prop(p.lhs(), w) == eval_prop(p.rhs(), w);
  }
  return false;  // unreachable
}

namespace detail {

inline WorldSet satisfying_set(const Prop& p, std::size_t world_count) {
  WorldSet out(world_count);
  for (std::uint32_t w = 0; w < world_count; ++w)
    if (eval_prop(p, World{w})) out.set(w);
  return out;
}

}  // namespace detail

// All worlds over the full valuation space where `p` holds. Satisfiability
// of `p` is exactly non-emptiness of this set.
inline WorldSet models_of(const Prop& p, const Vocabulary& vocab,
                          std::size_t max_atoms = kDefaultMaxAtoms) {
  if (vocab.size() > max_atoms)
    throw VocabularyTooLargeError("vocabulary of " + std::to_string(vocab.size()) +
                                  " atoms exceeds the cap of " + std::to_string(max_atoms));
  return detail::satisfying_set(p, vocab.world_count());
}

// ── Parsing ─────────────────────────────────────────────────────────────

namespace detail {

struct Token {
  enum class Type {
    Ident,
    KwTrue,
    KwFalse,
    KwGiven,
    KwOblige,
    KwIdeal,
    KwIdealStar,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    End,
  };

  Type type;
  std::string text;
  std::size_t pos;
};

inline const char* token_name(Token::Type t) {
  using T = Token::Type;
  switch (t) {
    case T::Ident: return "atom";
    case T::KwTrue: return "'true'";
    case T::KwFalse: return "'false'";
    case T::KwGiven: return "'given'";
    case T::KwOblige: return "'oblige'";
    case T::KwIdeal: return "'ideal'";
    case T::KwIdealStar: return "'ideal*'";
    case T::Not: return "'~'";
    case T::And: return "'&'";
    case T::Or: return "'|'";
    case T::Implies: return "'->'";
    case T::Iff: return "'<->'";
    case T::LParen: return "'('";
    case T::RParen: return "')'";
    case T::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Token::Type::End, "", start};
    char c = text_[pos_];
    if (c == '(') return take(Token::Type::LParen, 1);
    if (c == ')') return take(Token::Type::RParen, 1);
    if (c == '~') return take(Token::Type::Not, 1);
    if (c == '&') return take(Token::Type::And, 1);
    if (c == '|') return take(Token::Type::Or, 1);
    if (c == '-') {
      if (text_.substr(pos_, 2) == "->") return take(Token::Type::Implies, 2);
      throw SyntaxError("syntax error at offset " + std::to_string(start) + ": expected '->'",
                        start);
    }
    if (c == '<') {
      if (text_.substr(pos_, 3) == "<->") return take(Token::Type::Iff, 3);
      throw SyntaxError("syntax error at offset " + std::to_string(start) + ": expected '<->'",
                        start);
    }
    if ((c >= 'a' && c <= 'z') || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() && (is_ident_char(text_[end]))) ++end;
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == "true") return {Token::Type::KwTrue, word, start};
      if (word == "false") return {Token::Type::KwFalse, word, start};
      if (word == "given") return {Token::Type::KwGiven, word, start};
      if (word == "oblige") return {Token::Type::KwOblige, word, start};
      if (word == "ideal") {
        if (pos_ < text_.size() && text_[pos_] == '*') {
          ++pos_;
          return {Token::Type::KwIdealStar, "ideal*", start};
        }
        return {Token::Type::KwIdeal, word, start};
      }
      return {Token::Type::Ident, word, start};
    }
    throw SyntaxError("syntax error at offset " + std::to_string(start) +
                          ": unexpected character '" + std::string(1, c) + "'",
                      start);
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
  static bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  }

  Token take(Token::Type t, std::size_t len) {
    Token tok{t, std::string(text_.substr(pos_, len)), pos_};
    pos_ += len;
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class SentenceParser {
 public:
  SentenceParser(std::string_view text, const Vocabulary& vocab)
      : lexer_(text), vocab_(vocab), cur_(lexer_.next()) {}

  Sentence parse_sentence() {
    using T = Token::Type;
    if (cur_.type == T::KwOblige || cur_.type == T::KwIdeal || cur_.type == T::KwIdealStar) {
      SentenceKind kind = cur_.type == T::KwOblige  ? SentenceKind::Oblige
                          : cur_.type == T::KwIdeal ? SentenceKind::Ideal
                                                    : SentenceKind::IdealStar;
      advance();
      expect(T::LParen);
      Prop consequent = parse_formula();
      Prop antecedent = Prop::top();
      if (cur_.type == T::KwGiven) {
        advance();
        antecedent = parse_formula();
      }
      expect(T::RParen);
      expect(T::End);
      return {kind, std::move(consequent), std::move(antecedent)};
    }
    Prop p = parse_formula();
    expect(T::End);
    return Sentence::fact(std::move(p));
  }

  Prop parse_prop() {
    Prop p = parse_formula();
    expect(Token::Type::End);
    return p;
  }

 private:
  using T = Token::Type;

  void advance() { cur_ = lexer_.next(); }

  void expect(T t) {
    if (cur_.type != t)
      throw SyntaxError("syntax error at offset " + std::to_string(cur_.pos) + ": expected " +
                            token_name(t) + ", found " + token_name(cur_.type),
                        cur_.pos);
    advance();
  }

  Prop parse_formula() { return parse_iff(); }

  Prop parse_iff() {
    Prop lhs = parse_imp();
    while (cur_.type == T::Iff) {
      advance();
      lhs = Prop::biconditional(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  Prop parse_imp() {
    Prop lhs = parse_or();
    if (cur_.type == T::Implies) {
      advance();
      return Prop::implication(std::move(lhs), parse_imp());  // right-associative
    }
    return lhs;
  }

  Prop parse_or() {
    Prop lhs = parse_and();
    while (cur_.type == T::Or) {
      advance();
      lhs = Prop::disjunction(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Prop parse_and() {
    Prop lhs = parse_unary();
    while (cur_.type == T::And) {
      advance();
      lhs = Prop::conjunction(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Prop parse_unary() {
    switch (cur_.type) {
      case T::Not:
        advance();
        return Prop::negation(parse_unary());
      case T::KwTrue:
        advance();
        return Prop::top();
      case T::KwFalse:
        advance();
        return Prop::bottom();
      case T::Ident: {
        auto idx = vocab_.index_of(cur_.text);
        if (!idx)
          throw UnknownAtomError("unknown atom '" + cur_.text + "' at offset " +
                                     std::to_string(cur_.pos),
                                 cur_.pos);
        Prop p = Prop::atom(*idx, cur_.text);
        advance();
        return p;
      }
      case T::LParen: {
        advance();
        Prop p = parse_formula();
        expect(T::RParen);
        return p;
      }
      case T::KwOblige:
      case T::KwIdeal:
      case T::KwIdealStar:
        throw NestingError("deontic operator '" + cur_.text + "' inside a formula at offset " +
                               std::to_string(cur_.pos),
                           cur_.pos);
      default:
        throw SyntaxError("syntax error at offset " + std::to_string(cur_.pos) +
                              ": expected a formula, found " + token_name(cur_.type),
                          cur_.pos);
    }
  }

  Lexer lexer_;
  const Vocabulary& vocab_;
  Token cur_;
};

}  // namespace detail

inline Sentence parse_sentence(std::string_view text, const Vocabulary& vocab) {
  return detail::SentenceParser(text, vocab).parse_sentence();
}

inline Prop parse_prop(std::string_view text, const Vocabulary& vocab) {
  return detail::SentenceParser(text, vocab).parse_prop();
}

// ── Printing ────────────────────────────────────────────────────────────

namespace detail {

// Precedence levels; higher binds tighter.
inline int prop_precedence(Prop::Kind k) {
  switch (k) {
    case Prop::Kind::Iff: return 1;
    case Prop::Kind::Implies: return 2;
    case Prop::Kind::Or: return 3;
    case Prop::Kind::And: return 4;
    default: return 5;
  }
}

inline void print_prop(const Prop& p, int min_prec, std::string& out) {
  int prec = prop_precedence(p.kind());
  bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (p.kind()) {
    case Prop::Kind::True:
      out += "true";
      break;
    case Prop::Kind::False:
      out += "false";
      break;
    case Prop::Kind::Atom:
      out += p.atom_name();
      break;
    case Prop::Kind::Not:
      out += '~';
      print_prop(p.lhs(), 5, out);
      break;
    case Prop::Kind::And:
      print_prop(p.lhs(), 4, out);
      out += " & ";
      print_prop(p.rhs(), 5, out);
      break;
    case Prop::Kind::Or:
      print_prop(p.lhs(), 3, out);
      out += " | ";
      print_prop(p.rhs(), 4, out);
      break;
    case Prop::Kind::Implies:
      print_prop(p.lhs(), 3, out);  // right-associative: parenthesize a nested lhs arrow
      out += " -> ";
      print_prop(p.rhs(), 2, out);
      break;
    case Prop::Kind::Iff:
      print_prop(p.lhs(), 1, out);
      out += " <-> ";
      print_prop(p.rhs(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline std::string to_string(const Prop& p) {
  std::string out;
  detail::print_prop(p, 0, out);
  return out;
}

inline std::string to_string(const Sentence& s) {
  if (s.kind == SentenceKind::Fact) return to_string(s.consequent);
  std::string out = s.kind == SentenceKind::Oblige  ? "oblige("
                    : s.kind == SentenceKind::Ideal ? "ideal("
                                                    : "ideal*(";
  out += to_string(s.consequent);
  if (s.antecedent.kind() != Prop::Kind::True) {
    out += " given ";
    out += to_string(s.antecedent);
  }
  out += ')';
  return out;
}

}  // namespace deon
