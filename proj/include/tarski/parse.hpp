#ifndef TARSKI_PARSE_HPP
#define TARSKI_PARSE_HPP

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "tarski/errors.hpp"
#include "tarski/formula.hpp"
#include "tarski/signature.hpp"

namespace tarski {

// Grammar (ASCII, whitespace-insensitive between tokens):
//
//   formula    := quantified
//   quantified := ('forall' | 'exists') VAR '.' quantified | iff
//   iff        := imp ('<->' imp)*            left-associative
//   imp        := or ('->' or)*               left-associative
//   or         := and ('|' and)*              left-associative
//   and        := unary ('&' unary)*          left-associative
//   unary      := '~' unary | primary
//   primary    := IDENT '(' term (',' term)* ')' | '(' quantified ')'
//   term       := VAR | IDENT
//
// VAR is 'x' followed by digits (x1, x2, ...); any other identifier names a
// predicate or constant of the signature. Quantifiers bind weakest, '~'
// tightest. The extended connectives desugar while parsing; the resulting
// tree holds only atoms, '~', '|' and 'forall'.

namespace detail {

enum class TokenKind {
  LParen, RParen, Comma, Dot, Tilde, Pipe, Amp, Arrow, Iff,
  Forall, Exists, Var, Ident, End,
};

struct Token {
  TokenKind kind;
  std::size_t position;
  std::string text;   // Ident
  int index = 0;      // Var
};

inline const char* token_name(TokenKind k) {
  switch (k) {
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma:  return "','";
    case TokenKind::Dot:    return "'.'";
    case TokenKind::Tilde:  return "'~'";
    case TokenKind::Pipe:   return "'|'";
    case TokenKind::Amp:    return "'&'";
    case TokenKind::Arrow:  return "'->'";
    case TokenKind::Iff:    return "'<->'";
    case TokenKind::Forall: return "'forall'";
    case TokenKind::Exists: return "'exists'";
    case TokenKind::Var:    return "variable";
    case TokenKind::Ident:  return "identifier";
    case TokenKind::End:    return "end of input";
  }
  return "?";
}

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  auto push = [&tokens](TokenKind kind, std::size_t position) {
    tokens.push_back(Token{kind, position, {}, 0});
  };
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    std::size_t start = i;
    switch (c) {
      case '(': push(TokenKind::LParen, start); ++i; continue;
      case ')': push(TokenKind::RParen, start); ++i; continue;
      case ',': push(TokenKind::Comma, start); ++i; continue;
      case '.': push(TokenKind::Dot, start); ++i; continue;
      case '~': push(TokenKind::Tilde, start); ++i; continue;
      case '|': push(TokenKind::Pipe, start); ++i; continue;
      case '&': push(TokenKind::Amp, start); ++i; continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(TokenKind::Arrow, start);
          i += 2;
          continue;
        }
        throw LexError("unknown token '-' (did you mean '->'?)", start);
      case '<':
        if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
          push(TokenKind::Iff, start);
          i += 3;
          continue;
        }
        throw LexError("unknown token '<' (did you mean '<->'?)", start);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string word = text.substr(i, j - i);
      i = j;
      if (word == "forall") {
        push(TokenKind::Forall, start);
      } else if (word == "exists") {
        push(TokenKind::Exists, start);
      } else if (is_variable_shaped(word)) {
        long long index = 0;
        for (std::size_t k = 1; k < word.size(); ++k) {
          index = index * 10 + (word[k] - '0');
          if (index > kMaxVariableIndex) {
            throw ParseError("variable index in '" + word + "' exceeds the cap of " +
                                 std::to_string(kMaxVariableIndex),
                             start);
          }
        }
        if (index < 1) {
          throw ParseError("variable index must be >= 1 in '" + word + "'", start);
        }
        tokens.push_back(Token{TokenKind::Var, start, word, static_cast<int>(index)});
      } else {
        tokens.push_back(Token{TokenKind::Ident, start, std::move(word), 0});
      }
      continue;
    }
    throw LexError("unknown token '" + std::string(1, c) + "'", start);
  }
  push(TokenKind::End, text.size());
  return tokens;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Signature& sig)
      : tokens_(std::move(tokens)), sig_(sig) {}

  Formula parse() {
    Formula f = quantified();
    expect(TokenKind::End);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token advance() { return tokens_[pos_++]; }
  bool at(TokenKind k) const { return peek().kind == k; }

  bool accept(TokenKind k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  Token expect(TokenKind k) {
    if (!at(k)) fail({token_name(k)});
    return advance();
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += (i + 1 == expected.size()) ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found ";
    msg += token_name(t.kind);
    throw ParseError(msg, t.position, std::move(expected));
  }

  Formula quantified() {
    if (at(TokenKind::Forall) || at(TokenKind::Exists)) {
      bool universal = advance().kind == TokenKind::Forall;
      Token var = expect(TokenKind::Var);
      expect(TokenKind::Dot);
      Formula body = quantified();
      return universal ? Formula::universal(Variable{var.index}, std::move(body))
                       : Formula::existential(Variable{var.index}, std::move(body));
    }
    return iff_expr();
  }

  Formula iff_expr() {
    Formula f = imp_expr();
    while (accept(TokenKind::Iff)) f = Formula::equivalence(std::move(f), imp_expr());
    return f;
  }

  Formula imp_expr() {
    Formula f = or_expr();
    while (accept(TokenKind::Arrow)) f = Formula::implication(std::move(f), or_expr());
    return f;
  }

  Formula or_expr() {
    Formula f = and_expr();
    while (accept(TokenKind::Pipe)) f = Formula::disjunction(std::move(f), and_expr());
    return f;
  }

  Formula and_expr() {
    Formula f = unary();
    while (accept(TokenKind::Amp)) f = Formula::conjunction(std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (accept(TokenKind::Tilde)) return Formula::negation(unary());
    return primary();
  }

  Formula primary() {
    if (accept(TokenKind::LParen)) {
      Formula f = quantified();
      expect(TokenKind::RParen);
      return f;
    }
    if (at(TokenKind::Ident)) return atom();
    fail({"'('", "'~'", "'forall'", "'exists'", "identifier"});
  }

  Formula atom() {
    Token name = expect(TokenKind::Ident);
    if (!sig_.has_predicate(name.text)) {
      if (sig_.has_constant(name.text)) {
        throw UnknownNameError("'" + name.text + "' is a constant, not a predicate");
      }
      throw UnknownNameError("unknown predicate '" + name.text + "'");
    }
    expect(TokenKind::LParen);
    std::vector<Term> args;
    args.push_back(term());
    while (accept(TokenKind::Comma)) args.push_back(term());
    expect(TokenKind::RParen);
    int arity = sig_.arity_of(name.text);
    if (static_cast<int>(args.size()) != arity) {
      throw ArityError(name.text, arity, static_cast<int>(args.size()));
    }
    return Formula::atom(name.text, std::move(args));
  }

  Term term() {
    if (at(TokenKind::Var)) return Variable{advance().index};
    if (at(TokenKind::Ident)) {
      Token name = advance();
      if (!sig_.has_constant(name.text)) {
        if (sig_.has_predicate(name.text)) {
          throw UnknownNameError("'" + name.text + "' is a predicate, not a constant");
        }
        throw UnknownNameError("unknown constant '" + name.text + "'");
      }
      return Constant{name.text};
    }
    fail({"variable", "identifier"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature& sig_;
};

}  // namespace detail

/// Parses formula text against a signature. Extended connectives are
/// desugared; the returned tree holds primitives only.
inline Formula parse_formula(const std::string& text, const Signature& sig) {
  return detail::Parser(detail::lex(text), sig).parse();
}

}  // namespace tarski

#endif  // TARSKI_PARSE_HPP
