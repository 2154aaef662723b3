#include "fzmod/parse.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace fzmod {

ParseError::ParseError(SourceSpan span, const std::string& message,
                       std::vector<std::string> expected)
    : Error("parse error at line " + std::to_string(span.line) + ", column " +
            std::to_string(span.column) + ": " + message),
      span_(span),
      message_(message),
      expected_(std::move(expected)) {}

namespace {

// ------------------------------------------------------------- tokenizer ---

enum class Tok {
  Number,   // "3", "1/2", "0.25"
  Ident,
  LParen,
  RParen,
  Neg,      // ~
  Diamond,  // <>
  Box,      // []
  SubConst, // .-
  And,      // &
  Or,       // |
  Implies,  // ->
  Equals,   // =
  Comma,    // ,
  Dot,      // .
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Number: return "rational literal";
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Neg: return "'~'";
    case Tok::Diamond: return "'<>'";
    case Tok::Box: return "'[]'";
    case Tok::SubConst: return "'.-'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Equals: return "'='";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  };
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(text.substr(pos, len)), {pos, pos + len, line, col}});
    advance(len);
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    SourceSpan here{pos, pos + 1, line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t len = 0;
      auto digits = [&] {
        while (pos + len < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + len])))
          ++len;
      };
      digits();
      if (pos + len < text.size() && (text[pos + len] == '/' || text[pos + len] == '.')) {
        // '.-' after a number is the subtraction operator, not a decimal dot.
        bool decimal_dot = text[pos + len] == '.' &&
                           pos + len + 1 < text.size() &&
                           std::isdigit(static_cast<unsigned char>(text[pos + len + 1]));
        if (text[pos + len] == '/' || decimal_dot) {
          ++len;
          std::size_t tail = len;
          digits();
          if (len == tail) {
            throw ParseError(here, "malformed rational literal");
          }
        }
      }
      push(Tok::Number, len);
      continue;
    }
    if (ident_start(c)) {
      std::size_t len = 1;
      while (pos + len < text.size() && ident_char(text[pos + len])) ++len;
      push(Tok::Ident, len);
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '~': push(Tok::Neg, 1); continue;
      case '&': push(Tok::And, 1); continue;
      case '|': push(Tok::Or, 1); continue;
      case '=': push(Tok::Equals, 1); continue;
      case ',': push(Tok::Comma, 1); continue;
      case '<':
        if (pos + 1 < text.size() && text[pos + 1] == '>') {
          push(Tok::Diamond, 2);
          continue;
        }
        throw ParseError(here, "stray '<'");
      case '[':
        if (pos + 1 < text.size() && text[pos + 1] == ']') {
          push(Tok::Box, 2);
          continue;
        }
        throw ParseError(here, "stray '['");
      case '-':
        if (pos + 1 < text.size() && text[pos + 1] == '>') {
          push(Tok::Implies, 2);
          continue;
        }
        throw ParseError(here, "stray '-' (use '->' or '.-')");
      case '.':
        if (pos + 1 < text.size() && text[pos + 1] == '-') {
          push(Tok::SubConst, 2);
          continue;
        }
        push(Tok::Dot, 1);
        continue;
      default:
        throw ParseError(here, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", {pos, pos, line, col}});
  return out;
}

// ------------------------------------------------------ formula parsing ---

class TokenStream {
public:
  explicit TokenStream(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek() const { return tokens_[index_]; }
  const Token& next() { return tokens_[index_ < tokens_.size() - 1 ? index_++ : index_]; }
  bool at(Tok kind) const { return peek().kind == kind; }

  Token expect(Tok kind) {
    if (!at(kind)) {
      throw ParseError(peek().span,
                       std::string("expected ") + tok_name(kind) + ", found " +
                           tok_name(peek().kind),
                       {tok_name(kind)});
    }
    return next();
  }

  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected = {}) {
    throw ParseError(peek().span, message, std::move(expected));
  }

private:
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

Truth truth_from_token(const Token& tok) {
  try {
    return Truth::parse(tok.text);
  } catch (const ValueError& e) {
    throw ParseError(tok.span, e.what());
  }
}

// Modal grammar, loosest first:
//   implies := or ('->' implies)?
//   or      := and ('|' and)*
//   and     := sub ('&' sub)*
//   sub     := unary ('.-' Number)*
//   unary   := ('~' | '<>' | '[]') unary | primary
//   primary := Number | Ident | '(' implies ')'
class ModalParser {
public:
  explicit ModalParser(std::string_view text) : ts_(text) {}

  ModalFormula parse() {
    ModalFormula f = implies();
    if (!ts_.at(Tok::End)) ts_.fail("trailing input after formula");
    return f;
  }

private:
  ModalFormula implies() {
    ModalFormula lhs = disj();
    if (ts_.at(Tok::Implies)) {
      ts_.next();
      return ModalFormula::implies(std::move(lhs), implies());
    }
    return lhs;
  }

  ModalFormula disj() {
    ModalFormula f = conj();
    while (ts_.at(Tok::Or)) {
      ts_.next();
      f = ModalFormula::disj(std::move(f), conj());
    }
    return f;
  }

  ModalFormula conj() {
    ModalFormula f = sub();
    while (ts_.at(Tok::And)) {
      ts_.next();
      f = ModalFormula::conj(std::move(f), sub());
    }
    return f;
  }

  ModalFormula sub() {
    ModalFormula f = unary();
    while (ts_.at(Tok::SubConst)) {
      ts_.next();
      if (!ts_.at(Tok::Number)) {
        ts_.fail("subtraction constant must be rational literal", {tok_name(Tok::Number)});
      }
      f = ModalFormula::sub_const(std::move(f), truth_from_token(ts_.next()));
    }
    return f;
  }

  ModalFormula unary() {
    if (ts_.at(Tok::Neg)) {
      ts_.next();
      return ModalFormula::neg(unary());
    }
    if (ts_.at(Tok::Diamond)) {
      ts_.next();
      return ModalFormula::diamond(unary());
    }
    if (ts_.at(Tok::Box)) {
      ts_.next();
      return ModalFormula::box(unary());
    }
    return primary();
  }

  ModalFormula primary() {
    if (ts_.at(Tok::Number)) {
      return ModalFormula::constant(truth_from_token(ts_.next()));
    }
    if (ts_.at(Tok::Ident)) {
      return ModalFormula::atom(ts_.next().text);
    }
    if (ts_.at(Tok::LParen)) {
      ts_.next();
      ModalFormula f = implies();
      ts_.expect(Tok::RParen);
      return f;
    }
    ts_.fail("formula expected",
             {tok_name(Tok::Number), tok_name(Tok::Ident), tok_name(Tok::LParen)});
  }

  TokenStream ts_;
};

// FOL grammar: as above, plus at the unary level 'E x. implies' with scope
// extending maximally to the right, and primaries p(x), R(x,y), x = y.
class FolParser {
public:
  explicit FolParser(std::string_view text) : ts_(text) {}

  FolFormula parse() {
    FolFormula f = implies();
    if (!ts_.at(Tok::End)) ts_.fail("trailing input after formula");
    return f;
  }

private:
  FolFormula implies() {
    FolFormula lhs = disj();
    if (ts_.at(Tok::Implies)) {
      ts_.next();
      return FolFormula::implies(std::move(lhs), implies());
    }
    return lhs;
  }

  FolFormula disj() {
    FolFormula f = conj();
    while (ts_.at(Tok::Or)) {
      ts_.next();
      f = FolFormula::disj(std::move(f), conj());
    }
    return f;
  }

  FolFormula conj() {
    FolFormula f = sub();
    while (ts_.at(Tok::And)) {
      ts_.next();
      f = FolFormula::conj(std::move(f), sub());
    }
    return f;
  }

  FolFormula sub() {
    FolFormula f = unary();
    while (ts_.at(Tok::SubConst)) {
      ts_.next();
      if (!ts_.at(Tok::Number)) {
        ts_.fail("subtraction constant must be rational literal", {tok_name(Tok::Number)});
      }
      f = FolFormula::sub_const(std::move(f), truth_from_token(ts_.next()));
    }
    return f;
  }

  FolFormula unary() {
    if (ts_.at(Tok::Neg)) {
      ts_.next();
      return FolFormula::neg(unary());
    }
    if (ts_.at(Tok::Ident) && ts_.peek().text == "E") {
      ts_.next();
      std::string var = ts_.expect(Tok::Ident).text;
      ts_.expect(Tok::Dot);
      if (ts_.at(Tok::End)) ts_.fail("formula expected");
      return FolFormula::exists(std::move(var), implies());
    }
    return primary();
  }

  FolFormula primary() {
    if (ts_.at(Tok::Number)) {
      return FolFormula::constant(truth_from_token(ts_.next()));
    }
    if (ts_.at(Tok::Ident)) {
      Token head = ts_.next();
      if (ts_.at(Tok::LParen)) {
        ts_.next();
        std::string v1 = ts_.expect(Tok::Ident).text;
        if (head.text == "R") {
          ts_.expect(Tok::Comma);
          std::string v2 = ts_.expect(Tok::Ident).text;
          ts_.expect(Tok::RParen);
          return FolFormula::rel(std::move(v1), std::move(v2));
        }
        ts_.expect(Tok::RParen);
        return FolFormula::atom_app(head.text, std::move(v1));
      }
      if (ts_.at(Tok::Equals)) {
        ts_.next();
        std::string v2 = ts_.expect(Tok::Ident).text;
        return FolFormula::eq(head.text, std::move(v2));
      }
      throw ParseError(head.span, "expected atom application, relation, or equality after '" +
                                      head.text + "'");
    }
    if (ts_.at(Tok::LParen)) {
      ts_.next();
      FolFormula f = implies();
      ts_.expect(Tok::RParen);
      return f;
    }
    ts_.fail("formula expected",
             {tok_name(Tok::Number), tok_name(Tok::Ident), tok_name(Tok::LParen)});
  }

  TokenStream ts_;
};

// --------------------------------------------------------- model parsing ---

struct Word {
  std::string text;
  SourceSpan span;
};

std::vector<std::vector<Word>> split_lines(std::string_view text) {
  std::vector<std::vector<Word>> lines;
  std::vector<Word> current;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;
  bool in_comment = false;
  std::size_t word_begin = 0;
  int word_line = 1, word_col = 1;
  std::string word;
  auto flush_word = [&] {
    if (!word.empty()) {
      current.push_back({word, {word_begin, pos, word_line, word_col}});
      word.clear();
    }
  };
  auto flush_line = [&] {
    flush_word();
    if (!current.empty()) lines.push_back(std::move(current));
    current.clear();
  };
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '\n') {
      flush_line();
      in_comment = false;
      ++line;
      col = 1;
      continue;
    }
    if (!in_comment) {
      if (c == '#') {
        flush_word();
        in_comment = true;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        flush_word();
      } else {
        if (word.empty()) {
          word_begin = pos;
          word_line = line;
          word_col = col;
        }
        word.push_back(c);
      }
    }
    ++col;
  }
  flush_line();
  return lines;
}

Truth truth_from_word(const Word& w) {
  try {
    return Truth::parse(w.text);
  } catch (const ValueError& e) {
    throw ParseError(w.span, e.what());
  }
}

}  // namespace

ModalFormula parse_modal(std::string_view text) { return ModalParser(text).parse(); }

FolFormula parse_fol(std::string_view text) { return FolParser(text).parse(); }

Model parse_model(std::string_view text) {
  Model model;
  bool seen_atoms = false;
  bool seen_states = false;
  struct Seen {
    std::set<std::pair<StateId, AtomId>> vals;
    std::set<std::pair<StateId, StateId>> edges;
  } seen;

  auto lines = split_lines(text);
  for (const auto& words : lines) {
    const Word& head = words[0];
    auto require_decls = [&] {
      if (!seen_atoms || !seen_states) {
        throw ParseError(head.span, "'" + head.text + "' before atoms/states declarations");
      }
    };
    auto lookup_state = [&](const Word& w) {
      auto id = model.find_state(w.text);
      if (!id) throw ParseError(w.span, "unknown state '" + w.text + "'");
      return *id;
    };
    auto arg_count = [&](std::size_t n, const char* usage) {
      if (words.size() != n) {
        throw ParseError(head.span, std::string("expected: ") + usage);
      }
    };
    if (head.text == "atoms:") {
      if (seen_atoms) throw ParseError(head.span, "duplicate atoms section");
      seen_atoms = true;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (model.find_atom(words[i].text)) {
          throw ParseError(words[i].span, "duplicate atom '" + words[i].text + "'");
        }
        model.add_atom(words[i].text);
      }
    } else if (head.text == "states:") {
      if (seen_states) throw ParseError(head.span, "duplicate states section");
      seen_states = true;
      if (words.size() == 1) {
        throw ParseError(head.span, "at least one state required");
      }
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (model.find_state(words[i].text)) {
          throw ParseError(words[i].span, "duplicate state '" + words[i].text + "'");
        }
        model.add_state(words[i].text);
      }
    } else if (head.text == "val") {
      require_decls();
      arg_count(4, "val <state> <atom> <truth>");
      StateId s = lookup_state(words[1]);
      auto p = model.find_atom(words[2].text);
      if (!p) throw ParseError(words[2].span, "unknown atom '" + words[2].text + "'");
      if (!seen.vals.insert({s, *p}).second) {
        throw ParseError(head.span,
                         "duplicate valuation for (" + words[1].text + ", " + words[2].text + ")");
      }
      model.set_valuation(s, *p, truth_from_word(words[3]));
    } else if (head.text == "edge") {
      require_decls();
      arg_count(4, "edge <from> <to> <truth>");
      StateId from = lookup_state(words[1]);
      StateId to = lookup_state(words[2]);
      if (!seen.edges.insert({from, to}).second) {
        throw ParseError(head.span,
                         "duplicate edge (" + words[1].text + ", " + words[2].text + ")");
      }
      model.set_relation(from, to, truth_from_word(words[3]));
    } else {
      throw ParseError(head.span, "unknown directive '" + head.text +
                                      "' (expected atoms:, states:, val, edge)");
    }
  }
  if (!seen_states) {
    throw ParseError(SourceSpan{0, 0, 1, 1}, "at least one state required");
  }
  return model;
}

}  // namespace fzmod
