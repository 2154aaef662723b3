#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fzmod/errors.hpp"
#include "fzmod/formula.hpp"
#include "fzmod/model.hpp"

namespace fzmod {

// Half-open byte range in the source text, with 1-based line/column of the
// start position.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 1;
  int column = 1;
};

class ParseError : public Error {
public:
  ParseError(SourceSpan span, const std::string& message,
             std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  SourceSpan span_;
  std::string message_;
  std::vector<std::string> expected_;
};

// Line-oriented model format:
//   atoms: p q
//   states: s1 s2
//   val s1 p 1/2
//   edge s1 s2 0.5
// '#' starts a comment; values parse exactly; 0-valued entries are dropped.
Model parse_model(std::string_view text);

// Modal formulas:  ~ <> [] (prefix)  >  .-  >  &  >  |  >  ->
// '.-' takes a rational literal on the right. '|', '->', '[]' are sugar.
ModalFormula parse_modal(std::string_view text);

// FOL formulas: same connectives plus 'E x. body' (scope maximally right),
// 'R(x,y)', 'p(x)', 'x = y'.
FolFormula parse_fol(std::string_view text);

}  // namespace fzmod
