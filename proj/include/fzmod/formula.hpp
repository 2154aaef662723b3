#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fzmod/truth.hpp"

namespace fzmod {

// Modal formula AST. Immutable, cheap to copy (shared nodes). Disjunction,
// implication and box are sugar and are expanded at construction:
//   a | b   =  ~(~a & ~b)
//   a -> b  =  ~a | b
//   []a     =  ~<>~a
// The rank counts nesting of the diamond *and* of propositional atoms:
// rank(c) = 0, rank(p) = 1, rank(<>f) = 1 + rank(f), connectives take the
// max of their children.
class ModalFormula {
public:
  enum class Kind { Constant, Atom, SubConst, Neg, And, Diamond };

  static ModalFormula constant(const Truth& value);
  static ModalFormula atom(std::string name);
  static ModalFormula sub_const(ModalFormula f, const Truth& value);
  static ModalFormula neg(ModalFormula f);
  static ModalFormula conj(ModalFormula lhs, ModalFormula rhs);
  static ModalFormula diamond(ModalFormula f);
  // Sugar (eagerly expanded).
  static ModalFormula disj(ModalFormula lhs, ModalFormula rhs);
  static ModalFormula implies(ModalFormula lhs, ModalFormula rhs);
  static ModalFormula box(ModalFormula f);

  Kind kind() const;
  const Truth& value() const;            // Constant, SubConst
  const std::string& atom_name() const;  // Atom
  const ModalFormula& child() const;     // SubConst, Neg, Diamond
  const ModalFormula& lhs() const;       // And
  const ModalFormula& rhs() const;       // And

  int rank() const;
  int size() const;  // node count

  // Atom names occurring in the formula.
  std::set<std::string> atoms() const;

  friend bool operator==(const ModalFormula& a, const ModalFormula& b);

private:
  struct Node;
  explicit ModalFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ModalFormula make(Kind kind, Truth value, std::string atom,
                           std::vector<ModalFormula> children);
  std::shared_ptr<const Node> node_;
};

// First-order formula AST over one binary relation R, unary atom
// predicates, equality and existential quantification. Quantifier rank
// counts nested quantifiers only; atomic formulas count 0.
class FolFormula {
public:
  enum class Kind { Constant, AtomApp, Rel, Eq, SubConst, Neg, And, Exists };

  static FolFormula constant(const Truth& value);
  static FolFormula atom_app(std::string atom, std::string var);
  static FolFormula rel(std::string var1, std::string var2);
  static FolFormula eq(std::string var1, std::string var2);
  static FolFormula sub_const(FolFormula f, const Truth& value);
  static FolFormula neg(FolFormula f);
  static FolFormula conj(FolFormula lhs, FolFormula rhs);
  static FolFormula exists(std::string var, FolFormula body);
  // Sugar (eagerly expanded, as in the modal case).
  static FolFormula disj(FolFormula lhs, FolFormula rhs);
  static FolFormula implies(FolFormula lhs, FolFormula rhs);

  Kind kind() const;
  const Truth& value() const;             // Constant, SubConst
  const std::string& atom_name() const;   // AtomApp
  const std::string& var1() const;        // AtomApp, Rel, Eq, Exists
  const std::string& var2() const;        // Rel, Eq
  const FolFormula& child() const;        // SubConst, Neg, Exists
  const FolFormula& lhs() const;          // And
  const FolFormula& rhs() const;          // And

  int qrank() const;
  int size() const;

  std::set<std::string> free_variables() const;
  std::set<std::string> atoms() const;

  friend bool operator==(const FolFormula& a, const FolFormula& b);

private:
  struct Node;
  explicit FolFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static FolFormula make(Kind kind, Truth value, std::string atom, std::string var1,
                         std::string var2, std::vector<FolFormula> children);
  std::shared_ptr<const Node> node_;
};

}  // namespace fzmod
