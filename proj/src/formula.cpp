#include "fzmod/formula.hpp"

#include <algorithm>

#include "fzmod/errors.hpp"

namespace fzmod {

// ---------------------------------------------------------------- modal ---

struct ModalFormula::Node {
  Kind kind;
  Truth value;
  std::string atom;
  std::vector<ModalFormula> children;
  int rank = 0;
  int size = 1;
};

ModalFormula ModalFormula::make(Kind kind, Truth value, std::string atom,
                                std::vector<ModalFormula> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->value = value;
  node->atom = std::move(atom);
  node->children = std::move(children);
  switch (kind) {
    case Kind::Constant:
      node->rank = 0;
      break;
    case Kind::Atom:
      node->rank = 1;
      break;
    case Kind::SubConst:
    case Kind::Neg:
      node->rank = node->children[0].rank();
      break;
    case Kind::And:
      node->rank = std::max(node->children[0].rank(), node->children[1].rank());
      break;
    case Kind::Diamond:
      node->rank = 1 + node->children[0].rank();
      break;
  }
  for (const auto& c : node->children) node->size += c.size();
  return ModalFormula(std::move(node));
}

ModalFormula ModalFormula::constant(const Truth& value) {
  return make(Kind::Constant, value, {}, {});
}

ModalFormula ModalFormula::atom(std::string name) {
  if (name.empty()) throw ValueError("empty atom name");
  return make(Kind::Atom, {}, std::move(name), {});
}

ModalFormula ModalFormula::sub_const(ModalFormula f, const Truth& value) {
  return make(Kind::SubConst, value, {}, {std::move(f)});
}

ModalFormula ModalFormula::neg(ModalFormula f) {
  return make(Kind::Neg, {}, {}, {std::move(f)});
}

ModalFormula ModalFormula::conj(ModalFormula lhs, ModalFormula rhs) {
  return make(Kind::And, {}, {}, {std::move(lhs), std::move(rhs)});
}

ModalFormula ModalFormula::diamond(ModalFormula f) {
  return make(Kind::Diamond, {}, {}, {std::move(f)});
}

ModalFormula ModalFormula::disj(ModalFormula lhs, ModalFormula rhs) {
  return neg(conj(neg(std::move(lhs)), neg(std::move(rhs))));
}

ModalFormula ModalFormula::implies(ModalFormula lhs, ModalFormula rhs) {
  return disj(neg(std::move(lhs)), std::move(rhs));
}

ModalFormula ModalFormula::box(ModalFormula f) {
  return neg(diamond(neg(std::move(f))));
}

ModalFormula::Kind ModalFormula::kind() const { return node_->kind; }
const Truth& ModalFormula::value() const { return node_->value; }
const std::string& ModalFormula::atom_name() const { return node_->atom; }
const ModalFormula& ModalFormula::child() const { return node_->children.at(0); }
const ModalFormula& ModalFormula::lhs() const { return node_->children.at(0); }
const ModalFormula& ModalFormula::rhs() const { return node_->children.at(1); }
int ModalFormula::rank() const { return node_->rank; }
int ModalFormula::size() const { return node_->size; }

std::set<std::string> ModalFormula::atoms() const {
  std::set<std::string> out;
  if (kind() == Kind::Atom) out.insert(atom_name());
  for (const auto& c : node_->children) {
    auto sub = c.atoms();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

bool operator==(const ModalFormula& a, const ModalFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.node_->rank != b.node_->rank || a.node_->size != b.node_->size) return false;
  if (a.node_->value != b.node_->value || a.node_->atom != b.node_->atom) return false;
  if (a.node_->children.size() != b.node_->children.size()) return false;
  for (std::size_t i = 0; i < a.node_->children.size(); ++i) {
    if (!(a.node_->children[i] == b.node_->children[i])) return false;
  }
  return true;
}

// ------------------------------------------------------------------ FOL ---

struct FolFormula::Node {
  Kind kind;
  Truth value;
  std::string atom;
  std::string var1, var2;
  std::vector<FolFormula> children;
  int qrank = 0;
  int size = 1;
};

FolFormula FolFormula::make(Kind kind, Truth value, std::string atom, std::string var1,
                            std::string var2, std::vector<FolFormula> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->value = value;
  node->atom = std::move(atom);
  node->var1 = std::move(var1);
  node->var2 = std::move(var2);
  node->children = std::move(children);
  switch (kind) {
    case Kind::Constant:
    case Kind::AtomApp:
    case Kind::Rel:
    case Kind::Eq:
      node->qrank = 0;
      break;
    case Kind::SubConst:
    case Kind::Neg:
      node->qrank = node->children[0].qrank();
      break;
    case Kind::And:
      node->qrank = std::max(node->children[0].qrank(), node->children[1].qrank());
      break;
    case Kind::Exists:
      node->qrank = 1 + node->children[0].qrank();
      break;
  }
  for (const auto& c : node->children) node->size += c.size();
  return FolFormula(std::move(node));
}

FolFormula FolFormula::constant(const Truth& value) {
  return make(Kind::Constant, value, {}, {}, {}, {});
}

FolFormula FolFormula::atom_app(std::string atom, std::string var) {
  if (atom.empty() || var.empty()) throw ValueError("empty name in atom application");
  return make(Kind::AtomApp, {}, std::move(atom), std::move(var), {}, {});
}

FolFormula FolFormula::rel(std::string var1, std::string var2) {
  return make(Kind::Rel, {}, {}, std::move(var1), std::move(var2), {});
}

FolFormula FolFormula::eq(std::string var1, std::string var2) {
  return make(Kind::Eq, {}, {}, std::move(var1), std::move(var2), {});
}

FolFormula FolFormula::sub_const(FolFormula f, const Truth& value) {
  return make(Kind::SubConst, value, {}, {}, {}, {std::move(f)});
}

FolFormula FolFormula::neg(FolFormula f) {
  return make(Kind::Neg, {}, {}, {}, {}, {std::move(f)});
}

FolFormula FolFormula::conj(FolFormula lhs, FolFormula rhs) {
  return make(Kind::And, {}, {}, {}, {}, {std::move(lhs), std::move(rhs)});
}

FolFormula FolFormula::exists(std::string var, FolFormula body) {
  if (var.empty()) throw ValueError("empty quantified variable");
  return make(Kind::Exists, {}, {}, std::move(var), {}, {std::move(body)});
}

FolFormula FolFormula::disj(FolFormula lhs, FolFormula rhs) {
  return neg(conj(neg(std::move(lhs)), neg(std::move(rhs))));
}

FolFormula FolFormula::implies(FolFormula lhs, FolFormula rhs) {
  return disj(neg(std::move(lhs)), std::move(rhs));
}

FolFormula::Kind FolFormula::kind() const { return node_->kind; }
const Truth& FolFormula::value() const { return node_->value; }
const std::string& FolFormula::atom_name() const { return node_->atom; }
const std::string& FolFormula::var1() const { return node_->var1; }
const std::string& FolFormula::var2() const { return node_->var2; }
const FolFormula& FolFormula::child() const { return node_->children.at(0); }
const FolFormula& FolFormula::lhs() const { return node_->children.at(0); }
const FolFormula& FolFormula::rhs() const { return node_->children.at(1); }
int FolFormula::qrank() const { return node_->qrank; }
int FolFormula::size() const { return node_->size; }

std::set<std::string> FolFormula::free_variables() const {
  std::set<std::string> out;
  switch (kind()) {
    case Kind::Constant:
      break;
    case Kind::AtomApp:
      out.insert(var1());
      break;
    case Kind::Rel:
    case Kind::Eq:
      out.insert(var1());
      out.insert(var2());
      break;
    case Kind::SubConst:
    case Kind::Neg:
      out = child().free_variables();
      break;
    case Kind::And: {
      out = lhs().free_variables();
      auto r = rhs().free_variables();
      out.insert(r.begin(), r.end());
      break;
    }
    case Kind::Exists:
      out = child().free_variables();
      out.erase(var1());
      break;
  }
  return out;
}

std::set<std::string> FolFormula::atoms() const {
  std::set<std::string> out;
  if (kind() == Kind::AtomApp) out.insert(atom_name());
  for (const auto& c : node_->children) {
    auto sub = c.atoms();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

bool operator==(const FolFormula& a, const FolFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.node_->qrank != b.node_->qrank || a.node_->size != b.node_->size) return false;
  if (a.node_->value != b.node_->value || a.node_->atom != b.node_->atom) return false;
  if (a.node_->var1 != b.node_->var1 || a.node_->var2 != b.node_->var2) return false;
  if (a.node_->children.size() != b.node_->children.size()) return false;
  for (std::size_t i = 0; i < a.node_->children.size(); ++i) {
    if (!(a.node_->children[i] == b.node_->children[i])) return false;
  }
  return true;
}

}  // namespace fzmod
