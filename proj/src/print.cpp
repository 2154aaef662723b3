#include "fzmod/print.hpp"

#include <sstream>

namespace fzmod {

namespace {

void print_modal_into(const ModalFormula& f, std::ostream& os) {
  using Kind = ModalFormula::Kind;
  switch (f.kind()) {
    case Kind::Constant:
      os << f.value().str();
      break;
    case Kind::Atom:
      os << f.atom_name();
      break;
    case Kind::SubConst:
      os << "(";
      print_modal_into(f.child(), os);
      os << " .- " << f.value().str() << ")";
      break;
    case Kind::Neg:
      os << "~";
      print_modal_into(f.child(), os);
      break;
    case Kind::And:
      os << "(";
      print_modal_into(f.lhs(), os);
      os << " & ";
      print_modal_into(f.rhs(), os);
      os << ")";
      break;
    case Kind::Diamond:
      os << "<>";
      print_modal_into(f.child(), os);
      break;
  }
}

void print_fol_into(const FolFormula& f, std::ostream& os) {
  using Kind = FolFormula::Kind;
  switch (f.kind()) {
    case Kind::Constant:
      os << f.value().str();
      break;
    case Kind::AtomApp:
      os << f.atom_name() << "(" << f.var1() << ")";
      break;
    case Kind::Rel:
      os << "R(" << f.var1() << "," << f.var2() << ")";
      break;
    case Kind::Eq:
      os << f.var1() << " = " << f.var2();
      break;
    case Kind::SubConst:
      os << "(";
      print_fol_into(f.child(), os);
      os << " .- " << f.value().str() << ")";
      break;
    case Kind::Neg:
      os << "~";
      // Equality binds looser than '~' in the grammar, so parenthesize it.
      if (f.child().kind() == Kind::Eq) {
        os << "(";
        print_fol_into(f.child(), os);
        os << ")";
      } else {
        print_fol_into(f.child(), os);
      }
      break;
    case Kind::And:
      os << "(";
      print_fol_into(f.lhs(), os);
      os << " & ";
      print_fol_into(f.rhs(), os);
      os << ")";
      break;
    case Kind::Exists:
      os << "E " << f.var1() << ". ";
      print_fol_into(f.child(), os);
      break;
  }
}

}  // namespace

std::string print_modal(const ModalFormula& f) {
  std::ostringstream os;
  print_modal_into(f, os);
  return os.str();
}

std::string print_fol(const FolFormula& f) {
  std::ostringstream os;
  print_fol_into(f, os);
  return os.str();
}

std::string print_model(const Model& m) {
  std::ostringstream os;
  os << "atoms:";
  for (const auto& a : m.atoms()) os << " " << a;
  os << "\n";
  os << "states:";
  for (const auto& s : m.states()) os << " " << s;
  os << "\n";
  for (StateId s = 0; s < m.state_count(); ++s) {
    for (const auto& [p, v] : m.atom_values(s)) {
      os << "val " << m.state_name(s) << " " << m.atom_name(p) << " " << v.str() << "\n";
    }
  }
  for (StateId s = 0; s < m.state_count(); ++s) {
    for (const auto& [t, v] : m.successors(s)) {
      os << "edge " << m.state_name(s) << " " << m.state_name(t) << " " << v.str() << "\n";
    }
  }
  return os.str();
}

}  // namespace fzmod
