#pragma once

#include <string>

#include "fzmod/formula.hpp"
#include "fzmod/model.hpp"

namespace fzmod {

// Serializers. Round trip: parse_*(print_*(x)) is structurally equal to x.
// Binary connectives are always parenthesized, prefix operators are not.
std::string print_modal(const ModalFormula& f);
std::string print_fol(const FolFormula& f);
std::string print_model(const Model& m);

}  // namespace fzmod
