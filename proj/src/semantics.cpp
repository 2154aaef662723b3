#include "fzmod/semantics.hpp"

#include <sstream>

#include "fzmod/errors.hpp"
#include "fzmod/parse.hpp"

namespace fzmod {

StateFunction::StateFunction(const Model& model, std::vector<Truth> values)
    : values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != model.state_count()) {
    throw ModelError("state function must be total over the model's states");
  }
}

StateFunction StateFunction::constant(const Model& model, const Truth& value) {
  return StateFunction(model, std::vector<Truth>(model.state_count(), value));
}

StateFunction StateFunction::from_atom(const Model& model, AtomId p) {
  std::vector<Truth> values(model.state_count());
  for (StateId s = 0; s < model.state_count(); ++s) values[s] = model.valuation(s, p);
  return StateFunction(model, std::move(values));
}

StateFunction StateFunction::from_modal(const Model& model, const ModalFormula& f) {
  std::vector<Truth> values(model.state_count());
  for (StateId s = 0; s < model.state_count(); ++s) values[s] = eval_modal(model, f, s);
  return StateFunction(model, std::move(values));
}

StateFunction StateFunction::parse(const Model& model, std::string_view text) {
  std::vector<Truth> values(model.state_count());
  std::vector<bool> given(model.state_count(), false);
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head, state, value;
    if (!(ls >> head)) continue;
    if (head != "fun" || !(ls >> state >> value)) {
      throw ModelError("expected 'fun <state> <truth>' lines, got: " + line);
    }
    std::string extra;
    if (ls >> extra) throw ModelError("trailing input in line: " + line);
    StateId s = model.state(state);
    if (given[s]) throw ModelError("duplicate 'fun' entry for state '" + state + "'");
    given[s] = true;
    values[s] = Truth::parse(value);
  }
  for (StateId s = 0; s < model.state_count(); ++s) {
    if (!given[s]) {
      throw ModelError("state function misses state '" + model.state_name(s) + "'");
    }
  }
  return StateFunction(model, std::move(values));
}

Truth eval_modal(const Model& m, const ModalFormula& f, StateId state) {
  using Kind = ModalFormula::Kind;
  switch (f.kind()) {
    case Kind::Constant:
      return f.value();
    case Kind::Atom: {
      auto p = m.find_atom(f.atom_name());
      if (!p) throw EvalError("undeclared atom '" + f.atom_name() + "'");
      return m.valuation(state, *p);
    }
    case Kind::SubConst:
      return truncated_sub(eval_modal(m, f.child(), state), f.value());
    case Kind::Neg:
      return complement(eval_modal(m, f.child(), state));
    case Kind::And:
      return min(eval_modal(m, f.lhs(), state), eval_modal(m, f.rhs(), state));
    case Kind::Diamond: {
      Truth best = Truth::zero();
      for (const auto& [succ, weight] : m.successors(state)) {
        best = max(best, min(weight, eval_modal(m, f.child(), succ)));
      }
      return best;
    }
  }
  throw EvalError("corrupt modal formula");
}

Truth eval_modal(const Model& m, const ModalFormula& f, std::string_view state) {
  return eval_modal(m, f, m.state(state));
}

namespace {

Truth eval_fol_rec(const Model& m, const FolFormula& f, Assignment& env) {
  using Kind = FolFormula::Kind;
  auto lookup = [&](const std::string& var) -> StateId {
    auto it = env.find(var);
    if (it == env.end()) throw EvalError("unbound variable '" + var + "'");
    return it->second;
  };
  switch (f.kind()) {
    case Kind::Constant:
      return f.value();
    case Kind::AtomApp: {
      auto p = m.find_atom(f.atom_name());
      if (!p) throw EvalError("undeclared atom '" + f.atom_name() + "'");
      return m.valuation(lookup(f.var1()), *p);
    }
    case Kind::Rel:
      return m.relation(lookup(f.var1()), lookup(f.var2()));
    case Kind::Eq:
      return lookup(f.var1()) == lookup(f.var2()) ? Truth::one() : Truth::zero();
    case Kind::SubConst:
      return truncated_sub(eval_fol_rec(m, f.child(), env), f.value());
    case Kind::Neg:
      return complement(eval_fol_rec(m, f.child(), env));
    case Kind::And:
      return min(eval_fol_rec(m, f.lhs(), env), eval_fol_rec(m, f.rhs(), env));
    case Kind::Exists: {
      // Save and restore any shadowed binding.
      auto it = env.find(f.var1());
      std::optional<StateId> saved;
      if (it != env.end()) saved = it->second;
      Truth best = Truth::zero();
      for (StateId s = 0; s < m.state_count(); ++s) {
        env[f.var1()] = s;
        best = max(best, eval_fol_rec(m, f.child(), env));
        if (best.is_one()) break;
      }
      if (saved) {
        env[f.var1()] = *saved;
      } else {
        env.erase(f.var1());
      }
      return best;
    }
  }
  throw EvalError("corrupt FOL formula");
}

void translate_rec(const ModalFormula& f, const std::string& var, int& counter,
                   const std::string& outer_var, FolFormula* out) {
  using Kind = ModalFormula::Kind;
  switch (f.kind()) {
    case Kind::Constant:
      *out = FolFormula::constant(f.value());
      return;
    case Kind::Atom:
      *out = FolFormula::atom_app(f.atom_name(), var);
      return;
    case Kind::SubConst: {
      FolFormula sub = FolFormula::constant(Truth::zero());
      translate_rec(f.child(), var, counter, outer_var, &sub);
      *out = FolFormula::sub_const(std::move(sub), f.value());
      return;
    }
    case Kind::Neg: {
      FolFormula sub = FolFormula::constant(Truth::zero());
      translate_rec(f.child(), var, counter, outer_var, &sub);
      *out = FolFormula::neg(std::move(sub));
      return;
    }
    case Kind::And: {
      FolFormula l = FolFormula::constant(Truth::zero());
      FolFormula r = FolFormula::constant(Truth::zero());
      translate_rec(f.lhs(), var, counter, outer_var, &l);
      translate_rec(f.rhs(), var, counter, outer_var, &r);
      *out = FolFormula::conj(std::move(l), std::move(r));
      return;
    }
    case Kind::Diamond: {
      std::string fresh = "v" + std::to_string(counter++);
      if (fresh == outer_var) fresh = "v" + std::to_string(counter++);
      FolFormula body = FolFormula::constant(Truth::zero());
      translate_rec(f.child(), fresh, counter, outer_var, &body);
      *out = FolFormula::exists(fresh, FolFormula::conj(FolFormula::rel(var, fresh),
                                                        std::move(body)));
      return;
    }
  }
}

}  // namespace

Truth eval_fol(const Model& m, const FolFormula& f, const Assignment& assignment) {
  for (const auto& var : f.free_variables()) {
    if (!assignment.count(var)) throw EvalError("unbound variable '" + var + "'");
  }
  for (const auto& [var, s] : assignment) {
    if (s < 0 || s >= m.state_count()) {
      throw EvalError("assignment of '" + var + "' is not a state of the model");
    }
  }
  Assignment env = assignment;
  return eval_fol_rec(m, f, env);
}

Truth diamond_apply(const Model& m, const StateFunction& f, StateId state) {
  if (f.size() != m.state_count()) {
    throw ModelError("state function not defined on this model");
  }
  Truth best = Truth::zero();
  for (const auto& [succ, weight] : m.successors(state)) {
    best = max(best, min(weight, f.at(succ)));
  }
  return best;
}

FolFormula standard_translation(const ModalFormula& f, const std::string& var) {
  int counter = 0;
  FolFormula out = FolFormula::constant(Truth::zero());
  translate_rec(f, var, counter, var, &out);
  return out;
}

}  // namespace fzmod
