#include "fzmod/model.hpp"

#include "fzmod/errors.hpp"

namespace fzmod {

StateId Model::add_state(std::string name) {
  if (name.empty()) throw ModelError("empty state name");
  if (state_index_.count(name)) throw ModelError("duplicate state '" + name + "'");
  StateId id = static_cast<StateId>(states_.size());
  state_index_.emplace(name, id);
  states_.push_back(std::move(name));
  val_.emplace_back();
  rel_.emplace_back();
  return id;
}

AtomId Model::add_atom(std::string name) {
  if (name.empty()) throw ModelError("empty atom name");
  if (atom_index_.count(name)) throw ModelError("duplicate atom '" + name + "'");
  AtomId id = static_cast<AtomId>(atoms_.size());
  atom_index_.emplace(name, id);
  atoms_.push_back(std::move(name));
  return id;
}

void Model::check_state(StateId s) const {
  if (s < 0 || s >= state_count()) throw ModelError("state id out of range");
}

void Model::set_valuation(StateId s, AtomId p, const Truth& value) {
  check_state(s);
  if (p < 0 || p >= atom_count()) throw ModelError("atom id out of range");
  if (value.is_zero()) {
    val_[s].erase(p);
  } else {
    val_[s][p] = value;
  }
}

void Model::set_relation(StateId from, StateId to, const Truth& value) {
  check_state(from);
  check_state(to);
  if (value.is_zero()) {
    rel_[from].erase(to);
  } else {
    rel_[from][to] = value;
  }
}

std::optional<StateId> Model::find_state(std::string_view name) const {
  auto it = state_index_.find(name);
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<AtomId> Model::find_atom(std::string_view name) const {
  auto it = atom_index_.find(name);
  if (it == atom_index_.end()) return std::nullopt;
  return it->second;
}

StateId Model::state(std::string_view name) const {
  auto id = find_state(name);
  if (!id) throw ModelError("unknown state '" + std::string(name) + "'");
  return *id;
}

AtomId Model::atom(std::string_view name) const {
  auto id = find_atom(name);
  if (!id) throw ModelError("unknown atom '" + std::string(name) + "'");
  return *id;
}

Truth Model::valuation(StateId s, AtomId p) const {
  check_state(s);
  auto it = val_[s].find(p);
  return it == val_[s].end() ? Truth::zero() : it->second;
}

Truth Model::relation(StateId from, StateId to) const {
  check_state(from);
  check_state(to);
  auto it = rel_[from].find(to);
  return it == rel_[from].end() ? Truth::zero() : it->second;
}

int Model::edge_count() const {
  int n = 0;
  for (const auto& row : rel_) n += static_cast<int>(row.size());
  return n;
}

DisjointUnion disjoint_union(const Model& a, const Model& b) {
  if (!a.same_atoms(b)) {
    throw ModelError("disjoint union requires equal atom sets");
  }
  DisjointUnion out;
  for (const auto& atom : a.atoms()) out.model.add_atom(atom);
  for (const auto& name : a.states()) out.left.push_back(out.model.add_state(name + "/L"));
  for (const auto& name : b.states()) out.right.push_back(out.model.add_state(name + "/R"));
  for (StateId s = 0; s < a.state_count(); ++s) {
    for (const auto& [p, v] : a.atom_values(s)) out.model.set_valuation(out.left[s], p, v);
    for (const auto& [t, v] : a.successors(s)) out.model.set_relation(out.left[s], out.left[t], v);
  }
  for (StateId s = 0; s < b.state_count(); ++s) {
    for (const auto& [p, v] : b.atom_values(s)) out.model.set_valuation(out.right[s], p, v);
    for (const auto& [t, v] : b.successors(s)) out.model.set_relation(out.right[s], out.right[t], v);
  }
  return out;
}

}  // namespace fzmod
