#include "fzmod/transforms.hpp"

#include <algorithm>
#include <deque>

#include "fzmod/errors.hpp"
#include "fzmod/semantics.hpp"

namespace fzmod {

GaifmanGraph::GaifmanGraph(const Model& m) : adj_(m.state_count()) {
  for (StateId a = 0; a < m.state_count(); ++a) {
    for (const auto& [b, v] : m.successors(a)) {
      (void)v;
      if (a == b) continue;
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
}

std::vector<std::optional<int>> GaifmanGraph::distances_from(
    const std::vector<StateId>& sources) const {
  std::vector<std::optional<int>> dist(adj_.size());
  std::deque<StateId> queue;
  for (StateId s : sources) {
    if (s < 0 || s >= static_cast<StateId>(adj_.size())) {
      throw ModelError("state id out of range");
    }
    if (!dist[s]) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (StateId t : adj_[s]) {
      if (!dist[t]) {
        dist[t] = *dist[s] + 1;
        queue.push_back(t);
      }
    }
  }
  return dist;
}

std::optional<int> gaifman_distance(const Model& m, StateId a, StateId b) {
  return GaifmanGraph(m).distances_from({a})[b];
}

Model neighbourhood_restrict(const Model& m, const std::vector<StateId>& anchors, int radius) {
  if (radius < 0) throw ValueError("radius must be non-negative");
  auto dist = GaifmanGraph(m).distances_from(anchors);
  std::vector<StateId> keep;
  for (StateId s = 0; s < m.state_count(); ++s) {
    if (dist[s] && *dist[s] <= radius) keep.push_back(s);
  }
  Model out;
  for (const auto& atom : m.atoms()) out.add_atom(atom);
  std::vector<StateId> to_new(m.state_count(), -1);
  for (StateId s : keep) to_new[s] = out.add_state(m.state_name(s));
  for (StateId s : keep) {
    for (const auto& [p, v] : m.atom_values(s)) out.set_valuation(to_new[s], p, v);
    for (const auto& [t, v] : m.successors(s)) {
      if (to_new[t] >= 0) out.set_relation(to_new[s], to_new[t], v);
    }
  }
  return out;
}

namespace {

// Injective path naming: components have '/' doubled and are joined by '/'.
std::string escape_component(const std::string& name) {
  std::string out;
  for (char c : name) {
    out.push_back(c);
    if (c == '/') out.push_back('/');
  }
  return out;
}

std::string path_name(const std::vector<StateId>& path, const Model& m) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out.push_back('/');
    out += escape_component(m.state_name(path[i]));
  }
  return out;
}

}  // namespace

TreeModel unravel(const Model& m, StateId root, int depth) {
  if (root < 0 || root >= m.state_count()) throw ModelError("state id out of range");
  if (depth < 0) throw ValueError("depth must be non-negative");
  TreeModel out;
  for (const auto& atom : m.atoms()) out.model.add_atom(atom);

  struct Entry {
    std::vector<StateId> path;
    StateId node;
  };
  std::deque<Entry> queue;

  auto add_node = [&](const std::vector<StateId>& path, std::optional<StateId> parent) {
    StateId node = out.model.add_state(path_name(path, m));
    out.parent.push_back(parent);
    StateId last = path.back();
    for (const auto& [p, v] : m.atom_values(last)) out.model.set_valuation(node, p, v);
    return node;
  };

  out.root = add_node({root}, std::nullopt);
  queue.push_back({{root}, out.root});
  while (!queue.empty()) {
    Entry e = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(e.path.size()) > depth) continue;  // path already has `depth` edges
    for (const auto& [succ, r] : m.successors(e.path.back())) {
      auto path = e.path;
      path.push_back(succ);
      StateId child = add_node(path, e.node);
      out.model.set_relation(e.node, child, r);
      queue.push_back({std::move(path), child});
    }
  }
  return out;
}

RootedModel partial_unravel(const Model& m, StateId root, int depth) {
  if (root < 0 || root >= m.state_count()) throw ModelError("state id out of range");
  if (depth < 0) throw ValueError("depth must be non-negative");
  RootedModel out;
  for (const auto& atom : m.atoms()) out.model.add_atom(atom);

  struct Entry {
    std::vector<StateId> path;
    StateId node;
  };
  std::deque<Entry> queue;

  auto add_tree_node = [&](const std::vector<StateId>& path) {
    StateId node = out.model.add_state(path_name(path, m));
    StateId last = path.back();
    for (const auto& [p, v] : m.atom_values(last)) out.model.set_valuation(node, p, v);
    return node;
  };

  // A full fresh copy of the model under `prefix`, entered from `entry` with
  // the original edges of `via`. The prefix is taken by value: adding states
  // invalidates references into the model's name table.
  auto attach_copy = [&](StateId entry, std::string prefix, StateId via) {
    std::vector<StateId> copy(m.state_count());
    for (StateId s = 0; s < m.state_count(); ++s) {
      copy[s] = out.model.add_state(prefix + "/" + escape_component(m.state_name(s)));
      for (const auto& [p, v] : m.atom_values(s)) out.model.set_valuation(copy[s], p, v);
    }
    for (StateId s = 0; s < m.state_count(); ++s) {
      for (const auto& [t, v] : m.successors(s)) out.model.set_relation(copy[s], copy[t], v);
    }
    for (const auto& [t, v] : m.successors(via)) out.model.set_relation(entry, copy[t], v);
  };

  out.root = add_tree_node({root});
  queue.push_back({{root}, out.root});
  while (!queue.empty()) {
    Entry e = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(e.path.size()) == depth + 1) {
      // Depth-`depth` leaf: its further behaviour is a fresh copy of the model.
      attach_copy(e.node, out.model.state_name(e.node), e.path.back());
      continue;
    }
    for (const auto& [succ, r] : m.successors(e.path.back())) {
      auto path = e.path;
      path.push_back(succ);
      StateId child = add_tree_node(path);
      out.model.set_relation(e.node, child, r);
      queue.push_back({std::move(path), child});
    }
  }
  return out;
}

LocalityReport locality_check(const Model& m, const ModalFormula& f, StateId state, int radius) {
  Model restricted = neighbourhood_restrict(m, {state}, radius);
  LocalityReport report;
  report.on_model = eval_modal(m, f, state);
  report.on_restriction = eval_modal(restricted, f, restricted.state(m.state_name(state)));
  report.equal = report.on_model == report.on_restriction;
  return report;
}

LocalityReport locality_check(const Model& m, const FolFormula& f, StateId state, int radius) {
  auto free_vars = f.free_variables();
  if (free_vars.size() > 1) {
    throw EvalError("locality check requires at most one free variable");
  }
  Model restricted = neighbourhood_restrict(m, {state}, radius);
  Assignment on_model, on_restriction;
  if (!free_vars.empty()) {
    on_model[*free_vars.begin()] = state;
    on_restriction[*free_vars.begin()] = restricted.state(m.state_name(state));
  }
  LocalityReport report;
  report.on_model = eval_fol(m, f, on_model);
  report.on_restriction = eval_fol(restricted, f, on_restriction);
  report.equal = report.on_model == report.on_restriction;
  return report;
}

}  // namespace fzmod
