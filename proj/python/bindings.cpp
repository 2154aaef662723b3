// Python bindings for the main operations: parsing, evaluation, distances,
// games, witness synthesis, approximation, signatures and transformations.
// Truth values cross the boundary as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fzmod/approx.hpp"
#include "fzmod/check.hpp"
#include "fzmod/errors.hpp"
#include "fzmod/games.hpp"
#include "fzmod/metrics.hpp"
#include "fzmod/parse.hpp"
#include "fzmod/print.hpp"
#include "fzmod/semantics.hpp"
#include "fzmod/transforms.hpp"

namespace py = pybind11;
using namespace fzmod;

namespace {

py::object fraction_type() {
  return py::module_::import("fractions").attr("Fraction");
}

py::object to_fraction(const Truth& t) { return fraction_type()(t.num(), t.den()); }

Truth to_truth(const py::object& value) {
  if (py::isinstance<py::str>(value)) return Truth::parse(value.cast<std::string>());
  if (py::isinstance<py::int_>(value)) {
    return Truth::from_fraction(value.cast<std::int64_t>(), 1);
  }
  py::object frac = fraction_type()(value);
  return Truth::from_fraction(frac.attr("numerator").cast<std::int64_t>(),
                              frac.attr("denominator").cast<std::int64_t>());
}

Assignment to_assignment(const Model& m, const py::dict& env) {
  Assignment out;
  for (const auto& item : env) {
    out[item.first.cast<std::string>()] = m.state(item.second.cast<std::string>());
  }
  return out;
}

std::optional<int> to_depth(const py::object& depth) {
  if (depth.is_none()) return std::nullopt;
  return depth.cast<int>();
}

py::dict table_to_dict(const DistanceTable& t) {
  py::dict out;
  for (int a = 0; a < t.size(); ++a) {
    for (int b = 0; b < t.size(); ++b) {
      out[py::make_tuple(t.state_names()[a], t.state_names()[b])] = to_fraction(t.at(a, b));
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(fzmod, m) {
  m.doc() = "Fuzzy relational models: Zadeh modal/FOL logic, behavioural distances, games";

  py::register_exception<Error>(m, "FzmodError");

  py::class_<Model>(m, "Model")
      .def_static("parse", [](const std::string& text) { return parse_model(text); })
      .def("__str__", [](const Model& self) { return print_model(self); })
      .def_property_readonly("states", [](const Model& self) { return self.states(); })
      .def_property_readonly("atoms", [](const Model& self) { return self.atoms(); })
      .def("valuation",
           [](const Model& self, const std::string& state, const std::string& atom) {
             return to_fraction(self.valuation(self.state(state), self.atom(atom)));
           })
      .def("relation", [](const Model& self, const std::string& from, const std::string& to) {
        return to_fraction(self.relation(self.state(from), self.state(to)));
      });

  py::class_<ModalFormula>(m, "ModalFormula")
      .def_static("parse", [](const std::string& text) { return parse_modal(text); })
      .def("__str__", [](const ModalFormula& self) { return print_modal(self); })
      .def("__eq__", [](const ModalFormula& a, const ModalFormula& b) { return a == b; })
      .def_property_readonly("rank", &ModalFormula::rank);

  py::class_<FolFormula>(m, "FolFormula")
      .def_static("parse", [](const std::string& text) { return parse_fol(text); })
      .def("__str__", [](const FolFormula& self) { return print_fol(self); })
      .def("__eq__", [](const FolFormula& a, const FolFormula& b) { return a == b; })
      .def_property_readonly("qrank", &FolFormula::qrank)
      .def_property_readonly("free_variables", [](const FolFormula& self) {
        return self.free_variables();
      });

  py::class_<DistanceTable>(m, "DistanceTable")
      .def("__str__", [](const DistanceTable& self) { return self.to_text(); })
      .def("at",
           [](const DistanceTable& self, const std::string& a, const std::string& b) {
             return to_fraction(self.at(a, b));
           })
      .def("as_dict", &table_to_dict)
      .def_property_readonly("states", &DistanceTable::state_names);

  m.def("parse_model", [](const std::string& text) { return parse_model(text); });
  m.def("parse_modal", [](const std::string& text) { return parse_modal(text); });
  m.def("parse_fol", [](const std::string& text) { return parse_fol(text); });
  m.def("fork_model", &fork_model);

  m.def("eval_modal", [](const Model& model, const py::object& formula,
                         const std::string& state) {
    ModalFormula f = py::isinstance<py::str>(formula) ? parse_modal(formula.cast<std::string>())
                                                      : formula.cast<ModalFormula>();
    return to_fraction(eval_modal(model, f, model.state(state)));
  });

  m.def("eval_fol", [](const Model& model, const py::object& formula, const py::dict& env) {
    FolFormula f = py::isinstance<py::str>(formula) ? parse_fol(formula.cast<std::string>())
                                                    : formula.cast<FolFormula>();
    return to_fraction(eval_fol(model, f, to_assignment(model, env)));
  });

  m.def(
      "standard_translation",
      [](const py::object& formula, const std::string& var) {
        ModalFormula f = py::isinstance<py::str>(formula)
                             ? parse_modal(formula.cast<std::string>())
                             : formula.cast<ModalFormula>();
        return standard_translation(f, var);
      },
      py::arg("formula"), py::arg("var") = "x");

  m.def(
      "depth_distance",
      [](const Model& model, int depth) { return depth_distance(model, depth); },
      py::arg("model"), py::arg("depth"));
  m.def("behavioural_distance", [](const Model& model) { return behavioural_distance(model); });
  m.def(
      "game_distance",
      [](const Model& model, const std::string& a, const std::string& b,
         const py::object& depth) {
        return to_fraction(
            game_distance_oracle(model, model.state(a), model.state(b), to_depth(depth)));
      },
      py::arg("model"), py::arg("a"), py::arg("b"), py::arg("depth") = py::none());

  m.def(
      "bisim_winner",
      [](const Model& ma, const Model& mb, const std::string& a, const std::string& b,
         const py::object& epsilon, const py::object& depth) {
        auto outcome = bisim_wins(ma, mb, ma.state(a), mb.state(b), to_truth(epsilon),
                                  to_depth(depth));
        return player_name(outcome.winner());
      },
      py::arg("model_a"), py::arg("model_b"), py::arg("a"), py::arg("b"), py::arg("epsilon"),
      py::arg("depth") = py::none());

  m.def(
      "ef_winner",
      [](const Model& ma, const Model& mb, const std::vector<std::string>& as,
         const std::vector<std::string>& bs, const py::object& epsilon, int rounds) {
        StateVector va, vb;
        for (const auto& s : as) va.push_back(ma.state(s));
        for (const auto& s : bs) vb.push_back(mb.state(s));
        return player_name(ef_wins(ma, mb, va, vb, to_truth(epsilon), rounds).winner());
      },
      py::arg("model_a"), py::arg("model_b"), py::arg("a"), py::arg("b"), py::arg("epsilon"),
      py::arg("rounds"));

  m.def(
      "synth_witness",
      [](const Model& model, const std::string& a, const std::string& b, int depth,
         const py::object& delta) {
        return synth_witness(model, model.state(a), model.state(b), depth, to_truth(delta));
      },
      py::arg("model"), py::arg("a"), py::arg("b"), py::arg("depth"),
      py::arg("delta") = "1/100");

  m.def(
      "approximate_function",
      [](const Model& model, const py::dict& values, int depth, const py::object& eps) {
        std::vector<Truth> f(model.state_count());
        for (const auto& item : values) {
          f[model.state(item.first.cast<std::string>())] = to_truth(
              py::reinterpret_borrow<py::object>(item.second));
        }
        return approximate_function(model, StateFunction(model, std::move(f)), depth,
                                    to_truth(eps));
      },
      py::arg("model"), py::arg("values"), py::arg("depth"), py::arg("eps") = "1/20");

  m.def(
      "signature_str",
      [](const Model& model, const std::string& state, int depth) {
        return signature(model, model.state(state), depth).str();
      },
      py::arg("model"), py::arg("state"), py::arg("depth"));

  m.def(
      "quotient",
      [](const Model& model, int depth) {
        auto q = quotient_by_signature(model, depth);
        py::dict projection;
        for (StateId s = 0; s < model.state_count(); ++s) {
          projection[py::str(model.state_name(s))] = q.model.state_name(q.projection[s]);
        }
        return py::make_tuple(q.model, projection);
      },
      py::arg("model"), py::arg("depth"));

  m.def(
      "unravel",
      [](const Model& model, const std::string& root, int depth) {
        auto t = unravel(model, model.state(root), depth);
        return py::make_tuple(t.model, t.model.state_name(t.root));
      },
      py::arg("model"), py::arg("root"), py::arg("depth"));

  m.def(
      "partial_unravel",
      [](const Model& model, const std::string& root, int depth) {
        auto r = partial_unravel(model, model.state(root), depth);
        return py::make_tuple(r.model, r.model.state_name(r.root));
      },
      py::arg("model"), py::arg("root"), py::arg("depth"));

  m.def(
      "neighbourhood_restrict",
      [](const Model& model, const std::vector<std::string>& anchors, int radius) {
        std::vector<StateId> ids;
        for (const auto& s : anchors) ids.push_back(model.state(s));
        return neighbourhood_restrict(model, ids, radius);
      },
      py::arg("model"), py::arg("anchors"), py::arg("radius"));

  m.def(
      "gaifman_distance",
      [](const Model& model, const std::string& a, const std::string& b) -> py::object {
        auto d = gaifman_distance(model, model.state(a), model.state(b));
        if (!d) return py::none();
        return py::int_(*d);
      },
      py::arg("model"), py::arg("a"), py::arg("b"));

  m.def(
      "locality_check",
      [](const Model& model, const std::string& formula, const std::string& state, int radius,
         bool fol) {
        LocalityReport report =
            fol ? locality_check(model, parse_fol(formula), model.state(state), radius)
                : locality_check(model, parse_modal(formula), model.state(state), radius);
        return py::make_tuple(to_fraction(report.on_model), to_fraction(report.on_restriction),
                              report.equal);
      },
      py::arg("model"), py::arg("formula"), py::arg("state"), py::arg("radius"),
      py::arg("fol") = false);

  m.def(
      "run_check",
      [](const std::string& suite, std::uint64_t seed, int models, int formulas,
         int functions) {
        CheckParams params;
        params.seed = seed;
        params.models = models;
        params.formulas = formulas;
        params.functions_per_depth = functions;
        py::list rows;
        for (const auto& row : run_check_suite(suite, params)) {
          rows.append(py::make_tuple(row.suite, row.case_id, row.pass, row.detail));
        }
        return rows;
      },
      py::arg("suite"), py::arg("seed") = 42, py::arg("models") = 25, py::arg("formulas") = 100,
      py::arg("functions") = 8);

  m.attr("check_suites") = check_suite_names();
}
