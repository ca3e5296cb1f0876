#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "subshift/chain.hpp"
#include "subshift/configuration.hpp"
#include "subshift/counter_machine.hpp"
#include "subshift/derivative1d.hpp"
#include "subshift/diamond.hpp"
#include "subshift/errors.hpp"
#include "subshift/grid.hpp"
#include "subshift/poset.hpp"
#include "subshift/sft2d.hpp"
#include "subshift/sofic1d.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace subshift;

// Everything crosses the boundary as JSON text or pattern text; the Python
// package wraps these in dicts and row lists.
namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(e.what());
  }
}

LabeledGraph graph(const std::string& text) { return graph_from_json(parse(text)); }
TileSet2D tileset(const std::string& text) { return tileset_from_json(parse(text)); }

Pattern2D pattern(const std::string& text, const Alphabet& a) {
  if (!text.empty() && text[0] == '{') {
    auto cw = config_from_text(text);
    Pattern2D p = cw.window;
    for (auto& c : p.cells)
      if (c != kHole) c = a.index(cw.alphabet.name(c));
    return p;
  }
  return pattern_from_text(text, a);
}

Budget budget(std::uint64_t max_states, double timeout_s) { return {max_states, max_states, timeout_s}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of subshift_lab";

  static PyObject* budget_type = PyErr_NewException("subshift_lab._core.BudgetError", PyExc_RuntimeError, nullptr);
  m.attr("BudgetError") = py::handle(budget_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetError& e) {
      py::object err = py::reinterpret_borrow<py::object>(budget_type)(e.what());
      err.attr("partial_count") = e.partial_count();
      PyErr_SetObject(budget_type, err.ptr());
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const SimulationError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def("rank", [](const std::string& g) {
    auto chain = rank_chain(graph(g));
    return py::make_tuple(chain.rank, chain.perfect_kernel_empty);
  });
  m.def("is_countable", [](const std::string& g) { return is_countable(graph(g)); });
  m.def("derive", [](const std::string& g) { return graph_to_json(derive(graph(g))).dump(); });
  m.def("language_equal", [](const std::string& a, const std::string& b) { return language_equal(graph(a), graph(b)); });
  m.def("context_classes", [](const std::string& g, std::size_t probe_len) {
    auto lg = graph(g);
    auto cp = context_partition(lg, probe_len);
    py::list out;
    for (const auto& c : cp.classes) {
      std::vector<std::pair<std::string, std::string>> rel;
      for (auto [p, q] : c.relation.pairs()) rel.emplace_back(lg.state_name(p), lg.state_name(q));
      out.append(py::make_tuple(lg.alphabet().format_word(c.representative), rel));
    }
    return py::make_tuple(out, cp.stabilized);
  });
  m.def("cylinder_class", [](const std::string& g, const std::string& w) {
    auto lg = graph(g);
    return std::string(to_string(cylinder_class(lg, lg.alphabet().parse_word(w))));
  });
  m.def("cylinder_growth", [](const std::string& g, const std::string& w, std::size_t k_max) {
    auto lg = graph(g);
    return cylinder_growth_oracle(lg, lg.alphabet().parse_word(w), k_max);
  });

  m.def("count_admissible",
        [](const std::string& ts, int w, int h, std::uint64_t max_states, double timeout_s) {
          return count_admissible(tileset(ts), w, h, budget(max_states, timeout_s));
        });
  m.def("locally_admissible", [](const std::string& ts, const std::string& p) {
    auto t = tileset(ts);
    return locally_admissible(t, pattern(p, t.alphabet()));
  });
  m.def("extend",
        [](const std::string& ts, const std::string& p, int r, std::uint64_t max_states,
           double timeout_s) -> std::optional<std::string> {
          auto t = tileset(ts);
          auto ext = extend(t, pattern(p, t.alphabet()), r, budget(max_states, timeout_s));
          if (!ext) return std::nullopt;
          return pattern_to_text(*ext, t.alphabet());
        });
  m.def("approx_derivative_member",
        [](const std::string& ts, const std::string& p, int n, int mm, std::uint64_t max_states, double timeout_s) {
          auto t = tileset(ts);
          return approx_derivative_member(t, pattern(p, t.alphabet()), n, mm, budget(max_states, timeout_s));
        });

  m.def("grid_shift", [] { return tileset_to_json(grid_shift()).dump(); });
  m.def("diamond_shift", [] { return tileset_to_json(diamond_shift()).dump(); });
  m.def("grid_window", [](int side, int x0, int y0, int w, int h) {
    return config_to_text(grid_window(side, {x0, y0, w, h}));
  });
  m.def("diamond_core", [](int n, int mm) { return config_to_text(diamond_core(n, mm)); });
  m.def("chain_point", [](int i, int x0, int y0, int w, int h) {
    return config_to_text(chain_point(i, {x0, y0, w, h}));
  });
  m.def("verify_chain", [](int i, int j, int small, int big) {
    auto ev = verify_chain(i, j, small, big);
    return py::make_tuple(ev.leq, ev.geq);
  });
  m.def("poset_stats", [](const std::string& p) {
    auto poset = poset_from_json(parse(p));
    auto st = poset_stats(poset);
    const auto& names = poset.elements();
    py::dict out;
    for (std::size_t i = 0; i < poset.size(); ++i) {
      std::vector<std::string> preds;
      for (auto q : st.p[i]) preds.push_back(names[q]);
      out[py::str(names[i])] = py::make_tuple(st.r[i], preds, st.k[i]);
    }
    std::vector<std::string> minimal;
    for (auto q : st.minimal) minimal.push_back(names[q]);
    return py::make_tuple(out, minimal);
  });
  m.def("phi", &phi);
  m.def("verify_embedding", [](const std::string& p, int small, int big) {
    return verify_embedding(poset_from_json(parse(p)), small, big);
  });
  m.def("simulate", [](const std::string& machine, int steps, const std::vector<int>& choices) {
    auto spec = machine.empty() ? doubling_machine() : machine_from_json(parse(machine));
    std::vector<std::pair<std::string, std::vector<long long>>> out;
    for (const auto& c : simulate(spec, steps, choices))
      out.emplace_back(spec.states.at(static_cast<std::size_t>(c.state)),
                       std::vector<long long>(c.values.begin(), c.values.end()));
    return out;
  });
}
