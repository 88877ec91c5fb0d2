// Object facade over the dyn API.  Every method is one dyn call; the only
// logic here is the lazy & chain, which becomes a single product.

#include <atomic>
#include <fstream>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <dynwfa/dyn/api.hpp>
#include <dynwfa/dyn/registry.hpp>

namespace py = pybind11;
namespace dyn = dynwfa::dyn;

namespace
{
  std::atomic<std::size_t> product_calls = 0;

  struct script_context
  {
    dyn::context v;
  };

  struct script_weight
  {
    dyn::weight v;
  };

  struct script_expression
  {
    dyn::expression v;
  };

  struct script_automaton
  {
    dyn::automaton v;
  };

  /// a1 & a2 & ... kept as a list until it is needed.
  struct lazy_conjunction
  {
    std::vector<dyn::automaton> operands;

    script_automaton value() const
    {
      ++product_calls;
      return {dyn::product(operands)};
    }
  };

  script_automaton read_text_or_file(const std::string& s)
  {
    if (s.find("->") != std::string::npos)
      return {dyn::read_automaton(s)};
    std::ifstream is(s, std::ios::binary);
    if (!is)
      throw std::invalid_argument("automaton: cannot open " + s);
    std::ostringstream o;
    o << is.rdbuf();
    return {dyn::read_automaton(o.str())};
  }
}

PYBIND11_MODULE(dynwfa, m)
{
  m.doc() = "Weighted automata through the dyn layer";

  py::register_exception<dyn::error>(m, "Error", PyExc_RuntimeError);

  py::class_<script_context>(m, "Context")
    .def("__str__", [](const script_context& c) { return dyn::to_string(c.v); })
    .def("__repr__", [](const script_context& c) { return dyn::to_string(c.v); })
    .def("expression", [](const script_context& c, const std::string& t) {
        return script_expression{dyn::make_expression(c.v, t)};
      })
    .def("automaton", [](const script_context& c, const std::string& body) {
        return script_automaton{dyn::read_automaton(c.v, body)};
      });

  py::class_<script_weight>(m, "Weight")
    .def("__add__", [](const script_weight& l, const script_weight& r) {
        return script_weight{dyn::add_weights(l.v, r.v)};
      })
    .def("weightset", [](const script_weight& w) { return w.v.vname(); })
    .def("__str__", [](const script_weight& w) { return dyn::to_string(w.v); })
    .def("__repr__", [](const script_weight& w) { return dyn::to_string(w.v); })
    .def("__eq__", [](const script_weight& l, const script_weight& r) {
        return l.v.vname() == r.v.vname()
               && dyn::to_string(l.v) == dyn::to_string(r.v);
      });

  py::class_<script_expression>(m, "Expression")
    .def("thompson", [](const script_expression& e) {
        return script_automaton{dyn::thompson(e.v)};
      })
    .def("__str__", [](const script_expression& e) { return dyn::to_string(e.v); })
    .def("__repr__", [](const script_expression& e) { return dyn::to_string(e.v); });

  py::class_<script_automaton>(m, "Automaton")
    .def("evaluate", [](const script_automaton& a, const std::string& w) {
        return script_weight{dyn::evaluate(a.v, w)};
      })
    .def("__call__", [](const script_automaton& a, const std::string& w) {
        return script_weight{dyn::evaluate(a.v, w)};
      })
    .def("is_proper", [](const script_automaton& a) { return dyn::is_proper(a.v); })
    .def("proper", [](const script_automaton& a) {
        return script_automaton{dyn::proper(a.v)};
      })
    .def("determinize", [](const script_automaton& a) {
        return script_automaton{dyn::determinize(a.v)};
      })
    .def("minimize", [](const script_automaton& a, const std::string& algo) {
        return script_automaton{dyn::minimize(a.v, algo)};
      }, py::arg("algo") = "auto")
    .def("focus", [](const script_automaton& a, unsigned tape) {
        return script_automaton{dyn::focus(a.v, tape)};
      })
    .def("strip", [](const script_automaton& a) {
        return script_automaton{dyn::strip(a.v)};
      })
    .def("expression", [](const script_automaton& a) {
        return script_expression{dyn::to_expression(a.v)};
      })
    .def("num_states", [](const script_automaton& a) { return dyn::num_states(a.v); })
    .def("__add__", [](const script_automaton& l, const script_automaton& r) {
        return script_automaton{dyn::union_(l.v, r.v)};
      })
    .def("__and__", [](const script_automaton& l, const script_automaton& r) {
        return lazy_conjunction{{l.v, r.v}};
      })
    .def("__str__", [](const script_automaton& a) { return dyn::to_string(a.v); })
    .def("__repr__", [](const script_automaton& a) { return dyn::to_string(a.v); })
    .def("_repr_dot_", [](const script_automaton& a) {
        return dyn::to_string(a.v, "dot");
      });

  py::class_<lazy_conjunction>(m, "LazyConjunction")
    .def("__and__", [](const lazy_conjunction& l, const script_automaton& r) {
        auto res = l;
        res.operands.push_back(r.v);
        return res;
      })
    .def("__len__", [](const lazy_conjunction& l) { return l.operands.size(); })
    .def("value", &lazy_conjunction::value)
    .def("evaluate", [](const lazy_conjunction& l, const std::string& w) {
        return script_weight{dyn::evaluate(l.value().v, w)};
      })
    .def("__call__", [](const lazy_conjunction& l, const std::string& w) {
        return script_weight{dyn::evaluate(l.value().v, w)};
      })
    .def("__str__", [](const lazy_conjunction& l) {
        return dyn::to_string(l.value().v);
      });

  m.def("context", [](const std::string& spec) {
      return script_context{dyn::make_context(spec)};
    });
  m.def("expression", [](const script_context& c, const std::string& t) {
      return script_expression{dyn::make_expression(c.v, t)};
    });
  m.def("automaton", &read_text_or_file,
        "An automaton from its text or from a file name");
  m.def("weight", [](const std::string& ws, py::object v) {
      return script_weight{dyn::make_weight(ws, py::str(v).cast<std::string>())};
    });
  m.def("_product_calls", [] { return product_calls.load(); });
}
