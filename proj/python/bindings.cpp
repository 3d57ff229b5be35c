#include "gtlab/json_io.hpp"
#include "gtlab/surface_ops.hpp"
#include "gtlab/verify.hpp"
#include "gtlab/word_parser.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gtlab;

namespace {

// Values cross the boundary as JSON text in the documented file formats.
PyObject* g_parse_error = nullptr;

std::string dump(const Json& j) { return j.dump(); }

Expansion expansion_of(const std::string& text) { return expansion_from_json(parse_json(text)); }

AssocCoeffs assoc_of(const std::optional<std::string>& text, bool even) {
  if (text) return assoc_from_json(parse_json(*text));
  if (!even) throw DomainError("associator coefficients or even=True required");
  AssocCoeffs c;
  c.even_mode = true;
  return c;
}

}  // namespace

PYBIND11_MODULE(_gtlab, m) {
  m.doc() = "Exact loop operations on a punctured disk through formal expansions";

  // leaked on purpose: the translator may run during interpreter shutdown
  g_parse_error = py::exception<ParseError>(m, "ParseError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::handle cls(g_parse_error);
      py::object exc = cls(e.what());
      exc.attr("offset") = e.offset();
      exc.attr("expected") = e.expected();
      PyErr_SetObject(g_parse_error, exc.ptr());
    } catch (const SolverInconsistent& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("series_s", [](int n) {
    std::vector<std::string> out;
    UniSeries s = series_s(n);
    for (const auto& c : s.coeffs()) out.push_back(format_rat(c));
    return out;
  });
  m.def("bernoulli", [](int n) { return format_rat(bernoulli(n)); });
  m.def("bernoulli_coeffs", [](int max_index, const std::string& even_value) {
    return dump(to_json(AssocCoeffs::bernoulli_valid(max_index, parse_rat(even_value))));
  });
  m.def("validate_assoc", [](const std::string& assoc, int max_j) {
    return validate_assoc_coeffs(assoc_from_json(parse_json(assoc)), max_j).ok();
  });
  m.def("parse_word", [](const std::string& text, int max_generator) {
    FGWord w = parse_framed_word(text, max_generator);
    return py::make_tuple(w.base.to_string(), w.winding);
  }, py::arg("text"), py::arg("max_generator") = 0);

  m.def("solve_special", [](int p, int deg, std::optional<std::uint64_t> seed) {
    return dump(to_json(solve_special(p, deg, seed)));
  }, py::arg("p"), py::arg("deg"), py::arg("seed") = std::nullopt);
  m.def("boundary_defect", [](const std::string& e) { return dump(to_json(boundary_defect(expansion_of(e)))); });
  m.def("theta", [](const std::string& e, const std::string& word) {
    Expansion ex = expansion_of(e);
    FGWord w = parse_framed_word(word, ex.p);
    Theta th(ex);
    return dump(w.winding ? to_json(th.eval_framed(w)) : to_json(th.eval(w.base)));
  });
  m.def("eta", [](const std::string& e, const std::string& a, const std::string& b) {
    Expansion ex = expansion_of(e);
    return dump(to_json(eta_group(ex, parse_word(a, ex.p), parse_word(b, ex.p))));
  });
  m.def("mu", [](const std::string& e, const std::string& word, std::optional<std::string> assoc, bool even) {
    Expansion ex = expansion_of(e);
    return dump(to_json(mu_group(ex, assoc_of(assoc, even), parse_framed_word(word, ex.p))));
  }, py::arg("expansion"), py::arg("word"), py::arg("assoc") = std::nullopt, py::arg("even") = false);
  m.def("goldman", [](const std::string& e, const std::string& a, const std::string& b) {
    Expansion ex = expansion_of(e);
    Theta th(ex);
    ClassSum g = goldman(th, parse_word(a, ex.p), parse_word(b, ex.p));
    Json j = to_json(g);
    j["theta_image"] = to_json(theta_cyclic(th, g));
    return dump(j);
  });
  m.def("necklace", [](const std::string& e, const std::string& a, const std::string& b) {
    Expansion ex = expansion_of(e);
    Theta th(ex);
    return dump(to_json(necklace_bracket(cyclic_project(th.eval(parse_word(a, ex.p))),
                                         cyclic_project(th.eval(parse_word(b, ex.p))))));
  });
  m.def("cobracket", [](const std::string& e, const std::string& word) {
    Expansion ex = expansion_of(e);
    return dump(to_json(turaev_cobracket(ex, parse_word(word, ex.p))));
  });
  m.def("verify", [](const std::string& suite, int p, int deg, int trials, std::uint64_t seed,
                     std::optional<std::string> mutation) {
    VerifyOptions o{suite, p, deg, trials, seed, mutation};
    return dump(run_verify(o));
  }, py::arg("suite") = "all", py::arg("p") = 2, py::arg("deg") = 8, py::arg("trials") = 50, py::arg("seed") = 1,
     py::arg("mutation") = std::nullopt);
}
