#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kodeg/bounds.hpp"
#include "kodeg/euler.hpp"
#include "kodeg/expr.hpp"
#include "kodeg/lattice.hpp"
#include "kodeg/manifold.hpp"
#include "kodeg/poly.hpp"
#include "kodeg/verify.hpp"

namespace py = pybind11;
using namespace kodeg;

namespace {

std::vector<int> indices(Mask S) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (S & (Mask{1} << i)) out.push_back(i + 1);
  return out;
}

ActiveFamily family_from(const std::vector<std::vector<int>>& sets, int n) {
  ActiveFamily f;
  int top = 0;
  for (const auto& s : sets) {
    Mask T = 0;
    for (int i : s) {
      if (i < 1 || i > 64) throw std::domain_error("index " + std::to_string(i) + " outside 1..64");
      T |= Mask{1} << (i - 1);
      top = std::max(top, i);
    }
    f.sets.push_back(T);
  }
  f.n = n < 0 ? top : n;
  f.validate();
  return f;
}

// {(1, 2): -2, ...} with subsets as sorted tuples.
py::dict lattice_dict(const LatticePoly& p) {
  py::dict d;
  for (const auto& [S, c] : p.terms()) d[py::tuple(py::cast(indices(S)))] = c;
  return d;
}

}  // namespace

PYBIND11_MODULE(_kodeg, m) {
  m.doc() = "Graded KO-theory of C4 x| U(1) and the b2plus bounds for spin 4-manifolds";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<InconsistentProduct>(m, "InconsistentProduct", PyExc_ArithmeticError);

  py::class_<KOElem>(m, "KOElem")
      .def(py::init([](const std::string& s) { return eval_ko(s); }), py::arg("expr"))
      .def_property_readonly("degree", &KOElem::degree)
      .def("is_zero", &KOElem::is_zero)
      .def("is_free", &KOElem::is_free)
      .def("complexify", [](const KOElem& x) { return to_string(ko_complexify(x).value); })
      .def("__mul__", [](const KOElem& a, const KOElem& b) { return ko_mul(a, b); })
      .def("__pow__", [](const KOElem& a, int n) { return ko_pow(a, n); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(Int() * py::self)
      .def("__str__", [](const KOElem& x) { return to_string(x); })
      .def("__repr__", [](const KOElem& x) { return "KOElem('" + to_string(x) + "')"; });

  m.def("eval", &eval_ko, py::arg("expr"), "Evaluate a ring expression such as \"[C0]_2 * [C0]_2\".");
  m.def("euler_rtilde", &euler_rtilde, py::arg("m"));
  m.def("euler_h1_power", &euler_h1_power_any, py::arg("p"));
  m.def("euler_h1_power_ring", &euler_h1_power_ring, py::arg("p"));
  m.def("mu_poly", [](int n) { return mu_poly(n).str(); }, py::arg("n"));
  m.def("nu_poly", [](int n) { return nu_poly(n).coeffs(); }, py::arg("n"), "Coefficients, constant term first.");
  m.def("mu_nu_agree", [](int n) { return mu_poly(n).specialize_to_x0() == nu_poly(n); }, py::arg("n"));

  m.def("keyrelation_check", [](int sign) { return keyrelation_check(sign).holds; }, py::arg("sign"));
  m.def("divis_verify", [](int c, int d, int i, const std::vector<Int>& a) { return divis_verify(c, d, i, a).ok; },
        py::arg("c"), py::arg("d"), py::arg("i"), py::arg("a"));
  m.def("table_discrepancies", [] {
    TableReport r = ko_verify_tables();
    return std::make_pair(r.discrepant_rows(), r.law_failures.empty());
  });

  m.def("expand_family", [](const std::vector<std::vector<int>>& sets, int n) {
        return lattice_dict(expand_family(family_from(sets, n)));
      }, py::arg("sets"), py::arg("n") = -1);
  m.def("cover_count", [](const std::vector<int>& S, int k, const std::vector<std::vector<int>>& sets) {
        Mask mask = 0;
        for (int i : S) mask |= Mask{1} << (i - 1);
        return cover_count(mask, k, family_from(sets, -1));
      }, py::arg("S"), py::arg("m"), py::arg("sets"));
  m.def("d_of", &d_of, py::arg("N"));

  m.def("epsilon", &epsilon, py::arg("dtilde"), py::arg("l"));
  m.def("torus_pattern_rhs", &torus_pattern_rhs, py::arg("m"), py::arg("sign"), py::arg("b2plus"));
  m.def("connected_sum_bound", &connected_sum_bound, py::arg("m"), py::arg("sign"), py::arg("b2plus"));

  m.def("load_manifold", [](const std::string& path) { return to_json(load(path)); }, py::arg("path"),
        "Load and validate a description; returns canonical JSON.");
  m.def("connected_sum", [](const std::string& a, const std::string& b) {
        return to_json(connected_sum(parse_manifold(a, ValidationMode::Summand),
                                     parse_manifold(b, ValidationMode::Summand)));
      }, py::arg("a_json"), py::arg("b_json"));
  m.def("mtorus", [](int k) { return to_json(mtorus(k)); }, py::arg("m"));
  m.def("bound_json", [](const std::string& text) { return render_json(main2_bound(parse_manifold(text))); },
        py::arg("manifold_json"));

  m.def("verify", [](int max_n, int max_m, int trials) {
        VerifyOptions o;
        o.max_n = max_n;
        o.max_m = max_m;
        o.trials = trials;
        py::list out;
        for (const auto& c : run_verify(o).checks) out.append(py::make_tuple(c.name, c.passed, c.detail));
        return out;
      }, py::arg("max_n") = 6, py::arg("max_m") = 6, py::arg("trials") = 200);
}
