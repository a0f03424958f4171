// Copyright 2026 The ncycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncycle/constructions.hpp"
#include "ncycle/criteria.hpp"
#include "ncycle/error.hpp"
#include "ncycle/field.hpp"
#include "ncycle/json_io.hpp"
#include "ncycle/oracle.hpp"
#include "ncycle/parallel.hpp"
#include "ncycle/permutation.hpp"
#include "ncycle/poly.hpp"
#include "ncycle/walsh.hpp"

namespace py = pybind11;
using namespace ncycle;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string dump(const Json& j) { return j.dump(); }

SparsePoly parse_poly(const FieldPtr& field, const std::string& text) {
  ExprVars vars{{"p", field->p()}, {"n", field->n()}, {"q", field->order()}};
  return SparsePoly::parse(field, text, vars);
}

FieldPtr field_from_q3(std::uint64_t q) { return extension_field(q, 3); }

Elem element_in(const FieldPtr& field, const std::string& text) { return field->parse_element(text); }

// Python-side handle; the library shares fields as pointers to const.
struct PyField {
  FieldPtr ptr;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-field n-cycle permutation toolkit";

  py::register_exception<Error>(m, "NcycleError", PyExc_ValueError);

  py::class_<PyField>(m, "Field")
      .def(py::init([](std::uint32_t p, unsigned n, std::optional<std::vector<std::uint32_t>> modulus) {
             return PyField{FieldCtx::make(p, n, std::move(modulus))};
           }),
           py::arg("p"), py::arg("n"), py::arg("modulus") = std::nullopt)
      .def_property_readonly("p", [](const PyField& f) { return f.ptr->p(); })
      .def_property_readonly("n", [](const PyField& f) { return f.ptr->n(); })
      .def_property_readonly("order", [](const PyField& f) { return f.ptr->order(); })
      .def_property_readonly("modulus", [](const PyField& f) { return f.ptr->modulus(); })
      .def_property_readonly("generator", [](const PyField& f) { return f.ptr->generator(); })
      .def("add", [](const PyField& f, Elem a, Elem b) { return f.ptr->add(a, b); })
      .def("sub", [](const PyField& f, Elem a, Elem b) { return f.ptr->sub(a, b); })
      .def("mul", [](const PyField& f, Elem a, Elem b) { return f.ptr->mul(a, b); })
      .def("neg", [](const PyField& f, Elem a) { return f.ptr->neg(a); })
      .def("inv", [](const PyField& f, Elem a) { return f.ptr->inv(a); })
      .def("pow", [](const PyField& f, Elem a, const std::string& e) { return f.ptr->pow(a, parse_bigexp(e)); })
      .def(
          "frobenius", [](const PyField& f, Elem a, unsigned sub, long long i) { return f.ptr->frobenius(a, sub, i); },
          py::arg("a"), py::arg("sub_degree"), py::arg("i") = 1)
      .def(
          "trace", [](const PyField& f, Elem a, unsigned sub) { return f.ptr->trace(a, sub); }, py::arg("a"),
          py::arg("sub_degree") = 1)
      .def(
          "norm", [](const PyField& f, Elem a, unsigned sub) { return f.ptr->norm(a, sub); }, py::arg("a"),
          py::arg("sub_degree") = 1)
      .def("subgroup_mu", [](const PyField& f, std::uint64_t ell) { return f.ptr->subgroup_mu(ell); })
      .def("subfield_members", [](const PyField& f, unsigned sub) { return f.ptr->subfield_members(sub); })
      .def("element", [](const PyField& f, const std::string& text) { return f.ptr->parse_element(text); })
      .def("json", [](const PyField& f) { return dump(to_json(*f.ptr)); });

  py::class_<SparsePoly>(m, "Poly")
      .def(py::init([](const PyField& f, const std::string& text) { return parse_poly(f.ptr, text); }),
           py::arg("field"), py::arg("text"))
      .def("__call__", &SparsePoly::operator())
      .def("__str__", &SparsePoly::to_string)
      .def("table", [](const SparsePoly& p) { return tabulate(*p.field(), p.as_map()); });

  py::class_<FamilyInstance>(m, "FamilyInstance")
      .def_readonly("family", &FamilyInstance::family)
      .def_readonly("claimed_n", &FamilyInstance::claimed_n)
      .def_readonly("formula", &FamilyInstance::formula)
      .def_property_readonly("field", [](const FamilyInstance& i) { return PyField{i.field}; })
      .def("table", [](const FamilyInstance& i) { return tabulate(*i.field, i.f); })
      .def("json", [](const FamilyInstance& i) { return dump(to_json(i)); })
      .def("criterion", [](const FamilyInstance& i) { return dump(to_json(*i.field, i.criterion())); })
      .def(
          "cross_check",
          [](const FamilyInstance& i) {
            py::gil_scoped_release release;
            return dump(to_json(*i.field, cross_check(i)));
          });

  m.def("set_threads", &set_worker_count);

  m.def(
      "verify",
      [](const SparsePoly& poly, std::vector<std::uint64_t> ns) {
        return dump(to_json(exhaustive_verdict(poly.field(), poly.as_map(), ns)));
      },
      py::arg("poly"), py::arg("ns"));
  m.def("order", [](const SparsePoly& poly) {
    PermResult r = perm_from_poly(poly);
    if (const auto* nb = std::get_if<NotBijective>(&r)) {
      Json j = to_json(CycleReport{false, 0, {}, 0});
      j["collision"] = {nb->first, nb->second};
      return dump(j);
    }
    return dump(to_json(cycle_structure(std::get<PermMap>(r))));
  });
  m.def("walsh_involution", [](const SparsePoly& poly) {
    PermMap f = require_perm(poly.field(), poly.as_map());
    return dump(to_json(*poly.field(), walsh_involution_test(f)));
  });
  m.def(
      "monomial_ncycle",
      [](const std::string& d, std::uint64_t qm1, std::uint64_t n) { return monomial_ncycle(parse_bigexp(d), qm1, n); },
      py::arg("d"), py::arg("field_order_minus_1"), py::arg("n"));

  m.def("build_jieguo", [](std::uint64_t q, std::uint64_t t, std::uint64_t mm) { return build_jieguo(q, t, mm); },
        py::arg("q"), py::arg("t"), py::arg("m"));
  m.def("build_rs_2to3m", [](std::uint64_t q, std::uint64_t k) { return build_rs_2to3m(q, k); }, py::arg("q"),
        py::arg("k"));
  m.def(
      "build_xq_h_alpha",
      [](std::uint64_t q, const std::string& alpha) {
        FieldPtr f = field_from_q3(q);
        return build_xq_h_alpha(f, element_in(f, alpha));
      },
      py::arg("q"), py::arg("alpha"));
  m.def(
      "build_trace_theta",
      [](std::uint64_t q, const std::string& theta) {
        FieldPtr f = field_from_q3(q);
        return build_trace_theta(f, element_in(f, theta));
      },
      py::arg("q"), py::arg("theta"));
  m.def(
      "build_involution",
      [](std::uint32_t p, unsigned n, const std::string& lambda) {
        XhLambdaParams xp;
        xp.variant = XhVariant::kInvolution;
        xp.lambda = parse_lambda_variant(lambda);
        return build_xh_lambda(make_field(p, n), xp);
      },
      py::arg("p"), py::arg("n"), py::arg("lambda_variant") = "lambda1");
  m.def(
      "build_shift_power",
      [](std::uint32_t p, unsigned n, unsigned i, Elem delta, const std::string& s) {
        ShiftFamilyParams sp;
        sp.i = i;
        sp.delta = delta;
        sp.s = parse_bigexp(s);
        return build_shift(make_field(p, n), sp);
      },
      py::arg("p"), py::arg("n"), py::arg("i"), py::arg("delta"), py::arg("s"));
  m.def("cube_roots_of_unity", [](const PyField& f, unsigned sub) { return cube_roots_of_unity(*f.ptr, sub); });
  m.def("solve_jieguo_congruences", &solve_jieguo_congruences);
  m.def("search_k_2to3m", &search_k_2to3m);

  m.def("fuzz_families", &fuzz_families);
  m.def(
      "fuzz",
      [](const std::string& family, std::uint64_t seed, std::uint64_t trials) {
        py::gil_scoped_release release;
        return dump(to_json(random_family_fuzz(family, seed, trials)));
      },
      py::arg("family"), py::arg("seed"), py::arg("trials"));
}
