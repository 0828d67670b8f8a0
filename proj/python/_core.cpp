// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hypermat/analysis.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/gf.hpp"
#include "hypermat/io.hpp"
#include "hypermat/mqt.hpp"
#include "hypermat/params.hpp"
#include "hypermat/pg.hpp"
#include "hypermat/tower.hpp"

namespace py = pybind11;
namespace hm = hypermat;

namespace {

hm::ElementSet set_from_list(const hm::Matroid& m, const std::vector<int>& xs) {
  for (int x : xs)
    if (x < 0 || x >= m.ground_size()) throw hm::OutOfRange("element index out of range");
  return hm::ElementSet::from_indices(m.ground_size(), xs);
}

py::object json_to_py(const hm::Json& j) {
  return py::module_::import("json").attr("loads")(hm::dump_json(j));
}

py::object big_to_py(const hm::BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

hm::VerifyMode mode_from_string(const std::string& mode) {
  if (mode == "exact") return hm::VerifyMode::exact;
  if (mode == "family") return hm::VerifyMode::family_only;
  throw hm::BadParams("mode must be 'exact' or 'family'");
}

std::vector<std::vector<int>> flats_as_lists(const std::vector<hm::Flat>& flats) {
  std::vector<std::vector<int>> out;
  out.reserve(flats.size());
  for (const auto& f : flats) out.push_back(f.elements.to_indices());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Line-count constructions, glued towers, and hyperplane bound checks";

  py::register_exception<hm::Error>(mod, "HypermatError", PyExc_RuntimeError);
  py::register_exception<hm::VerificationFailed>(mod, "VerificationFailed", PyExc_RuntimeError);

  py::class_<hm::Field>(mod, "Field")
      .def_static("make", &hm::Field::make, py::arg("q"))
      .def_property_readonly("q", &hm::Field::q)
      .def_property_readonly("p", &hm::Field::p)
      .def_property_readonly("k", &hm::Field::k)
      .def_property_readonly("modulus", &hm::Field::modulus)
      .def("add", &hm::Field::add)
      .def("sub", &hm::Field::sub)
      .def("mul", &hm::Field::mul)
      .def("neg", &hm::Field::neg)
      .def("inv", &hm::Field::inv);

  py::class_<hm::Matroid>(mod, "Matroid")
      .def_static("uniform", &hm::Matroid::uniform, py::arg("rank"), py::arg("n"))
      .def_static("linear", &hm::Matroid::linear, py::arg("field"), py::arg("columns"))
      .def_static(
          "from_lines",
          [](int n, const std::vector<std::vector<int>>& lines) {
            std::vector<hm::ElementSet> sets;
            sets.reserve(lines.size());
            for (const auto& line : lines) {
              for (int x : line)
                if (x < 0 || x >= n) throw hm::OutOfRange("line index out of range");
              sets.push_back(hm::ElementSet::from_indices(n, line));
            }
            return hm::Matroid::from_lines(n, sets);
          },
          py::arg("n"), py::arg("lines"))
      .def_property_readonly("ground_size", &hm::Matroid::ground_size)
      .def("rank", [](const hm::Matroid& m) { return m.rank(); })
      .def("rank",
           [](const hm::Matroid& m, const std::vector<int>& xs) {
             return m.rank(set_from_list(m, xs));
           })
      .def("closure",
           [](const hm::Matroid& m, const std::vector<int>& xs) {
             return m.closure(set_from_list(m, xs)).to_indices();
           })
      .def("label", &hm::Matroid::label)
      .def("to_json", [](const hm::Matroid& m) { return hm::dump_json(hm::matroid_to_json(m)); })
      .def_static("from_json", [](const std::string& text) {
        return hm::matroid_from_json(hm::parse_json(text));
      });

  mod.def(
      "parallel_connection",
      [](const hm::Matroid& m1, int e1, const hm::Matroid& m2, int e2) {
        return hm::parallel_connection(m1, e1, m2, e2);
      },
      py::arg("m1"), py::arg("e1"), py::arg("m2"), py::arg("e2"));

  mod.def("circuits_bruteforce", [](const hm::Matroid& m) {
    std::vector<std::vector<int>> out;
    for (const auto& c : hm::circuits_bruteforce(m)) out.push_back(c.to_indices());
    return out;
  });

  mod.def(
      "pg_points",
      [](int rank, int q) {
        std::vector<std::vector<int>> out;
        for (const auto& p : hm::pg_points(rank, hm::Field::make(q))) out.push_back(p.coords);
        return out;
      },
      py::arg("rank"), py::arg("q"));

  mod.def(
      "pg_lines_plane",
      [](int q) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto& line : hm::pg_lines_plane(hm::Field::make(q)))
          out.emplace_back(std::vector<int>(line.coeffs.begin(), line.coeffs.end()), line.points);
        return out;
      },
      py::arg("q"));

  mod.def(
      "flats_by_rank",
      [](const hm::Matroid& m, int k, int threads) {
        return flats_as_lists(hm::flats_by_rank(m, k, threads));
      },
      py::arg("m"), py::arg("k"), py::arg("threads") = 1);

  mod.def(
      "hyperplanes",
      [](const hm::Matroid& m, int threads) { return flats_as_lists(hm::hyperplanes(m, threads)); },
      py::arg("m"), py::arg("threads") = 1);

  mod.def(
      "build_mqt",
      [](int q, int t) {
        auto [m, art] = hm::build_mqt(q, t);
        return py::make_tuple(m, json_to_py(hm::mqt_to_json(art)));
      },
      py::arg("q"), py::arg("t"));

  mod.def(
      "select_params_lemma",
      [](int ell) {
        const hm::LemmaParams p = hm::select_params_lemma(ell);
        return py::make_tuple(p.q, p.t);
      },
      py::arg("ell"));

  mod.def("select_params_corollary", &hm::select_params_corollary, py::arg("ell"));

  py::class_<hm::TowerSpec>(mod, "TowerSpec")
      .def_readonly("ell", &hm::TowerSpec::ell)
      .def_readonly("r", &hm::TowerSpec::r)
      .def_readonly("k", &hm::TowerSpec::k)
      .def_readonly("base", &hm::TowerSpec::base)
      .def_readonly("base_e", &hm::TowerSpec::base_e)
      .def_readonly("attachment_size", &hm::TowerSpec::attachment_size)
      .def_readonly("basepoint_image", &hm::TowerSpec::basepoint_image)
      .def_readonly("ground_size", &hm::TowerSpec::ground_size)
      .def("to_json", [](const hm::TowerSpec& s) { return hm::dump_json(hm::tower_to_json(s)); });

  mod.def(
      "build_tower",
      [](const hm::Matroid& n, int e, int ell, int r) { return hm::build_tower(n, e, ell, r); },
      py::arg("n"), py::arg("e"), py::arg("ell"), py::arg("r"));

  mod.def(
      "verify_counterexample",
      [](const hm::Matroid& m, const hm::TowerSpec& spec, const std::string& mode, int threads,
         std::uint64_t seed, int sample_cap) {
        const hm::Report rep =
            hm::verify_counterexample(m, spec, mode_from_string(mode), threads, seed, sample_cap);
        return json_to_py(hm::report_to_json(rep));
      },
      py::arg("m"), py::arg("spec"), py::arg("mode") = "family", py::arg("threads") = 1,
      py::arg("seed") = 0, py::arg("sample_cap") = 500);

  mod.def(
      "count_lines",
      [](const hm::Matroid& m, int threads) { return hm::count_lines(m, threads); },
      py::arg("m"), py::arg("threads") = 1);
  mod.def(
      "count_lines_avoiding",
      [](const hm::Matroid& m, int e, int threads) {
        return hm::count_lines_avoiding(m, e, threads);
      },
      py::arg("m"), py::arg("e"), py::arg("threads") = 1);
  mod.def(
      "min_degree_element",
      [](const hm::Matroid& m, int threads) { return hm::min_degree_element(m, threads); },
      py::arg("m"), py::arg("threads") = 1);
  mod.def(
      "max_rank2_minor_points",
      [](const hm::Matroid& m, int threads) { return hm::max_rank2_minor_points(m, threads); },
      py::arg("m"), py::arg("threads") = 1);
  mod.def(
      "in_u", [](const hm::Matroid& m, int ell, int threads) { return hm::in_u(m, ell, threads); },
      py::arg("m"), py::arg("ell"), py::arg("threads") = 1);
  mod.def(
      "bonin_bound", [](int ell, int r) { return big_to_py(hm::bonin_bound(ell, r)); },
      py::arg("ell"), py::arg("r"));
  mod.def(
      "kung_point_check",
      [](const hm::Matroid& m, int ell, int threads) {
        return hm::kung_point_check(m, ell, threads);
      },
      py::arg("m"), py::arg("ell"), py::arg("threads") = 1);
  mod.def("bruteforce_minor_oracle", &hm::bruteforce_minor_oracle, py::arg("m"),
          py::arg("points"));
  mod.def("check_lemma24_inequality", &hm::check_lemma24_inequality, py::arg("ell"));
  mod.def("check_corollary_bound", &hm::check_corollary_bound, py::arg("ell"), py::arg("r"));
}
