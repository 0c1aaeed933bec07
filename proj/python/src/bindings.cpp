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

// Python bindings: sets, linear optimization, arc state, order-polytope
// geometry, the learner, and the JSON-driven harness entry points.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "mcvx/error.hpp"
#include "mcvx/geometry.hpp"
#include "mcvx/harness/config.hpp"
#include "mcvx/harness/descriptor.hpp"
#include "mcvx/harness/experiment.hpp"
#include "mcvx/harness/trace.hpp"
#include "mcvx/harness/verify.hpp"
#include "mcvx/learner.hpp"
#include "mcvx/linopt.hpp"
#include "mcvx/mconvex.hpp"
#include "mcvx/orderstate.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

using Coords = std::vector<int>;

mcvx::Point to_point(const Coords& c) { return mcvx::Point(c); }

std::vector<Coords> to_coords(const std::vector<mcvx::Point>& points) {
  std::vector<Coords> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.coords());
  return out;
}

mcvx::Objective to_objective(const std::vector<double>& w) { return mcvx::Objective(w); }

}  // namespace

PYBIND11_MODULE(_mcvx, m) {
  m.doc() = "Online inverse linear optimization over M-convex sets";

  py::register_exception<mcvx::Error>(m, "Error");

  py::class_<mcvx::MConvexSet>(m, "MConvexSet")
      .def_static("uniform_matroid", &mcvx::MConvexSet::uniform_matroid,
                  py::arg("d"), py::arg("m"))
      .def_static("graphic_matroid", &mcvx::MConvexSet::graphic_matroid,
                  py::arg("vertices"), py::arg("edges"))
      .def_static("partition_matroid", &mcvx::MConvexSet::partition_matroid,
                  py::arg("blocks"), py::arg("capacities"), py::arg("m"))
      .def_static("lattice_simplex", &mcvx::MConvexSet::lattice_simplex,
                  py::arg("d"), py::arg("D"), py::arg("m"))
      .def_static("segment_embed", &mcvx::MConvexSet::segment_embed,
                  py::arg("d"), py::arg("k"), py::arg("axis"))
      .def_static(
          "explicit_points",
          [](std::size_t d, const std::vector<Coords>& points) {
            std::vector<mcvx::Point> pts;
            for (const auto& c : points) pts.push_back(to_point(c));
            return mcvx::MConvexSet::explicit_points(d, std::move(pts));
          },
          py::arg("d"), py::arg("points"))
      .def_static(
          "from_descriptor",
          [](const std::string& text) {
            return mcvx::harness::set_from_json(json::parse(text));
          },
          py::arg("descriptor_json"))
      .def_property_readonly("dimension", &mcvx::MConvexSet::dimension)
      .def("contains", [](const mcvx::MConvexSet& s, const Coords& x) {
        return s.contains(to_point(x));
      })
      .def("enumerate", [](const mcvx::MConvexSet& s) { return to_coords(s.enumerate()); })
      .def("exchange_neighbors",
           [](const mcvx::MConvexSet& s, const Coords& x) {
             return s.exchange_neighbors(to_point(x));
           })
      .def("descriptor",
           [](const mcvx::MConvexSet& s) { return mcvx::harness::describe(s).dump(); })
      .def("__repr__", [](const mcvx::MConvexSet& s) {
        return "MConvexSet(" + mcvx::harness::describe(s).dump() + ")";
      });

  m.def("verify_m_convexity", &mcvx::verify_m_convexity, py::arg("set"));
  m.def(
      "argmax_exchange",
      [](const mcvx::MConvexSet& s, const std::vector<double>& w) {
        return mcvx::argmax_exchange(s, to_objective(w)).coords();
      },
      py::arg("set"), py::arg("w"));
  m.def(
      "argmax_bruteforce",
      [](const mcvx::MConvexSet& s, const std::vector<double>& w) {
        return to_coords(mcvx::argmax_bruteforce(s, to_objective(w)));
      },
      py::arg("set"), py::arg("w"));

  py::class_<mcvx::ArcSet>(m, "ArcSet")
      .def(py::init<std::size_t>(), py::arg("d"))
      .def(py::init([](std::size_t d, const std::vector<mcvx::Arc>& arcs) {
             return mcvx::ArcSet(d, arcs);
           }),
           py::arg("d"), py::arg("arcs"))
      .def("add_arcs",
           [](mcvx::ArcSet& a, const std::vector<mcvx::Arc>& arcs) {
             return a.add_arcs(arcs);
           })
      .def("arcs", &mcvx::ArcSet::arcs)
      .def("has_cycle", &mcvx::ArcSet::has_cycle)
      .def("topological_order", &mcvx::ArcSet::topological_order)
      .def("restart", &mcvx::ArcSet::restart)
      .def_property_readonly("dimension", &mcvx::ArcSet::dimension)
      .def_property_readonly("segment", &mcvx::ArcSet::segment)
      .def("__len__", &mcvx::ArcSet::size);

  m.def(
      "topological_weights",
      [](const mcvx::ArcSet& a) { return mcvx::topological_weights(a).weights(); },
      py::arg("arcs"));

  py::class_<mcvx::OrderPolytope>(m, "OrderPolytope")
      .def(py::init([](const mcvx::ArcSet& a, std::size_t exact_max_dim) {
             mcvx::GeometryOptions opts;
             opts.exact_max_dim = exact_max_dim;
             return mcvx::OrderPolytope(a, opts);
           }),
           py::arg("arcs"), py::arg("exact_max_dim") = 9)
      .def("extension_count", &mcvx::OrderPolytope::extension_count)
      .def("volume", [](const mcvx::OrderPolytope& p) { return p.volume().to_string(); })
      .def("volume_value",
           [](const mcvx::OrderPolytope& p) {
             return static_cast<double>(p.volume().value());
           })
      .def("enumerate_extensions", &mcvx::OrderPolytope::enumerate_extensions)
      .def("centroid",
           [](const mcvx::OrderPolytope& p) { return p.centroid().weights(); })
      .def("tie_broken_centroid",
           [](const mcvx::OrderPolytope& p) { return p.tie_broken_centroid().weights(); })
      .def("sample_uniform", &mcvx::OrderPolytope::sample_uniform, py::arg("seed"),
           py::arg("n"));

  m.def("centroid_mistake_bound", &mcvx::centroid_mistake_bound, py::arg("d"));
  m.def("topo_mistake_bound", &mcvx::topo_mistake_bound, py::arg("d"));

  py::class_<mcvx::Learner>(m, "Learner")
      .def(py::init([](std::size_t d, const std::string& variant, bool exact_geometry,
                       std::uint64_t seed) {
             mcvx::LearnerOptions opts;
             opts.variant = mcvx::parse_variant(variant);
             opts.exact_geometry = exact_geometry;
             opts.seed = seed;
             return mcvx::Learner(d, opts);
           }),
           py::arg("d"), py::arg("variant") = "centroid",
           py::arg("exact_geometry") = true, py::arg("seed") = 0)
      .def("propose",
           [](mcvx::Learner& l, const mcvx::MConvexSet& s) {
             const auto p = l.propose(s);
             return py::make_tuple(p.estimate.weights(), p.action.coords());
           })
      .def("observe",
           [](mcvx::Learner& l, const mcvx::MConvexSet& s, const Coords& x) {
             const auto o = l.observe(s, to_point(x));
             py::dict out;
             out["new_arcs"] = o.new_arcs;
             out["mistake"] = o.mistake;
             out["cycle_detected"] = o.cycle_detected;
             out["restarted"] = o.restarted;
             return out;
           })
      .def("estimate", [](mcvx::Learner& l) { return l.estimate().weights(); })
      .def("volume",
           [](mcvx::Learner& l) -> py::object {
             const auto v = l.volume();
             if (!v) return py::none();
             return py::str(v->to_string());
           })
      .def("arcs", [](const mcvx::Learner& l) { return l.arcs().arcs(); })
      .def_property_readonly("mistakes", &mcvx::Learner::mistakes)
      .def_property_readonly("restarts", &mcvx::Learner::restarts)
      .def_property_readonly("rounds", &mcvx::Learner::rounds);

  m.def(
      "run_experiment",
      [](const std::string& config_json) {
        const auto cfg =
            mcvx::harness::ExperimentConfig::from_json(json::parse(config_json));
        std::ostringstream trace;
        const auto result = mcvx::harness::run_experiment(cfg, {&trace, false});
        return py::make_tuple(result.ledger.summary().dump(), trace.str());
      },
      py::arg("config_json"),
      "Runs a config; returns (summary JSON, JSON-lines trace).");
  m.def(
      "verify_trace",
      [](const std::string& trace_text) {
        std::istringstream in(trace_text);
        return mcvx::harness::verify_trace(mcvx::harness::read_trace(in))
            .to_json()
            .dump();
      },
      py::arg("trace_text"), "Audits a trace; returns the report as JSON.");
  m.def(
      "figure_csv",
      [](const std::string& trace_text) {
        std::istringstream in(trace_text);
        std::ostringstream out;
        mcvx::harness::write_figure_csv(mcvx::harness::read_trace(in), out);
        return out.str();
      },
      py::arg("trace_text"));
}
