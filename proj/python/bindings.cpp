#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bbapsp/bench.hpp"
#include "bbapsp/dag_apsp.hpp"
#include "bbapsp/driver.hpp"
#include "bbapsp/generators.hpp"
#include "bbapsp/graph_io.hpp"
#include "bbapsp/oracle.hpp"
#include "bbapsp/result_io.hpp"
#include "bbapsp/sssp.hpp"

namespace py = pybind11;
using namespace bbapsp;

namespace {

// Python sees 0-based vertex ids, plain floats, and float('inf').

py::object vertex_or_none(VertexId v) {
  if (v == kNoVertex) return py::none();
  return py::int_(v);
}

py::list matrix_to_py(const DistanceMatrix& dm) {
  py::list rows;
  for (VertexId u = 0; u < dm.size(); ++u) {
    py::list row;
    for (Weight w : dm.row(u)) row.append(w.value());
    rows.append(row);
  }
  return rows;
}

py::dict sssp_to_py(const SsspOutput& out) {
  py::list dist, parent, first_hop;
  for (std::size_t v = 0; v < out.dist.size(); ++v) {
    dist.append(out.dist[v].value());
    parent.append(vertex_or_none(out.parent[v]));
    first_hop.append(vertex_or_none(out.first_hop[v]));
  }
  py::dict d;
  d["dist"] = dist;
  d["parent"] = parent;
  d["first_hop"] = first_hop;
  return d;
}

py::dict counters_to_py(const RunCounters& c) {
  py::dict d;
  d["cursor_advances"] = c.cursor_advances;
  d["viability_checks"] = c.viability_checks;
  d["psi_calls"] = c.psi_calls;
  d["psi_arcs_scanned"] = c.psi_arcs_scanned;
  d["peak_aux_arcs"] = c.peak_aux_arcs;
  d["peak_active_cursors"] = c.peak_active_cursors;
  d["promotions"] = c.promotions;
  d["refutations"] = c.refutations;
  d["tie_overrides"] = c.tie_overrides;
  d["sort_comparisons"] = c.sort_comparisons;
  d["phases"] = c.phases;
  d["wall_ms"] = static_cast<double>(c.wall_time.count()) / 1e6;
  return d;
}

py::dict report_to_py(const VerificationReport& r) {
  py::list violations;
  for (const auto& v : r.violations) violations.append(py::make_tuple(v.check, v.witness));
  py::dict d;
  d["passed"] = r.passed();
  d["violations"] = violations;
  return d;
}

Graph graph_from_py(std::size_t n, const std::vector<std::tuple<VertexId, VertexId, double>>& arcs,
                    bool allow_negative) {
  std::vector<Arc> list;
  list.reserve(arcs.size());
  for (const auto& [u, v, w] : arcs) list.push_back(Arc{u, v, Weight(w)});
  return Graph::build(n, list, allow_negative);
}

}  // namespace

PYBIND11_MODULE(_bbapsp, m) {
  m.doc() = "All-pairs shortest paths through a black-box single-source engine";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CycleError>(m, "CycleError", PyExc_ValueError);
  py::register_exception<InternalFault>(m, "InternalFault", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_py), py::arg("n"), py::arg("arcs"), py::arg("allow_negative") = false)
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("m", &Graph::num_arcs)
      .def_property_readonly("allows_negative", &Graph::allows_negative)
      .def("arcs", [](const Graph& g) {
        py::list out;
        for (const Arc& a : g.arcs()) out.append(py::make_tuple(a.tail, a.head, a.length.value()));
        return out;
      })
      .def("incoming", [](const Graph& g, VertexId v) {
        if (v >= g.num_vertices()) throw py::index_error("vertex out of range");
        auto in = g.incoming(v);
        return std::vector<ArcId>(in.begin(), in.end());
      })
      .def("__repr__", [](const Graph& g) {
        return "<bbapsp.Graph n=" + std::to_string(g.num_vertices()) + " m=" +
               std::to_string(g.num_arcs()) + ">";
      });

  m.def("parse_graph", &parse_graph_file, py::arg("text"), py::arg("allow_negative") = false);
  m.def("write_graph", &write_graph_file, py::arg("graph"));

  m.def("gen_random_digraph",
        [](std::size_t n, std::size_t arcs, std::int64_t wmin, std::int64_t wmax, std::uint64_t seed) {
          return gen_random_digraph(n, arcs, {wmin, wmax}, seed);
        },
        py::arg("n"), py::arg("m"), py::arg("wmin") = 0, py::arg("wmax") = 100, py::arg("seed") = 1);
  m.def("gen_random_dag",
        [](std::size_t n, std::size_t arcs, std::int64_t wmin, std::int64_t wmax, std::uint64_t seed) {
          return gen_random_dag(n, arcs, {wmin, wmax}, seed);
        },
        py::arg("n"), py::arg("m"), py::arg("wmin") = 0, py::arg("wmax") = 100, py::arg("seed") = 1);
  m.def("gen_complete_digraph",
        [](std::size_t n, std::int64_t wmin, std::int64_t wmax, std::uint64_t seed) {
          return gen_complete_digraph(n, {wmin, wmax}, seed);
        },
        py::arg("n"), py::arg("wmin") = 0, py::arg("wmax") = 100, py::arg("seed") = 1);

  m.def("sssp", [](const Graph& g, VertexId source, const std::string& engine) {
    if (source >= g.num_vertices()) throw py::index_error("source out of range");
    return sssp_to_py(make_engine(engine)->solve(g.forward(), source));
  }, py::arg("graph"), py::arg("source"), py::arg("engine") = "dijkstra");

  py::class_<ApspResult>(m, "ApspResult")
      .def_readonly("n", &ApspResult::n)
      .def_readonly("engine", &ApspResult::engine)
      .def_property_readonly("variant", [](const ApspResult& r) { return std::string(to_string(r.variant)); })
      .def_property_readonly("matrix", [](const ApspResult& r) { return matrix_to_py(r.matrix); })
      .def_property_readonly("lists", [](const ApspResult& r) {
        py::list lists;
        for (const PathList& list : r.lists) {
          py::list entries;
          for (const PathEntry& e : list) entries.append(py::make_tuple(e.source, e.dist.value()));
          lists.append(entries);
        }
        return lists;
      })
      .def_property_readonly("counters", [](const ApspResult& r) { return counters_to_py(r.counters); })
      .def_property_readonly("potentials", [](const ApspResult& r) {
        std::vector<double> h;
        for (Weight w : r.potentials) h.push_back(w.value());
        return h;
      })
      .def("to_json", [](const ApspResult& r) { return result_to_json(r).dump(); });

  m.def("solve_apsp", [](const Graph& g, const std::string& engine, const std::string& variant) {
    const auto eng = make_engine(engine);
    py::gil_scoped_release release;
    return solve_apsp(g, *eng, parse_variant(variant));
  }, py::arg("graph"), py::arg("engine") = "dijkstra", py::arg("variant") = "improved");

  m.def("solve_dag_apsp", [](const Graph& g, const std::string& variant) {
    py::gil_scoped_release release;
    return solve_dag_apsp(g, DagSolveOptions{parse_variant(variant), nullptr, {}});
  }, py::arg("graph"), py::arg("variant") = "improved");

  m.def("floyd_warshall", [](const Graph& g) { return matrix_to_py(floyd_warshall(g)); });
  m.def("essential_edges", [](const Graph& g) {
    return essential_edges(g, floyd_warshall(g)).arcs;
  });

  m.def("verify", [](const Graph& g, const ApspResult& r) {
    const DistanceMatrix dm = floyd_warshall(g);
    VerificationReport report = verify_matrix(r, dm);
    if (r.potentials.empty()) {
      report.merge(verify_sorted_lists(r.lists, dm));
    } else {
      report.merge(verify_sorted_lists(reweight_lists(r.lists, r.potentials),
                                       floyd_warshall(johnson_reweight(g).graph)));
    }
    report.merge(verify_counters(r.counters, g, essential_edges(g, dm).count(), r.variant));
    return report_to_py(report);
  }, py::arg("graph"), py::arg("result"));

  m.def("bench", [](const std::string& config, const std::string& format) {
    return emit_report(run_suite(parse_config(config)), format);
  }, py::arg("config"), py::arg("format") = "csv");
}
