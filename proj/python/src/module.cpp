#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "srg12/census.hpp"
#include "srg12/conditions.hpp"
#include "srg12/constructions.hpp"
#include "srg12/errors.hpp"
#include "srg12/graph6.hpp"
#include "srg12/identities.hpp"
#include "srg12/spectral.hpp"

namespace py = pybind11;
using namespace srg12;

namespace {

py::int_ to_py(const BigInt& x) {
  const std::string s = x.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

Exec exec_for(std::optional<unsigned> workers) { return {workers.value_or(default_worker_count()), {}}; }

py::object optional_int(const std::optional<std::int64_t>& x) {
  return x ? py::object(py::int_(*x)) : py::object(py::none());
}

py::dict pair_count(const PairCount& p) {
  py::dict d;
  d["u"] = p.u;
  d["v"] = p.v;
  d["common"] = p.common;
  return d;
}

py::dict spectrum_dict(const Spectrum& s) {
  py::dict d;
  d["n"] = s.n;
  d["k"] = s.k;
  d["eigenvalues"] = py::make_tuple(s.k, s.lambda1, s.lambda2);
  d["multiplicities"] = py::make_tuple(1, s.r1, s.r2);
  return d;
}

py::dict type_dict(const TypeCensus& t) {
  py::dict d;
  for (SixType s : kNamedSixTypes) d[py::str(std::string(to_string(s)))] = t[s];
  d["aggregate"] = t.aggregate();
  d["e4"] = t.triples.e4;
  d["e5"] = t.triples.e5;
  d["e6"] = t.triples.e6;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Counting identities for strongly regular graphs with lambda = 1, mu = 2";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<InfeasibleParams>(m, "InfeasibleParams", error.ptr());
  py::register_exception<InconsistencyError>(m, "InconsistencyError", error.ptr());
  py::register_exception<Graph6Error>(m, "Graph6Error", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             std::vector<Edge> e;
             e.reserve(edges.size());
             for (const auto& [u, v] : edges) e.push_back({u, v});
             return Graph(n, e);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<Vertex, Vertex>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("relabeled", [](const Graph& g, const std::vector<Vertex>& p) { return g.relabeled(p); })
      .def("__len__", &Graph::order)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<srg12.Graph n=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("from_graph6", [](std::string_view s) { return from_graph6(s); }, py::arg("text"));
  m.def("to_graph6", &to_graph6, py::arg("graph"));
  m.def("load_graph6", &load_graph6, py::arg("path"));
  m.def("save_graph6", &save_graph6, py::arg("path"), py::arg("graph"));

  m.def("build_k3", &build_k3);
  m.def("build_paley9", &build_paley9);
  m.def("build_bvls243", &build_bvls243);
  m.def(
      "build_known",
      [](const std::string& name) {
        const auto kg = parse_known_graph(name);
        if (!kg || *kg == KnownGraph::none_known) throw py::value_error("unknown graph '" + name + "'");
        return build_known(*kg);
      },
      py::arg("name"));

  m.def(
      "verify_srg",
      [](const Graph& g, std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t mu) {
        const SrgReport r = verify_srg(g, {n, k, lambda, mu});
        py::dict d;
        d["ok"] = r.ok();
        d["is_srg"] = r.is_srg();
        d["regular"] = r.regular;
        d["degree"] = optional_int(r.degree);
        d["lambda"] = optional_int(r.lambda);
        d["mu"] = optional_int(r.mu);
        d["in_family"] = r.in_family;
        d["order_relation"] = r.order_relation;
        d["mismatches"] = r.mismatches;
        d["lambda_witness"] = r.lambda_witness ? py::object(pair_count(*r.lambda_witness)) : py::none();
        d["mu_witness"] = r.mu_witness ? py::object(pair_count(*r.mu_witness)) : py::none();
        return d;
      },
      py::arg("graph"), py::arg("n"), py::arg("k"), py::arg("lambda_") = 1, py::arg("mu") = 2);

  m.def(
      "srg_spectrum",
      [](std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t mu) {
        return spectrum_dict(srg_spectrum({n, k, lambda, mu}));
      },
      py::arg("n"), py::arg("k"), py::arg("lambda_") = 1, py::arg("mu") = 2);
  m.def(
      "c6_closed_form", [](std::int64_t n, std::int64_t k) { return to_py(c6_closed_form(n, k)); }, py::arg("n"),
      py::arg("k"));
  m.def(
      "c6_binomial_sum",
      [](std::int64_t n, std::int64_t k) { return to_py(c6_binomial_sum(srg_spectrum({n, k, 1, 2}))); },
      py::arg("n"), py::arg("k"));
  m.def(
      "charpoly_prefix",
      [](const Graph& g, std::size_t degree, std::optional<unsigned> workers) {
        CharPolyPrefix p;
        {
          py::gil_scoped_release release;
          p = charpoly_prefix(g, degree, exec_for(workers));
        }
        return to_py(p.coefficients);
      },
      py::arg("graph"), py::arg("degree") = 6, py::arg("workers") = py::none());
  m.def(
      "ci_detsum", [](const Graph& g, std::size_t i) { return to_py(ci_detsum(g, i)); }, py::arg("graph"),
      py::arg("i"));
  m.def(
      "feasible_parameters",
      [](std::int64_t max_k, bool include_degenerate) {
        py::list out;
        for (const auto& p : feasible_parameters(max_k, include_degenerate)) {
          py::dict d;
          d["n"] = p.n;
          d["k"] = p.k;
          d["eigenvalues"] = py::make_tuple(p.k, p.lambda1, p.lambda2);
          d["multiplicities"] = py::make_tuple(1, p.r1, p.r2);
          d["c6"] = to_py(c6_closed_form(p.n, p.k));
          d["known_graph"] = p.known_graph == KnownGraph::none_known
                                 ? py::object(py::none())
                                 : py::object(py::str(std::string(to_string(p.known_graph))));
          out.append(d);
        }
        return out;
      },
      py::arg("max_k") = 1000, py::arg("include_degenerate") = false);

  m.def(
      "cycle_census",
      [](const Graph& g, std::optional<unsigned> workers) {
        CycleCensus c;
        {
          py::gil_scoped_release release;
          c = cycle_census(g, exec_for(workers));
        }
        py::dict d;
        d["p3"] = c.p3;
        d["p4"] = c.p4;
        d["p5"] = c.p5;
        d["p6"] = c.p6;
        return d;
      },
      py::arg("graph"), py::arg("workers") = py::none());
  m.def(
      "pentagons_through_edge", [](const Graph& g, Vertex u, Vertex v) { return pentagons_through_edge(g, {u, v}); },
      py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def(
      "type_census",
      [](const Graph& g, std::optional<unsigned> workers) {
        TypeCensus t;
        {
          py::gil_scoped_release release;
          t = family_census(g, exec_for(workers)).types();
        }
        return type_dict(t);
      },
      py::arg("graph"), py::arg("workers") = py::none());
  m.def(
      "exhaustive_type_census",
      [](const Graph& g, std::size_t max_order) {
        return type_dict(type_census_from_exhaustive(exhaustive_six_census(g, max_order), edge_triple_census(g)));
      },
      py::arg("graph"), py::arg("max_order") = kDefaultExhaustiveLimit);

  m.def(
      "run_all_checks_json",
      [](const Graph& g, std::string source, std::optional<unsigned> workers, std::size_t exhaustive_limit) {
        py::gil_scoped_release release;
        return run_all_checks(g, std::move(source), exec_for(workers), exhaustive_limit).to_json(-1);
      },
      py::arg("graph"), py::arg("source") = "memory", py::arg("workers") = py::none(),
      py::arg("exhaustive_limit") = kDefaultExhaustiveLimit);
  m.def(
      "hexagon_bound", [](std::int64_t n, std::int64_t k) { return to_py(hexagon_bound(n, k)); }, py::arg("n"),
      py::arg("k"));
  m.def(
      "makhnev_condition",
      [](const Graph& g, std::optional<unsigned> workers) {
        MakhnevResult r;
        {
          py::gil_scoped_release release;
          r = makhnev_condition(g, exec_for(workers));
        }
        py::dict d;
        d["holds"] = r.holds;
        d["n3"] = r.n3;
        if (r.witness) {
          const auto& w = *r.witness;
          d["witness"] = py::make_tuple(py::tuple(py::cast(w.first)), py::tuple(py::cast(w.second)),
                                        py::make_tuple(py::make_tuple(w.connecting[0].u, w.connecting[0].v),
                                                       py::make_tuple(w.connecting[1].u, w.connecting[1].v)));
        } else {
          d["witness"] = py::none();
        }
        return d;
      },
      py::arg("graph"), py::arg("workers") = py::none());
  m.def(
      "verify_polynomial_chain",
      [](const std::vector<std::int64_t>& ks, std::int64_t k2, std::int64_t k1, std::int64_t k0) {
        const ChainReport r = verify_polynomial_chain(ks, {k2, k1, k0});
        py::list points;
        for (const auto& p : r.points) {
          py::dict d;
          d["k"] = p.k;
          d["n"] = p.n;
          d["ok"] = p.ok();
          d["first_failure"] = p.first_failure;
          points.append(d);
        }
        py::dict d;
        d["ok"] = r.ok();
        d["failures"] = r.failures();
        d["points"] = points;
        return d;
      },
      py::arg("ks"), py::arg("bound_k2") = 2, py::arg("bound_k1") = -21, py::arg("bound_k0") = 53);
}
