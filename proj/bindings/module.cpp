#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "iwagraph/bouquet.hpp"
#include "iwagraph/complete_graph.hpp"
#include "iwagraph/errors.hpp"
#include "iwagraph/pipeline.hpp"
#include "iwagraph/stats.hpp"
#include "iwagraph/two_vertex.hpp"

namespace py = pybind11;
using namespace iwagraph;

namespace {

py::int_ to_py(const Int& v) { return py::int_(py::str(v.get_str())); }

py::object to_py(const Rat& v) {
  py::object fractions = py::module_::import("fractions");
  return fractions.attr("Fraction")(py::int_(py::str(v.get_num().get_str())),
                                    py::int_(py::str(v.get_den().get_str())));
}

Int from_py(const py::int_& v) {
  return Int(py::cast<std::string>(py::str(static_cast<py::handle>(v))));
}

Multigraph graph_from_edges(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> zero_based;
  zero_based.reserve(edges.size());
  for (auto [a, b] : edges) zero_based.emplace_back(a - 1, b - 1);
  return Multigraph(vertices, std::move(zero_based));
}

VoltageAssignment voltage_from_list(long ell, const std::vector<py::int_>& values) {
  std::vector<Int> vals;
  vals.reserve(values.size());
  for (const auto& v : values) vals.push_back(from_py(v));
  return VoltageAssignment::exact(Int(ell), vals);
}

TwoVertexShape shape_from_tuple(long p, long q, long r, long e, long g) {
  TwoVertexShape s{p, q, r, e, g};
  s.validate();
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Iwasawa invariants of Z_ell-towers of multigraphs";

  py::register_exception<Error>(m, "IwagraphError");

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init(&graph_from_edges), py::arg("vertices"), py::arg("edges"),
           "Build from 1-based undirected edge pairs; list order fixes the section")
      .def_property_readonly("vertex_count", &Multigraph::vertex_count)
      .def_property_readonly("undirected_edge_count", &Multigraph::undirected_edge_count)
      .def("is_connected", &Multigraph::is_connected)
      .def("euler_characteristic", &Multigraph::euler_characteristic)
      .def("spanning_tree_count",
           [](const Multigraph& g) { return to_py(g.spanning_tree_count()); })
      .def("laplacian", [](const Multigraph& g) {
        std::vector<std::vector<long>> out;
        for (const auto& row : g.laplacian()) {
          std::vector<long> r;
          for (const auto& v : row) r.push_back(v.get_si());
          out.push_back(std::move(r));
        }
        return out;
      });

  m.def("complete_graph", &build_complete, py::arg("u"));

  m.def(
      "derive",
      [](const Multigraph& g, long ell, const std::vector<py::int_>& values, long level,
         long cap) { return derive(g, voltage_from_list(ell, values), level, cap).graph; },
      py::arg("graph"), py::arg("ell"), py::arg("values"), py::arg("level"),
      py::arg("resource_cap") = kDefaultResourceCap);

  m.def(
      "kappa_sequence",
      [](const Multigraph& g, long ell, const std::vector<py::int_>& values, long n_max,
         long cap) {
        py::list out;
        for (const auto& lvl : kappa_sequence(g, voltage_from_list(ell, values), n_max, cap))
          out.append(py::make_tuple(lvl.level, to_py(lvl.kappa), lvl.ord_ell));
        return out;
      },
      py::arg("graph"), py::arg("ell"), py::arg("values"), py::arg("n_max"),
      py::arg("resource_cap") = kDefaultResourceCap);

  m.def(
      "char_series_prefix",
      [](const Multigraph& g, long ell, const std::vector<py::int_>& values, long degree) {
        auto cs = char_poly_exact(g, voltage_from_list(ell, values));
        py::list out;
        for (const auto& c : cs.f_prefix(degree)) out.append(to_py(c));
        return out;
      },
      py::arg("graph"), py::arg("ell"), py::arg("values"), py::arg("degree") = 8);

  m.def(
      "invariants",
      [](const Multigraph& g, long ell, const std::vector<py::int_>& values, long levels,
         long prefix_degree, long cap) {
        AnalysisOptions opts;
        opts.levels = levels;
        opts.prefix_degree = prefix_degree;
        opts.resource_cap = cap;
        Analysis a = analyze_tower(g, voltage_from_list(ell, values), opts);
        py::dict out;
        out["mu"] = a.invariants.mu;
        out["lambda"] = a.invariants.lambda;
        out["nu"] = a.invariants.nu ? py::object(py::int_(*a.invariants.nu)) : py::none();
        out["n0"] = a.invariants.n0 ? py::object(py::int_(*a.invariants.n0)) : py::none();
        out["certificate"] = a.invariants.certificate_string();
        py::list prefix;
        for (const auto& c : a.series_prefix) prefix.append(to_py(c));
        out["series_prefix"] = prefix;
        py::list kappas;
        for (const auto& lvl : a.kappa_levels)
          kappas.append(py::make_tuple(lvl.level, to_py(lvl.kappa), lvl.ord_ell));
        out["kappa_levels"] = kappas;
        return out;
      },
      py::arg("graph"), py::arg("ell"), py::arg("values"), py::arg("levels") = 4,
      py::arg("prefix_degree") = 8, py::arg("resource_cap") = kDefaultResourceCap);

  m.def(
      "bouquet_invariants",
      [](long ell, const std::vector<py::int_>& alpha) {
        BouquetVoltage bv{Int(ell), {}};
        for (const auto& a : alpha) bv.alpha.push_back(from_py(a));
        MuLambda ml = bouquet_invariants(bv);
        return py::make_tuple(ml.mu, ml.lambda);
      },
      py::arg("ell"), py::arg("alpha"));

  m.def(
      "arb_large_voltage",
      [](long ell, long n1, long n2) {
        py::list out;
        for (const auto& a : arb_large_voltage(Int(ell), n1, n2).alpha) out.append(to_py(a));
        return out;
      },
      py::arg("ell"), py::arg("n1"), py::arg("n2"));

  m.def(
      "closed_form_bouquet",
      [](long ell, long t) { return to_py(closed_form_bouquet(Int(ell), t)); }, py::arg("ell"),
      py::arg("t"));

  m.def(
      "mu_positive_upper_bound",
      [](long ell, long t) { return to_py(mu_positive_upper_bound(Int(ell), t)); },
      py::arg("ell"), py::arg("t"));

  m.def(
      "bouquet_distribution",
      [](long ell, long t, long depth) {
        auto e = bouquet_enumerate(Int(ell), t, depth);
        py::dict out;
        for (const auto& [key, count] : e.tallies)
          out[py::make_tuple(key.mu, key.lambda)] = to_py(count);
        return py::make_tuple(out, to_py(e.total));
      },
      py::arg("ell"), py::arg("t"), py::arg("depth") = 1);

  m.def(
      "two_vertex_probability",
      [](long p, long q, long r, long e, long g, long ell) {
        return to_py(prob_two_vertex_mu0_lambda1(shape_from_tuple(p, q, r, e, g), ell));
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("e"), py::arg("g"), py::arg("ell"));

  m.def(
      "complete_density",
      [](long ell, long mu0, long lambda0, const std::string& assignment, long x_max) {
        auto kind =
            assignment == "single" ? CompleteAssignment::single : CompleteAssignment::star;
        DensityResult d = complete_density(Int(ell), mu0, lambda0, kind, x_max);
        return py::make_tuple(to_py(d.empirical), to_py(d.theoretical));
      },
      py::arg("ell"), py::arg("mu0"), py::arg("lambda0"), py::arg("assignment") = "star",
      py::arg("x_max") = 100000);

  m.def(
      "vary_t_density",
      [](long ell, long x, long delta_num, long delta_den) {
        VaryTResult v = vary_t_density(Int(ell), x, delta_num, delta_den);
        return py::make_tuple(to_py(v.ratio), to_py(v.target), v.t_max);
      },
      py::arg("ell"), py::arg("x"), py::arg("delta_num"), py::arg("delta_den"));

  m.def(
      "count_quadratic_zeros",
      [](long ell, const std::vector<std::vector<long>>& matrix) {
        return to_py(count_zeros(QuadraticFormFl::from_matrix(ell, matrix)));
      },
      py::arg("ell"), py::arg("matrix"));
}
