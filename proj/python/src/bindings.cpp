#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pivotlab/anf.hpp"
#include "pivotlab/code.hpp"
#include "pivotlab/error.hpp"
#include "pivotlab/graph.hpp"
#include "pivotlab/hypergraph.hpp"
#include "pivotlab/orbit.hpp"
#include "pivotlab/spectral.hpp"
#include "pivotlab/tables.hpp"

namespace py = pybind11;
using namespace pivotlab;

namespace {

Family family_arg(const std::string& s) {
  const auto f = parse_family(s);
  if (!f) throw std::invalid_argument("family must be IH, IHN or HN");
  return *f;
}

LabelSwap swap_arg(bool swap) { return swap ? LabelSwap::kYes : LabelSwap::kNo; }

py::dict flat_count_dict(const FlatCount& c) {
  py::dict d;
  d["count"] = c.count;
  d["specs"] = c.specs;
  std::vector<std::string> w;
  for (const auto& t : c.witnesses) w.push_back(t.to_string());
  d["witnesses"] = w;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pivot orbits, flat spectra and binary linear codes";

  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotAnEdgeError>(m, "NotAnEdgeError", PyExc_ValueError);
  py::register_exception<InadmissibleEdgeError>(m, "InadmissibleEdgeError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);

  py::class_<BooleanFunction>(m, "BooleanFunction")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, std::vector<Mask>>(), py::arg("n"), py::arg("terms"))
      .def_static("parse", [](const std::string& s) { return parse_anf(s); })
      .def_property_readonly("n", &BooleanFunction::n)
      .def_property_readonly("terms", [](const BooleanFunction& f) {
        return std::vector<Mask>(f.terms().begin(), f.terms().end());
      })
      .def("degree", &BooleanFunction::degree)
      .def("evaluate", &BooleanFunction::evaluate, py::arg("x"))
      .def("truth_table", &BooleanFunction::truth_table)
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", [](const BooleanFunction& f) { return format_anf(f); })
      .def("__repr__", [](const BooleanFunction& f) { return "BooleanFunction('" + format_anf(f) + "')"; });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges", [](int n, const std::vector<std::pair<int, int>>& e) { return Graph::from_edges(n, e); })
      .def_static("from_hex", [](const std::string& s) { return parse_hex_rows(s); })
      .def_static("from_text", [](const std::string& s) { return parse_graph_text(s); })
      .def_static("complete", &Graph::complete)
      .def_static("path", &Graph::path)
      .def_static("cycle", &Graph::cycle)
      .def_static("star", &Graph::star)
      .def_property_readonly("n", &Graph::n)
      .def("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def("hex", [](const Graph& g) { return format_hex_rows(g); })
      .def("text", [](const Graph& g) { return format_graph_text(g); })
      .def("anf", [](const Graph& g) { return to_anf(g); })
      .def(py::self == py::self)
      .def("__hash__", &Graph::hash)
      .def("__repr__", [](const Graph& g) { return "Graph('" + format_hex_rows(g) + "')"; });

  m.def("local_complement", &local_complement, py::arg("g"), py::arg("v"));
  m.def(
      "pivot", [](const Graph& g, int u, int v, bool swap) { return pivot(g, u, v, swap_arg(swap)); }, py::arg("g"),
      py::arg("u"), py::arg("v"), py::arg("swap") = true);
  m.def("pivot_anf", &pivot_anf, py::arg("p"), py::arg("u"), py::arg("v"));
  m.def("is_admissible_edge", &is_admissible_edge, py::arg("p"), py::arg("u"), py::arg("v"));

  m.def(
      "count_flat",
      [](const BooleanFunction& p, const std::string& family, std::size_t witnesses, int threads) {
        FlatCountOptions o;
        o.max_witnesses = witnesses;
        o.threads = threads;
        return flat_count_dict(count_flat(p, family_arg(family), o));
      },
      py::arg("p"), py::arg("family") = "IH", py::arg("witnesses") = 0, py::arg("threads") = 0);
  m.def(
      "count_flat_quadratic",
      [](const Graph& g, const std::string& family) { return flat_count_dict(count_flat_quadratic(g, family_arg(family))); },
      py::arg("g"), py::arg("family") = "IH");
  m.def(
      "is_flat",
      [](const BooleanFunction& p, const std::string& spec) { return is_flat(apply(bipolar(p), TransformSpec::parse(spec))); },
      py::arg("p"), py::arg("spec"));
  m.def("flat_h_sets", &flat_h_sets, py::arg("p"));

  m.def(
      "orbit",
      [](const Graph& g, const std::string& move, bool swap, bool labelled) {
        const auto mv = parse_move(move);
        if (!mv) throw std::invalid_argument("move must be pivot or lc");
        OrbitOptions o;
        o.swap = swap_arg(swap);
        o.labelled = labelled;
        const OrbitReport r = orbit_report(g, *mv, o);
        py::dict d;
        d["unlabelled_size"] = r.unlabelled_size;
        d["labelled_size"] = r.labelled_size;
        d["representative"] = format_hex_rows(r.representative);
        d["bipartite"] = r.bipartite;
        return d;
      },
      py::arg("g"), py::arg("move") = "pivot", py::arg("swap") = true, py::arg("labelled") = true);
  m.def(
      "classify",
      [](int n, const std::string& move, const std::string& universe, const std::string& mode, int threads) {
        const auto mv = parse_move(move);
        const auto un = parse_universe(universe);
        const auto md = parse_mode(mode);
        if (!mv || !un || !md) throw std::invalid_argument("unknown move, universe or mode");
        ClassifyOptions o;
        o.threads = threads;
        const Classification c = classify(n, *mv, *un, *md, o);
        py::dict d;
        d["count"] = c.count;
        std::vector<std::string> reps;
        for (const Graph& g : c.representatives) reps.push_back(format_hex_rows(g));
        d["representatives"] = reps;
        return d;
      },
      py::arg("n"), py::arg("move") = "pivot", py::arg("universe") = "connected", py::arg("mode") = "unlabelled",
      py::arg("threads") = 0);

  py::class_<LinearCode>(m, "LinearCode")
      .def(py::init<int, std::vector<Mask>>(), py::arg("n"), py::arg("rows"))
      .def_static("parse", [](const std::string& s) { return parse_code_text(s); })
      .def_property_readonly("n", &LinearCode::n)
      .def_property_readonly("k", &LinearCode::k)
      .def_property_readonly("rows", &LinearCode::rows)
      .def("dual", [](const LinearCode& c) { return dual(c); })
      .def("graph", [](const LinearCode& c) { return graph_from_code(c); })
      .def("information_sets", [](const LinearCode& c) { return information_set_count(c); })
      .def("information_sets_brute", [](const LinearCode& c) { return information_set_count_brute(c); })
      .def("__str__", [](const LinearCode& c) { return format_code_text(c); });
  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"));
  m.def(
      "classify_codes",
      [](int n, int threads) {
        const CodeClassification c = classify_codes(n, threads);
        py::dict d;
        d["orbits"] = c.orbits;
        d["indecomposable"] = c.indecomposable;
        d["isodual"] = c.isodual;
        d["per_k"] = c.per_k;
        return d;
      },
      py::arg("n"), py::arg("threads") = 0);

  m.def(
      "table",
      [](int table, int max_n, int threads) {
        TableOptions o;
        o.threads = threads;
        const TableResult t = compute_table(table, max_n, o);
        py::list rows;
        for (const auto& row : t.rows) {
          py::dict r;
          r["n"] = row.n;
          for (const auto& cell : row.cells) r[py::str(cell.column)] = cell.display();
          rows.append(r);
        }
        py::dict d;
        d["rows"] = rows;
        d["mismatches"] = t.mismatches;
        d["ok"] = t.ok();
        return d;
      },
      py::arg("table"), py::arg("max_n"), py::arg("threads") = 0);
}
