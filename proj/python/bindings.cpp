// Thin string-level bindings: specs as text, graphs as graph6.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tb/audit.hpp"
#include "tb/balloon.hpp"
#include "tb/construction.hpp"
#include "tb/decomposition.hpp"
#include "tb/error.hpp"
#include "tb/formulas.hpp"
#include "tb/graph6.hpp"
#include "tb/oracle.hpp"
#include "tb/subgraph.hpp"

namespace py = pybind11;

namespace {

std::string branch_name(tb::Branch b) { return b == tb::Branch::k_eq_k1 ? "k_eq_k1" : "k_gt_k1"; }

std::vector<tb::Graph> decode_all(const std::vector<std::string>& codes) {
  std::vector<tb::Graph> out;
  for (const auto& c : codes) out.push_back(tb::decode_graph6(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_turanballoon, m) {
  py::register_exception<tb::Error>(m, "TuranBalloonError", PyExc_ValueError);

  m.def("chvatal_hanson", &tb::chvatal_hanson, py::arg("nu"), py::arg("delta"));
  m.def("e_base", &tb::e_base, py::arg("n"), py::arg("a"));

  m.def("analyze", [](const std::string& spec) {
    tb::BalloonInput in = tb::parse_spec(spec);
    tb::AnalysisReport r = tb::analyze(in.tree, in.spec);
    return py::dict(py::arg("a") = r.a, py::arg("k") = r.k, py::arg("k1") = r.k1, py::arg("u") = r.u_name,
                    py::arg("beta") = r.beta, py::arg("nu") = r.nu, py::arg("branch") = branch_name(r.branch));
  }, py::arg("spec"));

  m.def("balloon", [](const std::string& spec) {
    tb::BalloonInput in = tb::parse_spec(spec);
    return tb::encode_graph6(tb::build_balloon(in.tree, in.spec));
  }, py::arg("spec"), "graph6 of the odd-ballooning");

  m.def("decomposition_family", [](const std::string& spec) {
    tb::BalloonInput in = tb::parse_spec(spec);
    return tb::decomposition_family(in.tree, in.spec).graph6_lines();
  }, py::arg("spec"));

  m.def("turan_number", [](int n, const std::string& spec) {
    tb::BalloonInput in = tb::parse_spec(spec);
    tb::TuranReport r = tb::turan_number(n, in.tree, in.spec);
    return py::dict(py::arg("total") = r.total, py::arg("base") = r.base, py::arg("middle") = r.middle,
                    py::arg("tail") = r.tail, py::arg("branch") = branch_name(r.branch),
                    py::arg("large_n_only") = r.large_n_only);
  }, py::arg("n"), py::arg("spec"));

  m.def("extremal_candidate", [](int n, const std::string& spec) {
    tb::BalloonInput in = tb::parse_spec(spec);
    return tb::encode_graph6(tb::extremal_candidate(n, in.tree, in.spec).graph);
  }, py::arg("n"), py::arg("spec"), "graph6 of the extremal candidate");

  m.def("contains", [](const std::string& host, const std::string& pattern) {
    return tb::contains_subgraph(tb::decode_graph6(host), tb::decode_graph6(pattern));
  }, py::arg("host"), py::arg("pattern"));

  m.def("ex_exact", [](int n, const std::vector<std::string>& family) {
    tb::ExResult r = tb::ex_exact(n, decode_all(family));
    return py::make_tuple(r.value, tb::encode_graph6(r.witness));
  }, py::arg("n"), py::arg("family"), "(value, witness graph6)");

  m.def("f2_exact", [](int n, const std::string& h) { return tb::f2_exact(n, tb::decode_graph6(h)); },
        py::arg("n"), py::arg("target"));

  m.def("audit", [](const std::string& name, long long samples, std::uint64_t seed) {
    tb::AuditResult r = tb::run_audit(name, samples, seed);
    return py::dict(py::arg("cases") = r.cases, py::arg("premises_met") = r.premises_met,
                    py::arg("counterexamples") = r.counterexamples);
  }, py::arg("name"), py::arg("samples") = 1000, py::arg("seed") = 0);
}
