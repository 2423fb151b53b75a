#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "racgc/classify.hpp"
#include "racgc/cli.hpp"
#include "racgc/errors.hpp"
#include "racgc/graph_io.hpp"
#include "racgc/jsj.hpp"
#include "racgc/orbicomplex.hpp"
#include "racgc/witness.hpp"

#include <sstream>

namespace py = pybind11;
using namespace racgc;

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(); }

py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> store{"racgc"};
  store.insert(store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : store) argv.push_back(s.data());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_racgc, m) {
  m.doc() = "right-angled Coxeter group commensurability toolkit";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<Unsupported>(m, "Unsupported", PyExc_NotImplementedError);
  py::register_exception<InvariantFailure>(m, "InvariantFailure", PyExc_RuntimeError);

  m.def("euler", [](const std::string& g) { return to_string(euler_characteristic(load_graph(g))); },
        py::arg("graph"));
  m.def("theta_vector", [](const std::vector<int>& n) {
    std::vector<std::string> out;
    for (const auto& x : theta_vector(make_theta(n))) out.push_back(to_string(x));
    return out;
  });
  m.def("cycle_data", [](const std::string& g) {
    auto c = recognize_theta_cycle(load_graph(g));
    if (!c) throw InvalidInput("not a cycle of generalized theta-graphs");
    return dump(cycle_data_to_json(cycle_data(*c)));
  });
  m.def("in_G_3convex", [](const std::string& g) { return validate(load_graph(g)).in_G_3convex; });
  m.def("jsj", [](const std::string& g) {
    auto gr = load_graph(g);
    return dump(jsj_to_json(gr, jsj_decomposition(gr)));
  });
  m.def("classify", [](const std::string& a, const std::string& b) {
    return dump(decision_to_json(classify_graphs(load_graph(a), load_graph(b))));
  });
  m.def("cover16", [](const std::string& g) {
    auto gr = load_graph(g);
    return dump(cover16_to_json(gr, cover16(gr)));
  });
  m.def("amalgam_to_racg", [](const std::string& x) { return dump(racg_conversion_to_json(tree_to_racg(load_amalgam(x)))); });
  m.def("run", &run_cli, py::arg("args"));
}
