#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chromabound/bounds.hpp"
#include "chromabound/chroma.hpp"
#include "chromabound/cli.hpp"
#include "chromabound/conjecture.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/serialize.hpp"

namespace py = pybind11;
using namespace chromabound;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
std::string dump(const Json& j) { return j.dump(); }

std::string chromatic(const std::string& graph6) {
  const Graph g = from_graph6(graph6);
  return dump(Json{{"graph", encode(g)}, {"chromatic", encode(chromatic_polynomial(g))}});
}

std::string count(const std::string& graph6, unsigned colors) {
  return count_colorings(from_graph6(graph6), colors).get_str();
}

std::string family(const std::string& kind, const std::string& spec_json) {
  const Json spec = parse_json(spec_json);
  Graph g;
  Poly closed;
  if (kind == "theta") {
    const auto s = decode_theta(spec);
    g = build_theta(s);
    closed = theta_poly(s);
  } else if (kind == "sk4") {
    const auto s = decode_sk4(spec);
    g = build_sk4(s);
    closed = sk4_poly(s);
  } else if (kind == "k3t") {
    const auto s = decode_k3t(spec);
    g = build_k3t(s);
    closed = k3t_poly(s);
  } else if (kind == "cactus") {
    const auto s = decode_cactus(spec);
    g = build_cactus(s);
    closed = cactus_poly(s);
  } else if (kind == "cstar") {
    const auto s = decode_cstar(spec);
    g = build_cstar(s);
    closed = cstar_poly(s);
  } else {
    throw InvalidSpec("unknown family " + kind);
  }
  const Poly engine = chromatic_polynomial(g);
  return dump(Json{{"graph", encode(g)},
                   {"closed_form", encode(closed)},
                   {"engine", encode(engine)},
                   {"matches", closed == engine}});
}

std::string bound(const std::string& lemma, const std::string& spec_json, const std::string& x_text) {
  const Json spec = parse_json(spec_json);
  const Rational x = parse_rational(x_text);
  auto abc = [&] {
    const auto v = spec.get<std::vector<int>>();
    if (v.size() != 3) throw InvalidSpec("expected three path sizes");
    return v;
  };
  BoundReport r;
  if (lemma == "theta") {
    const auto v = abc();
    r = check_theta_bound(v[0], v[1], v[2], x);
  } else if (lemma == "theta-uniform") {
    const auto v = abc();
    r = check_theta_uniform_bound(v[0], v[1], v[2], x);
  } else if (lemma == "sk4") {
    const auto v = abc();
    r = check_sk4_bound({v[0], v[1], v[2]}, x);
  } else if (lemma == "k3t") {
    r = check_k3t_bound(decode_k3t(spec), x);
  } else if (lemma == "product") {
    r = check_product_bound(spec.get<std::vector<int>>(), x);
  } else if (lemma == "cactus") {
    r = check_cactus_bound(decode_cactus(spec), x);
  } else {
    throw InvalidSpec("unknown lemma " + lemma);
  }
  return dump(encode(r));
}

std::string certify(const std::string& which, std::optional<int> parameter) {
  if (which == "k33son") return dump(encode(k33son_certificate(parameter.value_or(10))));
  if (which == "cactusson") return dump(encode(cactusson_certificate(parameter.value_or(6))));
  throw InvalidSpec("unknown certificate " + which);
}

std::string verify(const std::string& which, int order, int k, int workers) {
  EnumerationOptions options;
  options.workers = workers;
  py::gil_scoped_release release;
  if (which == "conjecture") return dump(encode(verify_conjecture(order, options)));
  if (which == "tomescu3") return dump(encode(verify_tomescu3(order, options)));
  if (which == "cliquebound") return dump(encode(verify_clique_bound(order, k, options)));
  if (which == "candidates") return dump(encode(finite_family_candidates(order, options)));
  throw InvalidSpec("unknown check " + which);
}

std::vector<std::string> enumerate(int order) {
  std::vector<std::string> out;
  for (const Graph& g : enumerate_connected(order)) out.push_back(to_graph6(g));
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"chromabound"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err, in);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact chromatic polynomials, bound checks and conjecture verification";
  py::register_exception<Error>(m, "ChromaboundError", PyExc_ValueError);

  m.def("chromatic", &chromatic, py::arg("graph6"));
  m.def("count_colorings", &count, py::arg("graph6"), py::arg("colors"));
  m.def("canonical_form", [](const std::string& g6) { return canonical_form(from_graph6(g6)); }, py::arg("graph6"));
  m.def("chromatic_number", [](const std::string& g6) { return chromatic_number(from_graph6(g6)); },
        py::arg("graph6"));
  m.def("conjectured_bound", [](int n, int k) { return dump(encode(conjectured_bound(n, k))); }, py::arg("n"),
        py::arg("k") = 4);
  m.def("family", &family, py::arg("kind"), py::arg("spec_json"));
  m.def("bound", &bound, py::arg("lemma"), py::arg("spec_json"), py::arg("x"));
  m.def("certify", &certify, py::arg("which"), py::arg("parameter") = std::nullopt);
  m.def("verify", &verify, py::arg("which"), py::arg("order"), py::arg("k") = 4, py::arg("workers") = 1);
  m.def("enumerate_connected", &enumerate, py::arg("order"));
  m.def("sk4_remark", [] { return dump(encode(sk4_remark_report())); });
  m.def("run_cli", &run_cli, py::arg("args"));
}
