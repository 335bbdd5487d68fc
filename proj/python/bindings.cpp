#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "specnorm/errors.hpp"
#include "specnorm/extremal.hpp"
#include "specnorm/graph.hpp"
#include "specnorm/io.hpp"
#include "specnorm/linalg.hpp"
#include "specnorm/oracle.hpp"
#include "specnorm/report.hpp"
#include "specnorm/witness.hpp"

namespace py = pybind11;
using namespace specnorm;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& arr) {
  if (arr.ndim() != 2) throw py::value_error("expected a 2-d array");
  const auto rows = static_cast<std::size_t>(arr.shape(0));
  const auto cols = static_cast<std::size_t>(arr.shape(1));
  if (rows == 0 || cols == 0) throw py::value_error("matrix dimensions must be positive");
  const Complex* p = arr.data();
  return ComplexMatrix(rows, cols, std::vector<Complex>(p, p + rows * cols));
}

py::array to_array(const ComplexMatrix& a) {
  const std::vector<py::ssize_t> shape{static_cast<py::ssize_t>(a.rows()), static_cast<py::ssize_t>(a.cols())};
  if (a.is_real()) {
    py::array_t<double> out(shape);
    double* p = out.mutable_data();
    for (std::size_t k = 0; k < a.entries().size(); ++k) p[k] = a.entries()[k].real();
    return out;
  }
  py::array_t<Complex> out(shape);
  std::copy(a.entries().begin(), a.entries().end(), out.mutable_data());
  return out;
}

py::object to_python(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      py::dict d;
      for (auto it = j.begin(); it != j.end(); ++it) d[py::str(it.key())] = to_python(*it);
      return d;
    }
    case nlohmann::json::value_t::array: {
      py::list l;
      for (const auto& v : j) l.append(to_python(v));
      return l;
    }
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    default: return py::none();
  }
}

Graph make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  return Graph(n, edges);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discrete matrix norms: witnesses, exact oracles and audits";

  static py::exception<Error> error_type(m, "SpecnormError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.kind())), std::string(e.what()));
      PyErr_SetObject(error_type.ptr(), args.ptr());
    }
  });

  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  auto solver = [](std::uint64_t seed, double tol, std::size_t max_iter) { return SolverOptions{tol, max_iter, seed}; };

  m.def(
      "norms",
      [solver](const CArray& arr, std::uint64_t seed, double tol, std::size_t max_iter) {
        const ComplexMatrix a = to_matrix(arr);
        const TopSingular top = top_two_singular(a, solver(seed, tol, max_iter));
        return to_python(report_norms(a, norm_profile(a, top), top.second.value));
      },
      py::arg("a"), py::arg("seed") = 0x5EED, py::arg("tol") = 1e-10, py::arg("max_iter") = 10000,
      "Norm profile: induced 1/inf norms, spectral norm, height and sigma_2.");

  m.def(
      "delta_witness",
      [solver](const CArray& arr, std::uint64_t seed, double tol, std::size_t max_iter) {
        return to_python(report_delta_witness(delta_witness(to_matrix(arr), solver(seed, tol, max_iter))));
      },
      py::arg("a"), py::arg("seed") = 0x5EED, py::arg("tol") = 1e-10, py::arg("max_iter") = 10000);

  m.def(
      "rho_witness",
      [solver](const CArray& arr, std::uint64_t seed, double tol, std::size_t max_iter) {
        return to_python(report_rho_witness(rho_witness(to_matrix(arr), solver(seed, tol, max_iter))));
      },
      py::arg("a"), py::arg("seed") = 0x5EED, py::arg("tol") = 1e-10, py::arg("max_iter") = 10000);

  m.def(
      "exact_delta",
      [](const CArray& arr, std::size_t cap, std::size_t workers) {
        const ComplexMatrix a = to_matrix(arr);
        OracleResult r;
        {
          py::gil_scoped_release release;
          r = exact_delta(a, cap, {workers, 14});
        }
        return to_python(report_oracle("delta", r));
      },
      py::arg("a"), py::arg("cap") = kDefaultDeltaCap, py::arg("workers") = 0);

  m.def(
      "exact_rho",
      [](const CArray& arr, std::size_t cap_real, std::size_t cap_pair, std::size_t workers) {
        const ComplexMatrix a = to_matrix(arr);
        OracleResult r;
        {
          py::gil_scoped_release release;
          r = exact_rho(a, cap_real, cap_pair, {workers, 14});
        }
        return to_python(report_oracle("rho", r));
      },
      py::arg("a"), py::arg("cap_real") = kDefaultRhoRealCap, py::arg("cap_pair") = kDefaultRhoPairCap,
      py::arg("workers") = 0);

  m.def("gen_invsqrt", [](std::size_t n) { return to_array(gen_invsqrt(n)); }, py::arg("n"));
  m.def(
      "gen_tensor",
      [](unsigned power) {
        if (power > kTensorDenseCap) fail(ErrorKind::OutOfRange, "dense output is limited to m <= 10");
        return to_array(*gen_tensor_power(power).matrix);
      },
      py::arg("m"));

  m.def("parse_matrix", [](const std::string& text) { return to_array(parse_matrix(text)); }, py::arg("text"));
  m.def("format_matrix", [](const CArray& arr) { return format_matrix(to_matrix(arr)); }, py::arg("a"));

  m.def(
      "graph_audit",
      [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t samples,
         std::uint64_t seed) {
        const Graph g = make_graph(n, edges);
        const GraphSpectralProfile p = spectral_profile(g);
        return to_python(report_graph_audit(g, p, forward_audit(g, p, samples, seed)));
      },
      py::arg("n"), py::arg("edges"), py::arg("samples") = 1000, py::arg("seed") = 0x5EED);

  m.def(
      "graph_witness",
      [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
        const Graph g = make_graph(n, edges);
        return to_python(report_graph_witness(g, delta_subset_witness(g), centered_witnesses(g)));
      },
      py::arg("n"), py::arg("edges"));

  m.def(
      "kneser_audit", [](unsigned power, std::size_t cap) { return to_python(report_kneser(kneser_norm_audit(power, cap))); },
      py::arg("m"), py::arg("cap") = kDefaultDeltaCap);
  m.def("tau", [](unsigned power) { return to_python(report_tau(tau_max_scan(power))); }, py::arg("m"));
  m.def("tau_scaled_series", [](unsigned m_max) { return tau_scaled_series(m_max); }, py::arg("m_max"));
  m.def("entropy", [](double step) { return to_python(report_entropy(entropy_analysis(step))); },
        py::arg("step") = 1e-3);
}
