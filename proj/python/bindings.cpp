#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "padic_moments/checks.hpp"
#include "padic_moments/cli.hpp"
#include "padic_moments/congruence.hpp"
#include "padic_moments/serialization.hpp"

namespace py = pybind11;
using namespace padic;

// Rationals cross the boundary as "num/den" strings; the Python package
// turns them into fractions.Fraction.

namespace {

std::vector<std::tuple<int, int, std::string>> terms(const QTSeries& s) {
  std::vector<std::tuple<int, int, std::string>> out;
  s.for_each_nonzero([&](int i, int j, const Rational& c) { out.emplace_back(i, j, to_string(c)); });
  return out;
}

py::dict report_dict(const CongruenceReport& r) {
  py::dict d;
  d["label"] = r.label;
  d["sequence"] = r.sequence;
  d["passed"] = r.passed();
  d["min_valuation"] = r.min_valuation == kInfiniteValuation ? py::object(py::none()) : py::int_(r.min_valuation);
  py::list offenders;
  for (const auto& o : r.offenders) offenders.append(py::make_tuple(o.q_degree, o.t_degree, o.valuation));
  d["offenders"] = offenders;
  d["screened"] = r.screened;
  return d;
}

template <class T>
void register_error(py::module_& m, const char* name, py::object base) {
  static py::exception<T> exc(m, name, base);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const T& e) {
      py::set_error(exc, e.what());
    }
  });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact p-adic moment sequences (C++ core)";

  // Translators run newest first, so the base class goes in before the subclasses.
  static py::exception<Error> base_error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(base_error, e.what());
    }
  });
  register_error<NonIntegralError>(m, "NonIntegralError", base_error);
  register_error<ConfigError>(m, "ConfigError", base_error);
  register_error<DomainError>(m, "DomainError", base_error);
  register_error<ProfileMismatchError>(m, "ProfileMismatchError", base_error);
  register_error<RouteMismatchError>(m, "RouteMismatchError", base_error);

  py::class_<PrecisionProfile>(m, "PrecisionProfile")
      .def(py::init([](unsigned long p, int precision, int q_order, int tmin, int tmax, int nmax) {
             PrecisionProfile pr;
             pr.p = p;
             pr.precision = precision;
             pr.q_order = q_order;
             pr.tmin = tmin;
             pr.tmax = tmax;
             pr.nmax = nmax;
             pr.validate();
             return pr;
           }),
           py::arg("p") = 3, py::arg("precision") = 4, py::arg("q_order") = 1, py::arg("tmin") = -16,
           py::arg("tmax") = 1, py::arg("nmax") = 8)
      .def_readonly("p", &PrecisionProfile::p)
      .def_readonly("precision", &PrecisionProfile::precision)
      .def_readonly("q_order", &PrecisionProfile::q_order)
      .def_readonly("tmin", &PrecisionProfile::tmin)
      .def_readonly("tmax", &PrecisionProfile::tmax)
      .def_readonly("nmax", &PrecisionProfile::nmax)
      .def("__eq__", [](const PrecisionProfile& a, const PrecisionProfile& b) { return a == b; })
      .def("__repr__", [](const PrecisionProfile& pr) {
        std::ostringstream s;
        s << "PrecisionProfile(p=" << pr.p << ", precision=" << pr.precision << ", q_order=" << pr.q_order
          << ", tmin=" << pr.tmin << ", tmax=" << pr.tmax << ", nmax=" << pr.nmax << ")";
        return s.str();
      });

  m.def("default_profile", [](unsigned long p, const std::string& kind) {
    return default_profile(p, parse_orientation_kind(kind));
  }, py::arg("p"), py::arg("kind"));

  py::class_<QTSeries>(m, "QTSeries")
      .def_property_readonly("profile", &QTSeries::profile)
      .def("coeff", [](const QTSeries& s, int i, int j) { return to_string(s.coeff(i, j)); })
      .def("terms", &terms)
      .def("is_zero", &QTSeries::is_zero)
      .def("to_json", [](const QTSeries& s) { return to_json(s).dump(); })
      .def("__eq__", [](const QTSeries& a, const QTSeries& b) { return a == b; });

  py::class_<MomentSequence>(m, "MomentSequence")
      .def_property_readonly("kind", [](const MomentSequence& s) { return to_string(s.kind); })
      .def_property_readonly("route", [](const MomentSequence& s) { return to_string(s.route); })
      .def_property_readonly("c", [](const MomentSequence& s) { return to_string(s.c); })
      .def_property_readonly("profile", [](const MomentSequence& s) { return s.profile; })
      .def_property_readonly("nmax", &MomentSequence::nmax)
      .def("at", &MomentSequence::at, py::return_value_policy::copy)
      .def("to_json", [](const MomentSequence& s) { return to_json(s).dump(); })
      .def("__eq__", [](const MomentSequence& a, const MomentSequence& b) { return a == b; });

  m.def("moment_sequence_from_json", [](const std::string& text) {
    return moment_sequence_from_json(nlohmann::json::parse(text));
  });

  m.def(
      "compute_moments",
      [](const std::string& kind, const std::string& route, const std::string& c, const PrecisionProfile& pr,
         const std::string& variant) {
        const OrientationKind k = parse_orientation_kind(kind);
        const Route r = parse_route(route);
        const ToddSharpVariant v = parse_variant(variant);
        const Rational cr = parse_rational(c);
        py::gil_scoped_release release;
        return compute_moments(k, r, cr, pr, v);
      },
      py::arg("kind"), py::arg("route"), py::arg("c"), py::arg("profile"), py::arg("variant") = "full");

  py::class_<TestPolynomial>(m, "TestPolynomial")
      .def(py::init([](const std::map<int, std::string>& coefficients, const std::string& label) {
             TestPolynomial f;
             for (const auto& [k, a] : coefficients) {
               const Rational r = parse_rational(a);
               if (r != 0) f.coefficients[k] = r;
             }
             f.label = label;
             return f;
           }),
           py::arg("coefficients"), py::arg("label") = "f")
      .def_property_readonly("coefficients", [](const TestPolynomial& f) {
        std::map<int, std::string> out;
        for (const auto& [k, a] : f.coefficients) out[k] = to_string(a);
        return out;
      })
      .def_readonly("label", &TestPolynomial::label)
      .def("degree", &TestPolynomial::degree)
      .def("shifted", [](const TestPolynomial& f, int s) { return shifted(f, s); });

  m.def("canonical_family", &canonical_family, py::arg("p"), py::arg("i"), py::arg("sharpened") = false);
  m.def("verify", [](const TestPolynomial& f, const MomentSequence& M) { return report_dict(verify(f, M)); });
  m.def("pair", &pair);

  m.def(
      "digit_table",
      [](const MomentSequence& M, int n_first, int n_last, const std::vector<int>& cols, int digits, int q_degree) {
        const DigitTable t = digit_table(M, n_first, n_last, cols, digits, q_degree);
        std::vector<std::vector<std::string>> cells;
        for (const auto& row : t.cells) {
          cells.emplace_back();
          for (const auto& c : row) cells.back().push_back(c.digit_string());
        }
        return py::make_tuple(t.row_labels, t.column_labels, cells, render_text(t), render_csv(t));
      },
      py::arg("M"), py::arg("n_first"), py::arg("n_last"), py::arg("columns"), py::arg("digits"),
      py::arg("q_degree") = 0);

  m.def("reduce", [](const std::string& value, unsigned long p, int N) {
    const PadicInteger r = reduce(parse_rational(value), p, N);
    return py::make_tuple(py::int_(py::str(r.residue.get_str())), r.digit_string());
  }, py::arg("value"), py::arg("p"), py::arg("N"));
  m.def("valuation", [](const std::string& value, unsigned long p) -> py::object {
    const long v = valuation(parse_rational(value), p);
    if (v == kInfiniteValuation) return py::none();
    return py::int_(v);
  });
  m.def("bernoulli", [](int n) { return to_string(bernoulli(n)); });
  m.def("eisenstein_g", [](int k, const PrecisionProfile& pr) { return eisenstein_g(k, pr); });

  m.def("selfcheck", [](const std::string& c, const PrecisionProfile& pr) {
    const Rational cr = parse_rational(c);
    std::vector<CheckResult> results;
    {
      py::gil_scoped_release release;
      results = run_selfcheck(cr, pr);
    }
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& r : results) out.emplace_back(r.name, r.passed, r.detail);
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
