#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rank0/finite_jacobian.hpp"
#include "rank0/pipeline.hpp"

namespace py = pybind11;
using namespace rank0;

namespace {

// Coefficients arrive as strings ("3", "-1/2") so that Python ints and
// Fractions of any size pass through exactly.
CurveModel model_from(int genus, const std::vector<std::string>& coeffs) {
  std::vector<BigRational> c;
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return validate_curve(genus, c);
}

std::vector<std::string> strings(const PolyRat& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coeffs()) out.push_back(to_string(c));
  return out;
}

PolyRat poly_from_strings(const std::vector<std::string>& v) {
  std::vector<BigRational> c;
  for (const auto& s : v) c.push_back(parse_rational(s));
  return poly_from(c);
}

JobConfig config_from(const py::dict& kw) {
  JobConfig c;
  c.assume_rank_zero = true;
  for (auto [k, v] : kw) {
    const auto key = k.cast<std::string>();
    if (key == "primes") c.primes = v.cast<std::vector<std::uint64_t>>();
    else if (key == "prime_count") c.prime_count = v.cast<int>();
    else if (key == "precision_start") c.precision_start = v.cast<long>();
    else if (key == "precision_max") c.precision_max = v.cast<long>();
    else if (key == "max_counting_prime") c.max_counting_prime = v.cast<std::uint64_t>();
    else if (key == "seed") c.seed = v.cast<std::uint64_t>();
    else if (key == "quadratic") c.compute_quadratic = v.cast<bool>();
    else if (key == "tk") c.compute_tk = v.cast<bool>();
    else if (key == "jobs") c.jobs = v.cast<int>();
    else if (key == "timeout") c.timeout_seconds = v.cast<double>();
    else if (key == "timings") c.include_timings = v.cast<bool>();
    else throw py::key_error("unknown option " + key);
  }
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rational and quadratic points on rank 0 hyperelliptic curves of genus 2 and 3";

  py::register_exception<InvalidCurve>(m, "InvalidCurve", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "run_curve",
      [](const std::string& line, const py::kwargs& kw) {
        JobConfig cfg = config_from(kw);
        CurveResult r;
        {
          py::gil_scoped_release release;
          r = run_curve_line(line, cfg);
        }
        return emit_report(r, Format::json, cfg.include_timings);
      },
      py::arg("line"), "Run one curve line; returns the JSON report.");

  m.def(
      "run_batch",
      [](const std::vector<std::string>& lines, const std::string& format, const py::kwargs& kw) {
        JobConfig cfg = config_from(kw);
        BatchSummary s;
        {
          py::gil_scoped_release release;
          s = run_batch(lines, cfg);
        }
        return emit_report(s, format_from_string(format), cfg.include_timings);
      },
      py::arg("lines"), py::arg("format") = "json");

  m.def(
      "torsion",
      [](int genus, const std::vector<std::string>& coeffs, const std::vector<std::uint64_t>& primes) {
        TorsionConfig cfg;
        cfg.primes = primes;
        TorsionGroup G;
        {
          py::gil_scoped_release release;
          G = torsion_subgroup(model_from(genus, coeffs), cfg);
        }
        py::list pts;
        for (const auto& t : G.points) pts.append(py::make_tuple(strings(t.D.a), strings(t.D.b), t.order));
        py::dict d;
        d["bound"] = G.bound.get_str();
        d["order"] = G.order();
        d["invariant_factors"] = G.invariant_factors;
        d["complete"] = G.complete;
        d["points"] = pts;
        d["diagnostics"] = G.diagnostics;
        return d;
      },
      py::arg("genus"), py::arg("coeffs"), py::arg("primes") = std::vector<std::uint64_t>{});

  m.def(
      "kummer",
      [](int genus, const std::vector<std::string>& coeffs, const std::vector<std::string>& a,
         const std::vector<std::string>& b) {
        auto C = model_from(genus, coeffs);
        MumfordQ D{poly_from_strings(a), poly_from_strings(b)};
        if (!satisfies_mumford(C.f, D)) throw py::value_error("not a Mumford pair on this curve");
        std::vector<std::string> out;
        for (const auto& c : kappa(C, D)) out.push_back(c.get_str());
        return out;
      },
      py::arg("genus"), py::arg("coeffs"), py::arg("a"), py::arg("b"));

  m.def(
      "classify",
      [](int genus, const std::vector<std::string>& coords) {
        std::vector<BigInt> R;
        for (const auto& s : coords) R.emplace_back(s);
        auto o = classify(genus, R);
        py::dict d;
        d["kind"] = to_string(o.kind);
        d["d"] = o.field_disc.get_str();
        d["x"] = py::make_tuple(to_string(o.x.u), to_string(o.x.v));
        d["delta"] = to_string(o.delta);
        return d;
      },
      py::arg("genus"), py::arg("coords"));

  m.def(
      "count_points",
      [](int genus, const std::vector<std::string>& coeffs, std::uint64_t p, int k) {
        return count_points(model_from(genus, coeffs), p, k);
      },
      py::arg("genus"), py::arg("coeffs"), py::arg("p"), py::arg("k") = 1);

  m.def(
      "l_polynomial",
      [](int genus, const std::vector<std::string>& coeffs, std::uint64_t p) {
        std::vector<std::string> out;
        for (const auto& c : l_polynomial(model_from(genus, coeffs), p).a) out.push_back(c.get_str());
        return out;
      },
      py::arg("genus"), py::arg("coeffs"), py::arg("p"));

  m.def(
      "good_primes",
      [](int genus, const std::vector<std::string>& coeffs, int n) { return good_primes(model_from(genus, coeffs), n); },
      py::arg("genus"), py::arg("coeffs"), py::arg("n"));
}
