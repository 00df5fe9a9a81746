#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "lpfbinom/binomial_kernel.hpp"
#include "lpfbinom/errors.hpp"
#include "lpfbinom/factorizer.hpp"
#include "lpfbinom/lpf_identity.hpp"
#include "lpfbinom/pell_conic.hpp"
#include "lpfbinom/torsion_poly.hpp"
#include "lpfbinom/verify.hpp"

namespace py = pybind11;
using namespace lpf;

namespace {

py::int_ to_py(const BigInt& v) {
  const std::string s = to_decimal(v);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list poly_to_py(const IntPolynomial& p) {
  py::list out;
  for (const BigInt& c : p.coeffs()) out.append(to_py(c));
  if (p.is_zero()) out.append(0);
  return out;
}

py::tuple point_to_py(const ConicPoint& p) { return py::make_tuple(p.x(), p.y()); }

py::dict scan_record_to_py(const ScanRecord& rec) {
  py::dict d;
  d["n"] = rec.n;
  d["p"] = rec.p;
  d["precondition_met"] = rec.precondition_met;
  d["r_lo"] = rec.r_lo;
  d["r_hi"] = rec.r_hi;
  d["vacuous"] = rec.vacuous();
  d["violations"] = rec.violations;
  return d;
}

}  // namespace

PYBIND11_MODULE(lpfbinom, m) {
  m.doc() = "Binomial symbol detecting the least prime factor of an odd integer";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("isqrt", &isqrt, py::arg("n"));
  m.def("binomial_general", [](std::int64_t mm, std::uint64_t k) { return to_py(binomial_general(mm, k)); },
        py::arg("m"), py::arg("k"));
  m.def("falling_factorial", [](std::int64_t mm, std::uint64_t k) { return to_py(falling_factorial(mm, k)); },
        py::arg("m"), py::arg("k"));
  m.def("product_identity_holds", &product_identity_holds, py::arg("a"));

  m.def("beta", [](std::uint64_t n, std::uint64_t r) { return to_py(beta(OddModulus(n), r)); },
        py::arg("n"), py::arg("r"));
  m.def("alpha", [](std::uint64_t n, std::uint64_t r) { return alpha(OddModulus(n), r); },
        py::arg("n"), py::arg("r"));
  m.def(
      "alpha_range",
      [](std::uint64_t n, std::uint64_t r_max) {
        std::vector<std::uint64_t> out;
        for (AlphaSweep s{OddModulus(n)}; s.r() <= r_max; s.advance()) out.push_back(s.alpha());
        return out;
      },
      py::arg("n"), py::arg("r_max"), "alpha(n, r) for r = 2 .. r_max.");
  m.def("least_prime_factor", &least_prime_factor, py::arg("n"));
  m.def(
      "classify",
      [](std::uint64_t n, std::uint64_t r) {
        const Classification c = classify(OddModulus(n), r);
        py::dict d;
        d["beta"] = to_py(c.eval.beta);
        d["alpha"] = c.eval.alpha;
        d["p"] = c.least_prime;
        d["class"] = std::string(to_string(c.cls.tag));
        d["expected"] = c.cls.expected ? py::object(py::int_(*c.cls.expected)) : py::object(py::none());
        d["consistent"] = c.consistent ? py::object(py::bool_(*c.consistent)) : py::object(py::none());
        return d;
      },
      py::arg("n"), py::arg("r"));
  m.def("wilson_holds", &wilson_holds, py::arg("n"));
  m.def("fleck_holds", [](std::uint64_t n, std::uint64_t r) { return fleck_holds(OddModulus(n), r); },
        py::arg("n"), py::arg("r"));

  m.def("psi", [](std::uint64_t n) { return poly_to_py(psi_recurrence(n)); }, py::arg("n"));
  m.def("psi_from_dickson", [](std::uint64_t n) { return poly_to_py(psi_from_dickson(n)); }, py::arg("n"));
  m.def("psi_closed_form", [](std::uint64_t n) { return poly_to_py(psi_closed_form(n)); }, py::arg("n"));
  m.def("dickson_e", [](std::uint64_t n, std::int64_t a) { return poly_to_py(dickson_e(n, a)); },
        py::arg("n"), py::arg("a") = 1);
  m.def("pow_x_minus_2", [](std::uint64_t mm) { return poly_to_py(pow_x_minus_2(mm)); }, py::arg("m"));
  m.def("diff_mod", [](std::uint64_t n) { return diff_mod(OddModulus(n)).coeffs; }, py::arg("n"));
  m.def("psi_mod_p_congruence", &psi_mod_p_congruence, py::arg("p"));

  m.def("on_conic", [](std::uint64_t x, std::uint64_t y, std::int64_t delta, std::uint64_t mod) {
    return on_conic(x, y, ConicContext(delta, mod));
  }, py::arg("x"), py::arg("y"), py::arg("delta"), py::arg("mod"));
  m.def(
      "conic_add",
      [](std::pair<std::uint64_t, std::uint64_t> p1, std::pair<std::uint64_t, std::uint64_t> p2, std::int64_t delta,
         std::uint64_t mod) {
        const ConicContext ctx(delta, mod);
        return point_to_py(add(ConicPoint(p1.first, p1.second, ctx), ConicPoint(p2.first, p2.second, ctx)));
      },
      py::arg("p1"), py::arg("p2"), py::arg("delta"), py::arg("mod"));
  m.def(
      "conic_mul",
      [](std::uint64_t k, std::pair<std::uint64_t, std::uint64_t> p, std::int64_t delta, std::uint64_t mod) {
        const ConicContext ctx(delta, mod);
        return point_to_py(scalar_mul(k, ConicPoint(p.first, p.second, ctx)));
      },
      py::arg("k"), py::arg("p"), py::arg("delta"), py::arg("mod"));
  m.def(
      "torsion_x_identity_check",
      [](std::uint64_t n, std::pair<std::uint64_t, std::uint64_t> p, std::int64_t delta, std::uint64_t mod) {
        const ConicContext ctx(delta, mod);
        return torsion_x_identity_check(n, ConicPoint(p.first, p.second, ctx));
      },
      py::arg("n"), py::arg("p"), py::arg("delta"), py::arg("mod"));

  m.def("precondition_holds", &precondition_holds, py::arg("n"), py::arg("p"));
  m.def(
      "factor",
      [](std::uint64_t n, bool trial_division) {
        const FactorReport rep =
            binary_search_factor(n, trial_division ? TrialDivision::Permitted : TrialDivision::Forbidden);
        py::dict d;
        d["n"] = rep.n;
        d["outcome"] = std::string(to_string(rep.outcome));
        d["factor"] = rep.factor ? py::object(py::int_(*rep.factor)) : py::object(py::none());
        d["alpha_evaluations"] = rep.alpha_evaluations;
        d["interval_trace"] = rep.interval_trace;
        if (rep.confirmation) {
          d["least_prime_factor"] = rep.confirmation->least_prime;
          d["precondition"] = rep.confirmation->precondition;
          d["agrees"] = rep.confirmation->agrees;
        }
        return d;
      },
      py::arg("n"), py::arg("trial_division") = true);
  m.def(
      "scan",
      [](std::uint64_t n_min, std::uint64_t n_max, unsigned shards) {
        std::vector<ScanRecord> buf;
        {
          py::gil_scoped_release release;
          scan_conjecture(n_min, n_max, shards, [&](const ScanRecord& r) { buf.push_back(r); });
        }
        py::list records;
        for (const auto& r : buf) records.append(scan_record_to_py(r));
        return records;
      },
      py::arg("n_min"), py::arg("n_max"), py::arg("shards") = 1);
  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t bound, std::uint64_t seed) {
        auto res = run_suite(suite, bound, seed);
        if (!res) throw py::value_error("unknown suite: " + suite);
        py::dict d;
        d["suite"] = res->suite;
        d["passed"] = res->passed;
        d["checked"] = res->checked;
        if (res->counterexample) {
          py::dict ce;
          for (const auto& [k, v] : *res->counterexample) ce[py::str(k)] = v;
          d["counterexample"] = ce;
        } else {
          d["counterexample"] = py::none();
        }
        return d;
      },
      py::arg("suite"), py::arg("bound"), py::arg("seed") = 1234567);
}
