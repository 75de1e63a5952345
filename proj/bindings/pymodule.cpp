#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "heckepairs/angles.hpp"
#include "heckepairs/bounds.hpp"
#include "heckepairs/hecke.hpp"
#include "heckepairs/plancherel.hpp"
#include "heckepairs/qexpansion.hpp"
#include "heckepairs/selberg.hpp"
#include "heckepairs/traceformula.hpp"
#include "heckepairs/version.hpp"

namespace py = pybind11;
using namespace heckepairs;

namespace {

py::object to_pyint(const mpz_class& z) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::list matrix_to_py(const std::vector<std::vector<mpz_class>>& m) {
  py::list rows;
  for (const auto& row : m) {
    py::list r;
    for (const auto& e : row) r.append(to_pyint(e));
    rows.append(r);
  }
  return rows;
}

py::dict angles_to_py(const AngleSet& a) {
  py::dict d;
  d["k"] = a.k;
  d["p"] = a.p;
  d["dim"] = a.dim;
  d["clamped"] = a.clamped;
  py::list eig, th, u;
  for (const auto& r : a.eigenvalues) eig.append(r.approx);
  for (double t : a.theta_d) th.append(t);
  for (double x : a.u) u.append(x);
  d["eigenvalues"] = eig;
  d["thetas"] = th;
  d["u"] = u;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hecke eigenvalue angles, Selberg majorants and pair-count bounds";
  m.attr("__version__") = kVersion;

  m.def("dim_sk1", &dim_sk1, py::arg("k"),
        "Dimension of the weight-k level-1 cusp space.");

  m.def(
      "miller_basis",
      [](int k, int prec) {
        MillerBasis b = miller_basis(k, prec);
        py::list forms;
        for (const auto& f : b.forms) {
          py::list cs;
          for (const auto& c : f.coeffs()) cs.append(to_pyint(c));
          forms.append(cs);
        }
        py::dict d;
        d["k"] = b.weight;
        d["dim"] = b.dim;
        d["forms"] = forms;
        return d;
      },
      py::arg("k"), py::arg("prec"),
      "Echelonized integral basis; forms come as coefficient lists.");

  m.def(
      "hecke_matrix",
      [](int k, long n) {
        HeckeMatrix h = hecke_matrix(k, n);
        py::dict d;
        d["k"] = h.k;
        d["n"] = h.n;
        d["dim"] = h.dim;
        d["entries"] = matrix_to_py(h.entries);
        return d;
      },
      py::arg("k"), py::arg("n"));

  m.def(
      "charpoly",
      [](int k, long n) {
        CharPoly cp = charpoly(hecke_matrix(k, n));
        py::list cs;
        for (const auto& c : cp.coeffs) cs.append(to_pyint(c));
        return cs;
      },
      py::arg("k"), py::arg("n"),
      "Characteristic polynomial of T_n, coefficients low to high.");

  m.def(
      "trace_tn", [](int k, long n) { return to_pyint(trace_tn(k, n)); },
      py::arg("k"), py::arg("n"), "Trace of T_n on S_k(1) by the trace formula.");

  m.def("hurwitz_twelfths", &hurwitz_twelfths_slow, py::arg("d"),
        "12 H(d) as an integer.");

  m.def(
      "moment_sum",
      [](int k, long p, int mm) { return moment_sum(k, p, mm).to_double(); },
      py::arg("k"), py::arg("p"), py::arg("m"),
      "Normalized trace-formula moment of T_{p^m}.");

  m.def(
      "angles", [](int k, long p) { return angles_to_py(angle_set(k, p)); },
      py::arg("k"), py::arg("p"),
      "Certified eigenvalue angles of T_p with normalized positions.");

  m.def(
      "empirical_moment",
      [](int k, long p, int mm) {
        return empirical_moment(angle_set(k, p), mm).to_double();
      },
      py::arg("k"), py::arg("p"), py::arg("m"));

  m.def(
      "maeda_check",
      [](int k, long p, int budget) {
        PairCountReport r = analyze_charpoly(charpoly(hecke_matrix(k, p)), budget);
        py::dict d;
        d["k"] = r.k;
        d["dim"] = r.dim;
        d["squarefree"] = r.squarefree;
        d["irreducible"] = std::string(verdict_str(r.irreducible));
        d["pair_count"] = to_pyint(r.pair_count);
        d["sn_certified"] = r.sn_galois.certified;
        d["witnesses"] = r.sn_galois.witnesses;
        return d;
      },
      py::arg("k"), py::arg("p") = 2, py::arg("budget") = 25);

  m.def(
      "selberg_coeffs",
      [](const std::string& a, const std::string& b, int M) {
        SelbergCoeffs s = build_majorant(mpq_class(a), mpq_class(b), M);
        py::list cs;
        for (long n = -M; n <= M; ++n) {
          auto c = s.coeff(n);
          cs.append(py::make_tuple(n, c.real(), c.imag()));
        }
        py::dict d;
        d["M"] = s.M;
        d["c0"] = s.coeff(0).real();
        d["c0_exact"] = s.c0.get_str();
        d["coeffs"] = cs;
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("M"),
      "Majorant Fourier coefficients; endpoints are rational strings like '-1/10'.");

  m.def(
      "check_majorant",
      [](const std::string& a, const std::string& b, int M, int grid) {
        SelbergCheck r = check_majorant(build_majorant(mpq_class(a), mpq_class(b), M), grid);
        py::dict d;
        d["majorization"] = r.majorization;
        d["constant_exact"] = r.constant_exact;
        d["coeff_bound"] = r.coeff_bound;
        d["min_slack_a"] = r.min_slack_a;
        d["min_slack_c"] = r.min_slack_c;
        d["ok"] = r.ok();
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("M"), py::arg("grid") = 10000);

  m.def("lemma1_bound", &lemma1_bound, py::arg("k"), py::arg("N"), py::arg("p"),
        py::arg("m"));
  m.def("alt_bound", &alt_bound, py::arg("k"), py::arg("N"), py::arg("p"),
        py::arg("m"));
  m.def(
      "c_coeff",
      [](long p, int mm) { return Real::from(c_coeff(p, mm)).to_double(); },
      py::arg("p"), py::arg("m"), "Plancherel moment of 2cos(m theta).");
  m.def("choose_M", &choose_M, py::arg("k"), py::arg("N"), py::arg("p"));
  m.def("lambert_w", &lambert_w, py::arg("x"));

  m.def(
      "bound_report",
      [](int k, long N, long p) {
        BoundReport r = bound_report(k, N, p);
        py::dict d;
        d["k"] = r.k;
        d["N"] = r.N;
        d["p"] = r.p;
        d["dim"] = r.dim;
        d["dim_exact"] = r.dim_exact;
        d["m_star"] = r.m.m_star;
        d["theorem1"] = r.theorem1;
        if (r.has_key) {
          d["rhs"] = r.key.rhs;
          d["pair_count"] = to_pyint(r.pair_count);
        }
        return d;
      },
      py::arg("k"), py::arg("N") = 1, py::arg("p") = 2);

  m.def(
      "sample",
      [](long p, std::uint64_t seed, std::size_t count) {
        return PlancherelSampler(p, seed).sample(count, 0);
      },
      py::arg("p"), py::arg("seed"), py::arg("count"),
      "Reproducible draws from the p-adic Plancherel measure on [0, pi].");

  m.def(
      "deviation_scaling",
      [](long p, const std::vector<long>& dims, int trials, int mm,
         std::uint64_t seed) {
        ScalingResult r = deviation_scaling(p, dims, trials, mm, seed);
        py::list per;
        for (const auto& d : r.per_dim) per.append(py::make_tuple(d.dim, d.rms));
        py::dict d;
        d["slope"] = r.slope;
        d["stderr"] = r.stderr_slope;
        d["per_dim"] = per;
        return d;
      },
      py::arg("p"), py::arg("dims"), py::arg("trials"), py::arg("m"),
      py::arg("seed"));
}
