// Command line front end. Every subcommand prints a single JSON document
// (maeda prints one JSON object per line after a header) with the invocation
// config and the artifact version embedded, so reruns with identical flags
// are byte-identical. Exit codes: 0 ok, 1 bad input, 2 internal consistency
// failure.

#include <clocale>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_writer.hpp"

#include "heckepairs/angles.hpp"
#include "heckepairs/bounds.hpp"
#include "heckepairs/errors.hpp"
#include "heckepairs/hecke.hpp"
#include "heckepairs/plancherel.hpp"
#include "heckepairs/qexpansion.hpp"
#include "heckepairs/selberg.hpp"
#include "heckepairs/traceformula.hpp"
#include "heckepairs/version.hpp"

namespace {

using namespace heckepairs;

mpq_class parse_rational(const std::string& s) {
  try {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
      mpq_class q(s, 10);
      if (q.get_den() == 0) throw heckepairs::invalid_argument("zero denominator: " + s);
      q.canonicalize();
      return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw heckepairs::invalid_argument("bad rational: " + s);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw heckepairs::invalid_argument("bad rational: " + s);
  }
}

std::pair<int, int> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw heckepairs::invalid_argument("range must be lo:hi, got " + s);
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(s.substr(0, colon));
    hi = std::stoi(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw heckepairs::invalid_argument("range must be lo:hi, got " + s);
  }
  if (lo > hi) throw heckepairs::invalid_argument("empty range " + s);
  return {lo, hi};
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      out.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw heckepairs::invalid_argument("bad integer list: " + s);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void emit(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::fwrite(body.data(), 1, body.size(), stdout);
    std::fputc('\n', stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw heckepairs::invalid_argument("cannot open output file " + path);
  f << body << '\n';
}

void head(JsonWriter& w, const char* command) {
  w.key("command").value(command);
  w.key("version").value(kVersion);
}

void run_basis(int k, int prec, const std::string& out) {
  MillerBasis b = (prec > 0) ? miller_basis(k, prec)
                             : miller_basis(k, dim_sk1(k) + 10);
  JsonWriter w;
  w.begin_object();
  head(w, "basis");
  w.key("config").begin_object();
  w.key("k").value(k);
  w.key("prec").value(b.forms.empty() ? (prec > 0 ? prec : dim_sk1(k) + 10)
                                      : b.forms[0].prec());
  w.end_object();
  w.key("k").value(k);
  w.key("dim").value(b.dim);
  w.key("forms").begin_array();
  for (const auto& f : b.forms) {
    w.begin_array();
    for (const auto& c : f.coeffs()) w.value(c);
    w.end_array();
  }
  w.end_array();
  w.end_object();
  emit(w.str(), out);
}

void run_hecke(int k, long n, const std::string& out) {
  HeckeMatrix m = hecke_matrix(k, n);
  CharPoly cp = charpoly(m);
  JsonWriter w;
  w.begin_object();
  head(w, "hecke");
  w.key("config").begin_object();
  w.key("k").value(k);
  w.key("n").value(n);
  w.end_object();
  w.key("k").value(k);
  w.key("n").value(n);
  w.key("dim").value(m.dim);
  w.key("matrix").begin_array();
  for (const auto& row : m.entries) {
    w.begin_array();
    for (const auto& e : row) w.value(e);
    w.end_array();
  }
  w.end_array();
  w.key("charpoly").begin_array();
  for (const auto& c : cp.coeffs) w.value(c);
  w.end_array();
  w.end_object();
  emit(w.str(), out);
}

void run_maeda(const std::string& range, long p, int budget, bool galois,
               const std::string& out) {
  auto [lo, hi] = parse_range(range);
  std::string body;
  {
    JsonWriter w;
    w.begin_object();
    head(w, "maeda");
    w.key("config").begin_object();
    w.key("k_range").value(range);
    w.key("p").value(p);
    w.key("budget").value(budget);
    w.key("galois").value(galois);
    w.end_object();
    w.end_object();
    body = w.str();
  }
  for (int k = lo; k <= hi; ++k) {
    if (k % 2) continue;
    if (k < 4) continue;
    CharPoly cp = charpoly(hecke_matrix(k, p));
    PairCountReport r = analyze_charpoly(cp, budget);
    JsonWriter w;
    w.begin_object();
    w.key("k").value(k);
    w.key("dim").value(r.dim);
    w.key("squarefree").value(r.squarefree);
    w.key("irreducible").value(verdict_str(r.irreducible));
    w.key("pair_count").value(r.pair_count);
    if (galois) {
      w.key("sn_certified").value(r.sn_galois.certified);
      w.key("witnesses").begin_array();
      for (long q : r.sn_galois.witnesses) w.value(q);
      w.end_array();
    }
    w.end_object();
    body += '\n';
    body += w.str();
  }
  emit(body, out);
}

void run_angles(int k, long p, const std::string& tol, long prec,
                const std::string& out) {
  AngleSet a;
  if (tol.empty()) {
    a = angle_set(k, p, static_cast<mpfr_prec_t>(prec));
  } else {
    mpq_class t = parse_rational(tol);
    auto roots = isolate_roots(charpoly(hecke_matrix(k, p)), t);
    a = to_angles(k, p, roots, static_cast<mpfr_prec_t>(prec));
  }
  JsonWriter w;
  w.begin_object();
  head(w, "angles");
  w.key("config").begin_object();
  w.key("k").value(k);
  w.key("p").value(p);
  w.key("prec").value(prec);
  if (!tol.empty()) w.key("tol").value(tol);
  w.end_object();
  w.key("k").value(k);
  w.key("p").value(p);
  w.key("dim").value(a.dim);
  w.key("clamped").value(a.clamped);
  w.key("eigenvalues").begin_array();
  for (const auto& r : a.eigenvalues) w.value(std::string_view(r.mid.str(25)));
  w.end_array();
  w.key("thetas").begin_array();
  for (double t : a.theta_d) w.value(t);
  w.end_array();
  w.key("normalized").begin_array();
  for (double u : a.u) w.value(u);
  w.end_array();
  w.end_object();
  emit(w.str(), out);
}

void run_trace(int k, long n, const std::string& out) {
  mpz_class t = trace_tn(k, n);
  JsonWriter w;
  w.begin_object();
  head(w, "trace");
  w.key("config").begin_object();
  w.key("k").value(k);
  w.key("n").value(n);
  w.end_object();
  w.key("k").value(k);
  w.key("n").value(n);
  w.key("trace").value(t);
  w.end_object();
  emit(w.str(), out);
}

void run_moments(int k, long p, int mmax, long prec, const std::string& out) {
  AngleSet a = angle_set(k, p);
  int dim = a.dim;
  JsonWriter w;
  w.begin_object();
  head(w, "moments");
  w.key("config").begin_object();
  w.key("k").value(k);
  w.key("p").value(p);
  w.key("mmax").value(mmax);
  w.key("prec").value(prec);
  w.end_object();
  w.key("k").value(k);
  w.key("p").value(p);
  w.key("dim").value(dim);
  w.key("rows").begin_array();
  for (int m = 1; m <= mmax; ++m) {
    Real ms = moment_sum(k, p, m, static_cast<mpfr_prec_t>(prec));
    Real emp = empirical_moment(a, m);
    mpq_class cmd = c_coeff(p, m) * dim;
    Real dev = abs(ms - Real::from(cmd, static_cast<mpfr_prec_t>(prec)));
    w.begin_object();
    w.key("m").value(m);
    w.key("empirical").value(emp.to_double());
    w.key("trace_formula").value(ms.to_double());
    w.key("cm_dim").value(Real::from(cmd).to_double());
    w.key("deviation").value(dev.to_double());
    w.key("lemma1").value(lemma1_bound(k, 1, p, m));
    w.key("alt").value(alt_bound(k, 1, p, m));
    w.end_object();
  }
  w.end_array();
  w.end_object();
  emit(w.str(), out);
}

void run_selberg(const std::string& as, const std::string& bs, int M, bool check,
                 int grid, const std::string& out) {
  mpq_class a = parse_rational(as), b = parse_rational(bs);
  SelbergCoeffs s = build_majorant(a, b, M);
  JsonWriter w;
  w.begin_object();
  head(w, "selberg");
  w.key("config").begin_object();
  w.key("a").value(a);
  w.key("b").value(b);
  w.key("M").value(M);
  if (check) w.key("grid").value(grid);
  w.end_object();
  w.key("M").value(M);
  w.key("a").value(a);
  w.key("b").value(b);
  w.key("c0").value(s.c0);
  w.key("coeffs").begin_array();
  for (long n = -M; n <= M; ++n) {
    auto c = s.coeff(n);
    w.begin_object();
    w.key("n").value(n);
    w.key("re").value(c.real());
    w.key("im").value(c.imag());
    w.end_object();
  }
  w.end_array();
  if (check) {
    SelbergCheck r = check_majorant(s, grid);
    w.key("check").begin_object();
    w.key("majorization").value(r.majorization);
    w.key("constant_exact").value(r.constant_exact);
    w.key("coeff_bound").value(r.coeff_bound);
    w.key("min_slack_a").value(r.min_slack_a);
    w.key("min_slack_c").value(r.min_slack_c);
    w.key("ok").value(r.ok());
    w.end_object();
  }
  w.end_object();
  emit(w.str(), out);
}

void run_bound(int k, long N, long p, double dim_flag, int M,
               const std::string& delta_s, const std::string& out) {
  mpq_class delta(0);
  if (!delta_s.empty()) delta = parse_rational(delta_s);
  BoundReport r = bound_report(k, N, p, M, delta);
  if (dim_flag > 0) {
    r.dim = dim_flag;
    r.dim_exact = false;
    r.theorem1 = theorem1_value(dim_flag, k, N, p);
  }
  JsonWriter w;
  w.begin_object();
  head(w, "bound");
  w.key("config").begin_object();
  w.key("k").value(k);
  w.key("N").value(N);
  w.key("p").value(p);
  if (dim_flag > 0) w.key("dim").value(dim_flag);
  if (M > 0) w.key("M").value(M);
  if (!delta_s.empty()) w.key("delta").value(delta);
  w.end_object();
  w.key("k").value(r.k);
  w.key("N").value(r.N);
  w.key("p").value(r.p);
  w.key("dim").value(r.dim);
  w.key("dim_exact").value(r.dim_exact);
  w.key("m_star").value(r.m.m_star);
  w.key("m_asymptotic").value(r.m.m_asymptotic);
  w.key("w_over_logp").value(r.m.w_over_logp);
  w.key("delta").value(r.delta);
  w.key("terms").begin_array();
  for (const auto& t : r.terms) {
    w.begin_object();
    w.key("m").value(t.m);
    w.key("bound").value(t.bound);
    w.key("alt").value(t.alt);
    w.key("deviation");
    if (t.has_deviation)
      w.value(t.deviation);
    else
      w.null_value();
    w.end_object();
  }
  w.end_array();
  w.key("key");
  if (r.has_key) {
    w.begin_object();
    w.key("rhs").value(r.key.rhs);
    w.key("n0_term").value(r.key.n0_term);
    w.key("nnz_term").value(r.key.nnz_term);
    w.end_object();
  } else {
    w.null_value();
  }
  w.key("pair_count");
  if (r.has_key)
    w.value(r.pair_count);
  else
    w.null_value();
  w.key("theorem1").value(r.theorem1);
  w.end_object();
  emit(w.str(), out);
}

void run_mc(long p, const std::string& dims_s, int trials, int m,
            unsigned long long seed, const std::string& csv,
            const std::string& out) {
  std::vector<long> dims = parse_longs(dims_s);
  ScalingResult r = deviation_scaling(p, dims, trials, m, seed);
  if (!csv.empty()) {
    std::ofstream f(csv, std::ios::binary);
    if (!f) throw heckepairs::invalid_argument("cannot open csv file " + csv);
    f << "dim,trial,deviation\n";
    char buf[40];
    for (size_t di = 0; di < dims.size(); ++di)
      for (size_t t = 0; t < r.deviations[di].size(); ++t) {
        std::snprintf(buf, sizeof buf, "%.15g", r.deviations[di][t]);
        f << dims[di] << ',' << t << ',' << buf << '\n';
      }
  }
  JsonWriter w;
  w.begin_object();
  head(w, "mc");
  w.key("config").begin_object();
  w.key("p").value(p);
  w.key("dims").value(dims_s);
  w.key("trials").value(trials);
  w.key("m").value(m);
  w.key("seed").value(static_cast<long>(seed));
  w.end_object();
  w.key("slope").value(r.slope);
  w.key("stderr").value(r.stderr_slope);
  w.key("per_dim").begin_array();
  for (const auto& d : r.per_dim) {
    w.begin_object();
    w.key("dim").value(d.dim);
    w.key("rms").value(d.rms);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  emit(w.str(), out);
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  CLI::App app{"Hecke eigenvalue angles, Selberg majorants, pair-count bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output;
  app.add_option("-o,--output", output, "write the report to a file instead of stdout");

  int b_k = 12, b_prec = 0;
  auto* basis = app.add_subcommand("basis", "Miller echelon basis of S_k(1)");
  basis->add_option("--k", b_k, "even weight >= 4")->required();
  basis->add_option("--prec", b_prec, "q-expansion length (default dim + 10)");

  int h_k = 12;
  long h_n = 2;
  auto* hecke = app.add_subcommand("hecke", "matrix of T_n and its char poly");
  hecke->add_option("--k", h_k, "even weight")->required();
  hecke->add_option("--n", h_n, "operator index >= 1")->required();

  std::string m_range = "12:60";
  long m_p = 2;
  int m_budget = 25;
  bool m_galois = false;
  auto* maeda = app.add_subcommand("maeda", "squarefree/irreducibility scan over a weight range");
  maeda->add_option("--k-range", m_range, "inclusive weight range lo:hi (odd weights skipped)");
  maeda->add_option("--p", m_p, "Hecke prime (default 2)");
  maeda->add_option("--budget", m_budget, "number of reduction primes to try");
  maeda->add_flag("--galois", m_galois, "include the full-symmetric-group certificate");

  int a_k = 12;
  long a_p = 2;
  std::string a_tol;
  long a_prec = 160;
  auto* angles = app.add_subcommand("angles", "certified eigenvalue angles of T_p");
  angles->add_option("--k", a_k, "even weight")->required();
  angles->add_option("--p", a_p, "prime")->required();
  angles->add_option("--tol", a_tol, "isolation width (rational; default 2^-64)");
  angles->add_option("--prec", a_prec, "working precision in bits");

  int t_k = 12;
  long t_n = 1;
  auto* trace = app.add_subcommand("trace", "trace of T_n on S_k(1) by the trace formula");
  trace->add_option("--k", t_k, "even weight")->required();
  trace->add_option("--n", t_n, "operator index >= 1")->required();

  int mo_k = 12, mo_mmax = 10;
  long mo_p = 2, mo_prec = 320;
  auto* moments = app.add_subcommand("moments", "empirical vs trace-formula moments with bounds");
  moments->add_option("--k", mo_k, "even weight")->required();
  moments->add_option("--p", mo_p, "prime")->required();
  moments->add_option("--mmax", mo_mmax, "largest moment order (default 10)");
  moments->add_option("--prec", mo_prec, "trace-formula precision in bits");

  std::string s_a = "-1/10", s_b = "1/10";
  int s_M = 9, s_grid = 10000;
  bool s_check = false;
  auto* selberg = app.add_subcommand("selberg", "Selberg majorant Fourier coefficients");
  selberg->add_option("--a", s_a, "left endpoint (rational in [-1/2, 1/2])")->required();
  selberg->add_option("--b", s_b, "right endpoint (rational, a < b)")->required();
  selberg->add_option("--M", s_M, "degree >= 1")->required();
  selberg->add_flag("--check", s_check, "run the majorization/coefficient checks");
  selberg->add_option("--grid", s_grid, "check grid size (default 10000)");

  int bd_k = 12, bd_M = 0;
  long bd_N = 1, bd_p = 2;
  double bd_dim = 0.0;
  std::string bd_delta;
  auto* bound = app.add_subcommand("bound", "pair-count estimate and trace bounds");
  bound->add_option("--k", bd_k, "even weight")->required();
  bound->add_option("--N", bd_N, "level (default 1)");
  bound->add_option("--p", bd_p, "prime")->required();
  bound->add_option("--dim", bd_dim, "override the reported dimension");
  bound->add_option("--M", bd_M, "majorant degree (default: calibrated choice)");
  bound->add_option("--delta", bd_delta, "window half-width (rational; default min(1/M, 1/2))");

  long mc_p = 2;
  std::string mc_dims = "100,1000,10000", mc_csv;
  int mc_trials = 200, mc_m = 1;
  unsigned long long mc_seed = 1;
  auto* mc = app.add_subcommand("mc", "Plancherel sampler deviation scaling");
  mc->add_option("--p", mc_p, "prime");
  mc->add_option("--dims", mc_dims, "comma-separated ensemble sizes");
  mc->add_option("--trials", mc_trials, "ensembles per size (default 200)");
  mc->add_option("--m", mc_m, "moment order (default 1)");
  mc->add_option("--seed", mc_seed, "base seed (default 1)");
  mc->add_option("--csv", mc_csv, "also write raw deviations as CSV");

  try {
    app.parse(argc, argv);
    if (*basis) run_basis(b_k, b_prec, output);
    if (*hecke) run_hecke(h_k, h_n, output);
    if (*maeda) run_maeda(m_range, m_p, m_budget, m_galois, output);
    if (*angles) run_angles(a_k, a_p, a_tol, a_prec, output);
    if (*trace) run_trace(t_k, t_n, output);
    if (*moments) run_moments(mo_k, mo_p, mo_mmax, mo_prec, output);
    if (*selberg) run_selberg(s_a, s_b, s_M, s_check, s_grid, output);
    if (*bound) run_bound(bd_k, bd_N, bd_p, bd_dim, bd_M, bd_delta, output);
    if (*mc) run_mc(mc_p, mc_dims, mc_trials, mc_m, mc_seed, mc_csv, output);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help("", CLI::AppFormatMode::Normal);
    return 1;
  } catch (const heckepairs::consistency_error& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 2;
  } catch (const heckepairs::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
