#include "heckepairs/bounds.hpp"

#include <cmath>
#include <complex>
#include <numeric>

#include "heckepairs/errors.hpp"
#include "heckepairs/polynomial.hpp"
#include "heckepairs/qexpansion.hpp"
#include "heckepairs/selberg.hpp"
#include "heckepairs/traceformula.hpp"

namespace heckepairs {

namespace {

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    int e = 0;
    while (n % q == 0) { n /= q; ++e; }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long euler_phi(long n) {
  long out = n;
  for (const auto& [q, e] : factorize(n)) out = out / q * (q - 1);
  return out;
}

void require_prime(long p, const char* who) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw invalid_argument(std::string(who) + ": p must be prime");
}

}  // namespace

LevelStats level_stats(long N) {
  if (N < 1) throw invalid_argument("level_stats: N must be positive");
  LevelStats s;
  s.N = N;
  s.psi = N;
  for (const auto& [q, e] : factorize(N)) {
    ++s.nu;
    s.psi = s.psi / q * (q + 1);
  }
  s.fN = 0;
  s.dN = 0;
  for (long c = 1; c <= N; ++c) {
    if (N % c != 0) continue;
    ++s.dN;
    s.fN += euler_phi(std::gcd(c, N / c));
  }
  return s;
}

mpq_class c_coeff(long p, int m) {
  require_prime(p, "c_coeff");
  if (m < 0) throw invalid_argument("c_coeff: m must be nonnegative");
  if (m == 0) return 1;
  if (m % 2 != 0) return 0;
  mpz_class pm2;
  mpz_ui_pow_ui(pm2.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(m / 2));
  return mpq_class(mpz_class(1 - p), pm2);  // p^{-m/2} - p^{-(m-2)/2}
}

double lemma1_bound(int k, long N, long p, int m) {
  require_prime(p, "lemma1_bound");
  if (m < 1) throw invalid_argument("lemma1_bound: m must be at least 1");
  const LevelStats ls = level_stats(N);
  mpz_class pm;
  mpz_ui_pow_ui(pm.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(m));
  mpz_class fmax;  // largest f with f^2 < 4 p^m
  mpz_sqrt(fmax.get_mpz_t(), mpz_class(4 * pm - 1).get_mpz_t());
  if (!fmax.fits_slong_p())
    throw invalid_argument("lemma1_bound: p^m too large for the direct sup scan");
  mpz_class sup = 1;
  for (long f = 1; f <= fmax.get_si(); ++f) {
    mpz_class pf = level_stats(f).psi;
    if (pf > sup) sup = pf;
  }
  mpz_class main = 4 * pm * sup;
  mpz_mul_2exp(main.get_mpz_t(), main.get_mpz_t(), static_cast<unsigned>(ls.nu));
  double out = main.get_d() + 2.0 * ls.fN.get_d();
  if (k == 2) out += 2.0 * std::pow(static_cast<double>(p), m / 2.0);
  return out;
}

double alt_bound(int k, long N, long p, int m) {
  (void)k;
  require_prime(p, "alt_bound");
  if (m < 1) throw invalid_argument("alt_bound: m must be at least 1");
  const LevelStats ls = level_stats(N);
  const double lp = std::log(static_cast<double>(p));
  return std::pow(static_cast<double>(p), 1.5 * m) * std::ldexp(1.0, ls.nu) * m * lp +
         std::sqrt(static_cast<double>(N)) * static_cast<double>(ls.dN);
}

double lambert_w(double x) {
  const double floor_x = -std::exp(-1.0);
  if (x < floor_x) throw invalid_argument("lambert_w: x below -1/e");
  if (x == 0.0) return 0.0;
  double w;
  if (x > 2.0) {
    const double l = std::log(x);
    w = l - std::log(l);
  } else if (x > -0.25) {
    w = std::log1p(x);
  } else {
    w = -1.0 + std::sqrt(2.0 * (1.0 + std::exp(1.0) * x));  // series at the branch point
  }
  for (int i = 0; i < 100; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double d1 = ew * (w + 1.0);
    const double step = f / (d1 - f * (w + 2.0) / (2.0 * (w + 1.0)));
    w -= step;
    if (std::fabs(step) <= 1e-16 * std::max(1.0, std::fabs(w))) break;
  }
  return w;
}

double dim_heuristic(int k, long N) {
  return (k - 1) * level_stats(N).psi.get_d() / 12.0;
}

ChooseM choose_m(int k, long N, long p) {
  require_prime(p, "choose_m");
  if (k < 2) throw invalid_argument("choose_m: k must be at least 2");
  if (N < 1) throw invalid_argument("choose_m: N must be positive");
  const double lp = std::log(static_cast<double>(p));
  const double lkn = std::log(static_cast<double>(k) * N);

  ChooseM out;
  out.m_asymptotic = static_cast<int>(
      std::max(1L, std::lround((2.0 / 3.0 * lkn + lp / 3.0) / lp)));
  out.w_over_logp =
      lambert_w(std::cbrt(static_cast<double>(k) * N * k * N * lp)) / lp;

  const int nu = level_stats(N).nu;
  const double dim = (N == 1)
                         ? (k % 2 == 0 ? static_cast<double>(dim_sk1(k)) : 0.0)
                         : dim_heuristic(k, N);
  if (dim <= 0) {
    out.m_star = 1;
    return out;
  }
  const double y = dim * dim * lp / (3.0 * std::ldexp(1.0, 2 * nu));
  const double u = (4.0 / 3.0) * lambert_w(0.75 * std::pow(y, 0.25));
  out.m_star = static_cast<int>(std::min(200L, std::max(1L, std::lround(u / lp))));
  return out;
}

int choose_M(int k, long N, long p) { return choose_m(k, N, p).m_star; }

KeyEstimate estimate_key(int k, long p, int M, const mpq_class& delta, const AngleSet& a) {
  if (M < 1) throw invalid_argument("estimate_key: M must be positive");
  if (!(delta > 0) || delta > mpq_class(1, 2))
    throw invalid_argument("estimate_key: delta must lie in (0, 1/2]");
  (void)k;
  (void)p;
  const SelbergCoeffs s = build_majorant(-delta, delta, M);

  KeyEstimate out;
  out.n0_term = s.c0.get_d() * a.dim * a.dim;
  for (int n = 1; n <= M; ++n) {
    std::complex<double> tn = 0.0;
    for (double u : a.u) {
      const double ph = 2.0 * 3.14159265358979323846 * n * u;
      tn += std::complex<double>(std::cos(ph), std::sin(ph));
    }
    out.nnz_term += 2.0 * std::abs(s.pos[static_cast<size_t>(n)]) * std::norm(tn);
  }
  out.rhs = out.n0_term + out.nnz_term;
  return out;
}

double theorem1_value(double dim, int k, long N, long p) {
  require_prime(p, "theorem1_value");
  if (static_cast<double>(k) * N < 3)
    throw invalid_argument("theorem1_value: need kN >= 3");
  if (dim < 0) throw invalid_argument("theorem1_value: dim must be nonnegative");
  return dim * dim * std::log(static_cast<double>(p)) /
         std::log(static_cast<double>(k) * N);
}

BoundReport bound_report(int k, long N, long p, int M, const mpq_class& delta) {
  require_prime(p, "bound_report");
  if (k < 4 || k % 2 != 0)
    throw invalid_argument("bound_report: weight must be even and at least 4");
  if (N < 1) throw invalid_argument("bound_report: N must be positive");

  BoundReport r;
  r.k = k;
  r.N = N;
  r.p = p;
  r.m = choose_m(k, N, p);
  if (M != 0) {
    if (M < 1) throw invalid_argument("bound_report: M must be positive");
    r.m.m_star = M;
  }
  if (delta != 0) {
    if (!(delta > 0) || delta > mpq_class(1, 2))
      throw invalid_argument("bound_report: delta must lie in (0, 1/2]");
    r.delta = delta;
  } else {
    r.delta = mpq_class(1, std::max(2, r.m.m_star));  // min(1/M, 1/2)
  }

  r.dim_exact = (N == 1);
  r.dim = r.dim_exact ? static_cast<double>(dim_sk1(k)) : dim_heuristic(k, N);
  r.theorem1 = theorem1_value(r.dim, k, N, p);

  for (int m = 1; m <= 6; ++m) {
    Lemma1Term t;
    t.m = m;
    t.bound = lemma1_bound(k, N, p, m);
    t.alt = alt_bound(k, N, p, m);
    if (N == 1) {
      t.has_deviation = true;
      const double ms = moment_sum(k, p, m).to_double();
      t.deviation = std::fabs(ms - c_coeff(p, m).get_d() * r.dim);
    }
    r.terms.push_back(t);
  }

  if (N == 1) {
    CharPoly cp = charpoly(hecke_matrix(k, p));
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, 64);
    AngleSet a = to_angles(k, p, isolate_roots(cp, mpq_class(mpz_class(1), den)));
    r.has_key = true;
    r.key = estimate_key(k, p, r.m.m_star, r.delta, a);
    r.pair_count = squarefree_pair_count(cp).pair_count;
  }
  return r;
}

}  // namespace heckepairs
