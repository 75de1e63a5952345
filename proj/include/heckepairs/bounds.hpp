#pragma once

#include <gmpxx.h>

#include <vector>

#include "heckepairs/angles.hpp"

namespace heckepairs {

struct LevelStats {
  long N = 1;
  int nu = 0;        // distinct prime divisors
  mpz_class psi;     // N * prod_{p | N} (1 + 1/p), an integer
  mpz_class fN;      // sum_{c | N} phi(gcd(c, N/c))
  long dN = 1;       // number of divisors
};

LevelStats level_stats(long N);

// c_0 = 1, c_m = 0 for odd m, c_m = p^{-m/2} - p^{-(m-2)/2} for even m >= 2.
mpq_class c_coeff(long p, int m);

// 4 p^m 2^{nu(N)} sup{psi(f) : f >= 1, f^2 < 4p^m} + 2 f(N) + delta_m(k),
// where delta_m(k) = 2 p^{m/2} when k = 2 and 0 otherwise.
double lemma1_bound(int k, long N, long p, int m);

// The replacement bound p^{3m/2} 2^{nu(N)} m log p + sqrt(N) d(N).
double alt_bound(int k, long N, long p, int m);

// Principal branch of W(x) e^{W(x)} = x for x >= -1/e.
double lambert_w(double x);

struct ChooseM {
  int m_star = 1;            // calibrated choice, clamped to [1, 200]
  int m_asymptotic = 1;      // nearest integer to ((2/3)log kN + (1/3)log p)/log p
  double w_over_logp = 0.0;  // W((kN)^{2/3} (log p)^{1/3}) / log p
};

// m_star minimizes the cost proxy dim^2/M + p^{3M} M^2 (log p)^2 4^{nu(N)}:
// the stationarity condition reduces to e^{3u} u^4 = dim^2 log(p) / (3 4^nu)
// with u = M log p, i.e. u = (4/3) W((3/4) (dim^2 log(p) / (3 4^nu))^{1/4}).
// dim is exact for N = 1 and the (k-1) psi(N)/12 heuristic otherwise.
ChooseM choose_m(int k, long N, long p);
int choose_M(int k, long N, long p);

struct KeyEstimate {
  double rhs = 0.0;       // sum_{|n| <= M} |S_hat(n)| |T_|n||^2
  double n0_term = 0.0;   // (2 delta + 1/(M+1)) dim^2
  double nnz_term = 0.0;  // contribution of n != 0
};

// T_n = sum_f e(n u_f) over the angle set; the majorant is built for
// [-delta, delta].  Requires 0 < delta <= 1/2.
KeyEstimate estimate_key(int k, long p, int M, const mpq_class& delta, const AngleSet& a);

// dim^2 log(p) / log(kN), the shape of the final bound (no implied constant).
double theorem1_value(double dim, int k, long N, long p);

// Reporting stand-in for dim S_k(N) at N > 1: (k - 1) psi(N) / 12.
double dim_heuristic(int k, long N);

struct Lemma1Term {
  int m = 0;
  double bound = 0.0;
  double alt = 0.0;
  // |moment_sum(k, p, m) - c_m * dim|; only present at level 1 where the
  // trace formula applies.
  bool has_deviation = false;
  double deviation = 0.0;
};

struct BoundReport {
  int k = 0;
  long N = 1;
  long p = 2;
  double dim = 0.0;
  bool dim_exact = false;  // true at level 1 (Miller basis dimension)
  ChooseM m;
  mpq_class delta;
  std::vector<Lemma1Term> terms;  // m = 1..6
  bool has_key = false;           // level 1 only
  KeyEstimate key;
  mpz_class pair_count;           // valid iff has_key
  double theorem1 = 0.0;
};

// M = 0 or delta = 0 mean "choose automatically" (choose_M and
// min(1/M, 1/2) respectively).
BoundReport bound_report(int k, long N, long p, int M = 0,
                         const mpq_class& delta = mpq_class(0));

}  // namespace heckepairs
