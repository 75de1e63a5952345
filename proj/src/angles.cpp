#include "heckepairs/angles.hpp"

#include <algorithm>

#include "heckepairs/errors.hpp"
#include "heckepairs/polynomial.hpp"

namespace heckepairs {

std::vector<std::pair<mpq_class, mpq_class>> isolate_roots(const CharPoly& cp,
                                                           const mpq_class& tol) {
  return isolate_real_roots(cp.coeffs, tol);
}

AngleSet to_angles(int k, long p,
                   const std::vector<std::pair<mpq_class, mpq_class>>& roots,
                   mpfr_prec_t prec) {
  if (k < 4 || k % 2 != 0)
    throw invalid_argument("to_angles: weight must be even and at least 4");
  if (p < 2) throw invalid_argument("to_angles: p must be at least 2");

  mpz_class bound2;  // (2 p^{(k-1)/2})^2 = 4 p^{k-1}, exact
  mpz_ui_pow_ui(bound2.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k - 1));
  bound2 *= 4;
  // Clamp window [1, 1 + 1e-12] on the ratio, squared, as an exact rational.
  const mpq_class one_eps(mpz_class("1000000000001"), mpz_class("1000000000000"));
  const mpq_class window2 = one_eps * one_eps;

  mpz_class half;  // p^{(k-2)/2}, so 2 p^{(k-1)/2} = 2 * half * sqrt(p)
  mpz_ui_pow_ui(half.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>((k - 2) / 2));
  const Real denom = Real::from(mpz_class(2 * half), prec) * sqrt(Real::from(p, prec));
  const Real two_pi = Real::from(2L, prec) * Real::pi(prec);

  AngleSet a;
  a.k = k;
  a.p = p;
  a.dim = static_cast<int>(roots.size());
  for (const auto& [lo, hi] : roots) {
    if (hi < lo) throw invalid_argument("to_angles: malformed enclosure");
    mpq_class mid = (lo + hi) / 2;
    mpq_class ratio2 = mid * mid;
    ratio2 /= bound2;
    Real theta(prec);
    if (ratio2 > 1) {
      if (ratio2 > window2)
        throw consistency_error(
            "to_angles: eigenvalue ratio beyond 1 + 1e-12 contradicts the Deligne "
            "bound; the upstream computation is wrong");
      a.clamped = true;
      theta = (mid > 0) ? Real::from(0L, prec) : Real::pi(prec);
    } else {
      Real r = Real::from(mid, prec) / denom;
      if (r.cmp(1.0) > 0) r = Real::from(1L, prec);
      if (r.cmp(-1.0) < 0) r = -Real::from(1L, prec);
      theta = acos(r);
    }
    CertifiedRoot root{lo, hi, Real::from(mid, prec), 0.0};
    root.approx = root.mid.to_double();
    a.eigenvalues.push_back(std::move(root));
    a.theta_d.push_back(theta.to_double());
    a.u.push_back((theta / two_pi).to_double());
    a.theta.push_back(std::move(theta));
  }
  return a;
}

AngleSet angle_set(int k, long p, mpfr_prec_t prec) {
  CharPoly cp = charpoly(hecke_matrix(k, p));
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 64);
  auto roots = isolate_roots(cp, mpq_class(mpz_class(1), den));
  return to_angles(k, p, roots, prec);
}

Real empirical_moment(const AngleSet& a, int m) {
  if (m < 0) throw invalid_argument("empirical_moment: order must be nonnegative");
  const mpfr_prec_t prec = a.theta.empty() ? 160 : a.theta.front().prec();
  if (m == 0) return Real::from(2L * a.dim, prec);
  Real s = Real::from(0L, prec);
  const Real two = Real::from(2L, prec);
  const Real order = Real::from(static_cast<long>(m), prec);
  for (const Real& th : a.theta) s = s + two * cos(order * th);
  return s;
}

}  // namespace heckepairs
