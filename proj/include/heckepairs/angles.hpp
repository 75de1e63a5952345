#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "heckepairs/hecke.hpp"
#include "heckepairs/real.hpp"

namespace heckepairs {

struct CertifiedRoot {
  mpq_class lo, hi;  // exact rational enclosure; lo == hi marks an exact root
  Real mid;          // (lo + hi)/2 at working precision
  double approx = 0.0;
};

// Eigenvalue angles theta with a_p = 2 p^{(k-1)/2} cos(theta), theta in
// [0, pi], and the normalized variable u = theta/(2 pi) in [0, 1/2] used by
// everything that speaks in e(n u).  Eigenvalues ascend, so thetas descend.
struct AngleSet {
  int k = 0;
  long p = 0;
  int dim = 0;
  std::vector<CertifiedRoot> eigenvalues;
  std::vector<Real> theta;
  std::vector<double> theta_d;
  std::vector<double> u;
  bool clamped = false;  // some ratio fell in [1, 1 + 1e-12] and was clamped
};

// Wrapper around certified Sturm isolation with the charpoly's metadata
// attached; the polynomial must be squarefree.
std::vector<std::pair<mpq_class, mpq_class>> isolate_roots(const CharPoly& cp,
                                                           const mpq_class& tol);

// Requires every enclosure to satisfy |a_p| <= 2 p^{(k-1)/2} (checked
// exactly); a midpoint ratio beyond 1 + 1e-12 is a hard error, within
// [1, 1 + 1e-12] it is clamped to the boundary angle and flagged.
AngleSet to_angles(int k, long p, const std::vector<std::pair<mpq_class, mpq_class>>& roots,
                   mpfr_prec_t prec = 160);

// charpoly(k, p) -> isolate -> angles, with the default tolerance 2^-64.
AngleSet angle_set(int k, long p, mpfr_prec_t prec = 160);

// Sum over the set of 2 cos(m * theta); the literal m = 0 value is 2 * dim.
// Callers comparing against c_0 * dim must treat m = 0 as dim instead.
Real empirical_moment(const AngleSet& a, int m);

}  // namespace heckepairs
