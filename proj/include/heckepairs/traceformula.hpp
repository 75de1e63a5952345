#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "heckepairs/real.hpp"

namespace heckepairs {

// Table of Hurwitz class numbers H(D) for 0 <= D <= dmax, stored as the
// integers 12*H(D).  H(0) = -1/12, H(D) = 0 for D = 1, 2 (mod 4), and for
// D = 3 (mod 4) or 0 (mod 4) it is the weighted count of reduced positive
// binary quadratic forms of discriminant -D (weights 1/2 and 1/3 for the
// classes of x^2+y^2 and x^2+xy+y^2 and their multiples).
class HurwitzTable {
 public:
  explicit HurwitzTable(long dmax);

  long dmax() const { return dmax_; }
  // 12*H(d) as a plain integer; d must lie in [0, dmax].
  long twelfths(long d) const;
  mpq_class value(long d) const {
    mpq_class v(twelfths(d), 12);
    v.canonicalize();
    return v;
  }

 private:
  void build();

  long dmax_;
  std::vector<std::int32_t> h0_;  // D = 4*i
  std::vector<std::int32_t> h3_;  // D = 4*i + 3
};

// Process-wide shared table covering at least [0, dmax]; grows on demand.
// Callers keep the returned handle alive while reading from it.
std::shared_ptr<const HurwitzTable> hurwitz_table(long dmax);

mpq_class hurwitz_class_number(long d);

// Direct per-discriminant form count, O(d) per value.  Reference
// implementation used to validate the table construction.
long hurwitz_twelfths_slow(long d);

// Gegenbauer-type polynomial: U_0 = 1, U_1 = t, U_j = t*U_{j-1} - n*U_{j-2}.
mpz_class gegenbauer_u(int j, long t, const mpz_class& n);

// Trace of the Hecke operator T_n on S_k(1) by the Eichler-Selberg formula,
//   Tr T_n = -1/2 * sum_{t^2 <= 4n} U_{k-2}(t, n) H(4n - t^2)
//            -1/2 * sum_{d d' = n} min(d, d')^{k-1}
// with the divisor sum over ordered pairs.  Requires even k >= 4.
mpz_class trace_tn(int k, long n);

// (Tr T_{p^m} - p^{k-1} Tr T_{p^{m-2}}) / p^{m(k-1)/2}; the m = 0 case is
// dim S_k(1) and m = 1 omits the lower trace.  p must be prime.
Real moment_sum(int k, long p, int m, mpfr_prec_t prec = 320);

}  // namespace heckepairs
