#include "heckepairs/traceformula.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "heckepairs/errors.hpp"
#include "heckepairs/polynomial.hpp"
#include "heckepairs/qexpansion.hpp"

namespace heckepairs {

namespace {

long isqrt_long(long n) {
  if (n < 0) throw invalid_argument("isqrt of a negative number");
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

HurwitzTable::HurwitzTable(long dmax) : dmax_(std::max(dmax, 0L)) { build(); }

void HurwitzTable::build() {
  const long x = dmax_;
  h0_.assign(static_cast<size_t>(x / 4 + 1), 0);
  h3_.assign(static_cast<size_t>(x >= 3 ? (x - 3) / 4 + 1 : 0), 0);
  const long n0 = static_cast<long>(h0_.size());
  const long n3 = static_cast<long>(h3_.size());
  const long amax = isqrt_long(x / 3);
  const long nmax = std::max(n0, n3);

  // Enumerates reduced forms (a, b, c), 0 <= b <= a <= c, 4ac - b^2 <= x,
  // adding the weight-12 class multiplicity at index (4ac - b^2) div 4.
  // Work is blocked by index range so the scatter adds stay cache resident;
  // the index stride for fixed (a, b) is a.
  const long blk = 1L << 16;
  for (long lo = 0; lo < nmax; lo += blk) {
    const long hi = std::min(nmax, lo + blk);
    for (long a = 1; a <= amax; ++a) {
      for (long b = 0; b <= a; ++b) {
        const bool even = (b % 2 == 0);
        const long off = even ? (b / 2) * (b / 2) : (b * b + 3) / 4;
        std::int32_t* arr = even ? h0_.data() : h3_.data();
        const long cutoff = std::min(hi, even ? n0 : n3);
        long c = std::max(a, (lo + off + a - 1) / a);
        long i = a * c - off;
        if (i >= cutoff) continue;
        if (c == a) {
          arr[i] += (b == 0) ? 6 : (b == a ? 4 : 12);
          i += a;
        }
        const std::int32_t w = (b == 0 || b == a) ? 12 : 24;
        for (; i < cutoff; i += a) arr[i] += w;
      }
    }
  }
  h0_[0] = -1;
}

long HurwitzTable::twelfths(long d) const {
  if (d < 0 || d > dmax_)
    throw invalid_argument("HurwitzTable: discriminant out of range");
  switch (d % 4) {
    case 0:
      return h0_[static_cast<size_t>(d / 4)];
    case 3:
      return h3_[static_cast<size_t>(d / 4)];
    default:
      return 0;
  }
}

std::shared_ptr<const HurwitzTable> hurwitz_table(long dmax) {
  static std::mutex mu;
  static std::shared_ptr<const HurwitzTable> table;
  std::lock_guard<std::mutex> lock(mu);
  if (!table || table->dmax() < dmax)
    table = std::make_shared<const HurwitzTable>(dmax);
  return table;
}

mpq_class hurwitz_class_number(long d) { return hurwitz_table(d)->value(d); }

long hurwitz_twelfths_slow(long d) {
  if (d < 0) throw invalid_argument("hurwitz: discriminant must be nonnegative");
  if (d == 0) return -1;
  if (d % 4 == 1 || d % 4 == 2) return 0;
  long total = 0;
  for (long a = 1; 3 * a * a <= d; ++a) {
    for (long b = 0; b <= a; ++b) {
      const long num = d + b * b;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a) continue;
      if (c == a)
        total += (b == 0) ? 6 : (b == a ? 4 : 12);
      else
        total += (b == 0 || b == a) ? 12 : 24;
    }
  }
  return total;
}

mpz_class gegenbauer_u(int j, long t, const mpz_class& n) {
  if (j < 0) throw invalid_argument("gegenbauer_u: index must be nonnegative");
  mpz_class prev = 1, cur = t;
  if (j == 0) return prev;
  for (int i = 2; i <= j; ++i) {
    mpz_class next = t * cur - n * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

mpz_class trace_tn(int k, long n) {
  if (k < 4 || k % 2 != 0)
    throw invalid_argument("trace_tn: weight must be even and at least 4");
  if (n < 1) throw invalid_argument("trace_tn: index must be positive");

  auto table = hurwitz_table(4 * n);
  const long tmax = isqrt_long(4 * n);
  mpz_class elliptic12 = 0;  // 12 * sum_t U_{k-2}(t,n) H(4n - t^2)
  for (long t = 0; t <= tmax; ++t) {
    const long h12 = table->twelfths(4 * n - t * t);
    if (h12 == 0) continue;
    mpz_class term = gegenbauer_u(k - 2, t, n) * h12;
    elliptic12 += (t == 0) ? term : 2 * term;
  }

  mpz_class hyperbolic = 0;  // sum over ordered factorizations d d' = n
  for (long d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(k - 1));
    hyperbolic += (d == n / d) ? p : 2 * p;
  }

  mpq_class ell(-elliptic12, 24), hyp(-hyperbolic, 2);
  ell.canonicalize();
  hyp.canonicalize();
  mpq_class tr = ell + hyp;
  if (tr.get_den() != 1)
    throw consistency_error("trace_tn: trace did not come out integral");
  return tr.get_num();
}

Real moment_sum(int k, long p, int m, mpfr_prec_t prec) {
  if (m < 0) throw invalid_argument("moment_sum: order must be nonnegative");
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw invalid_argument("moment_sum: p must be prime");
  if (k < 4 || k % 2 != 0)
    throw invalid_argument("moment_sum: weight must be even and at least 4");
  if (m == 0) return Real::from(static_cast<long>(dim_sk1(k)), prec);

  mpz_class pm;
  mpz_ui_pow_ui(pm.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(m));
  mpz_class num = trace_tn(k, pm.get_si());
  if (m >= 2) {
    mpz_class pk1, lower;
    mpz_ui_pow_ui(pk1.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(k - 1));
    mpz_ui_pow_ui(lower.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(m - 2));
    num -= pk1 * trace_tn(k, lower.get_si());
  }

  // Denominator p^{m(k-1)/2}; m(k-1) is odd exactly when m is odd.
  const long e = static_cast<long>(m) * (k - 1);
  mpz_class ipart;
  mpz_ui_pow_ui(ipart.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e / 2));
  Real den = Real::from(ipart, prec);
  if (e % 2 != 0) den = den * sqrt(Real::from(p, prec));
  return Real::from(num, prec) / den;
}

}  // namespace heckepairs
