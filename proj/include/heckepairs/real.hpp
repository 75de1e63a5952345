#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace heckepairs {

// Thin RAII wrapper over mpfr_t. Binary operations inherit the precision of
// the left operand; rounding is always to nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 160) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  static Real from(const mpz_class& z, mpfr_prec_t prec = 160) {
    Real r(prec); mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN); return r;
  }
  static Real from(const mpq_class& q, mpfr_prec_t prec = 160) {
    Real r(prec); mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN); return r;
  }
  static Real from(double d, mpfr_prec_t prec = 160) {
    Real r(prec); mpfr_set_d(r.v_, d, MPFR_RNDN); return r;
  }
  static Real from(long n, mpfr_prec_t prec = 160) {
    Real r(prec); mpfr_set_si(r.v_, n, MPFR_RNDN); return r;
  }
  static Real pi(mpfr_prec_t prec = 160) {
    Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Decimal string with the given number of significant digits.
  std::string str(int digits = 25) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(a.prec()); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(a.prec()); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(a.prec()); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(a.prec()); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

  friend Real sqrt(const Real& a) { Real r(a.prec()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real acos(const Real& a) { Real r(a.prec()); mpfr_acos(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real cos(const Real& a)  { Real r(a.prec()); mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real abs(const Real& a)  { Real r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }

  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  int cmp(double d) const { return mpfr_cmp_d(v_, d); }
  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

}  // namespace heckepairs
