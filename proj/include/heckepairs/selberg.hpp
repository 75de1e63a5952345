#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

namespace heckepairs {

// Fourier coefficients of the degree-M Selberg majorant of the indicator of
// [a, b] on the circle R/Z.  Coefficients at negative n are conjugates of the
// positive side (the majorant is real-valued); the constant coefficient is
// kept as an exact rational alongside its double image.
struct SelbergCoeffs {
  int M = 0;
  mpq_class a, b;
  mpq_class c0;  // b - a + 1/(M+1), exact
  std::vector<std::complex<double>> pos;  // index n = 0..M

  std::complex<double> coeff(long n) const;
};

// Fourier transform of the Vaaler kernel: J(t) = pi t (1-|t|) cot(pi t) + |t|
// for 0 < |t| < 1, J(0) = 1, J(+-1) = 0.  Takes values in [0, 1].
double vaaler_jhat(double t);

// Fourier coefficient of the indicator of [a, b]: n = 0 -> b - a, otherwise
// (e(-na) - e(-nb)) / (2 pi i n).
std::complex<double> chi_hat(const mpq_class& a, const mpq_class& b, long n);

// S_M(x) = (b-a) + V_M(x-b) - V_M(x-a)
//          + (Delta_{M+1}(x-a) + Delta_{M+1}(x-b)) / (2(M+1))
// with the Vaaler polynomial V_M and the Fejer kernel Delta_{M+1}; pointwise
// S_M >= indicator of [a, b] (endpoints included), degree <= M, and
// integral b - a + 1/(M+1).  Requires -1/2 <= a < b <= 1/2.
SelbergCoeffs build_majorant(const mpq_class& a, const mpq_class& b, int M);

// Literal Fourier sum over |n| <= M at x; the imaginary residual must stay
// below 1e-10 (it is pure rounding noise) and is discarded.
double evaluate(const SelbergCoeffs& s, double x);

struct SelbergCheck {
  bool majorization = false;   // evaluate >= indicator on the grid, slack >= -1e-12
  bool constant_exact = false; // double constant matches the exact one to 1e-15
  bool coeff_bound = false;    // |S_hat(n)| <= 1/(M+1) + min(b-a, 1/(pi n)) + 1e-15
  double min_slack_a = 0.0;
  double min_slack_c = 0.0;
  bool ok() const { return majorization && constant_exact && coeff_bound; }
};

// Evaluates the three majorant properties on a grid of `grid`+1 equispaced
// points of [-1/2, 1/2]; indicator values use exact rational comparisons.
SelbergCheck check_majorant(const SelbergCoeffs& s, int grid = 10000);

}  // namespace heckepairs
