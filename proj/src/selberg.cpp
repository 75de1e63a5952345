#include "heckepairs/selberg.hpp"

#include <cmath>

#include "heckepairs/errors.hpp"

namespace heckepairs {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::complex<double> e_of(double x) {
  return {std::cos(2 * kPi * x), std::sin(2 * kPi * x)};
}

}  // namespace

std::complex<double> SelbergCoeffs::coeff(long n) const {
  if (n > M || n < -static_cast<long>(M)) return {0.0, 0.0};
  if (n >= 0) return pos[static_cast<size_t>(n)];
  return std::conj(pos[static_cast<size_t>(-n)]);
}

double vaaler_jhat(double t) {
  const double at = std::fabs(t);
  if (at == 0.0) return 1.0;
  if (at >= 1.0) return 0.0;
  return kPi * t * (1 - at) * (std::cos(kPi * t) / std::sin(kPi * t)) + at;
}

std::complex<double> chi_hat(const mpq_class& a, const mpq_class& b, long n) {
  if (n == 0) return {mpq_class(b - a).get_d(), 0.0};
  const std::complex<double> num =
      e_of(-static_cast<double>(n) * a.get_d()) - e_of(-static_cast<double>(n) * b.get_d());
  return num / std::complex<double>(0.0, 2 * kPi * static_cast<double>(n));
}

SelbergCoeffs build_majorant(const mpq_class& a, const mpq_class& b, int M) {
  if (M < 1) throw invalid_argument("build_majorant: degree must be positive");
  if (!(a < b)) throw invalid_argument("build_majorant: need a < b");
  if (a < mpq_class(-1, 2) || b > mpq_class(1, 2))
    throw invalid_argument("build_majorant: interval must stay inside [-1/2, 1/2]");

  SelbergCoeffs s;
  s.M = M;
  s.a = a;
  s.b = b;
  s.c0 = b - a + mpq_class(1, M + 1);
  s.pos.resize(static_cast<size_t>(M) + 1);
  const double ad = a.get_d(), bd = b.get_d();
  for (int n = 0; n <= M; ++n) {
    const double t = static_cast<double>(n) / (M + 1);
    const std::complex<double> fejer =
        (1 - t) / (2.0 * (M + 1)) * (e_of(-n * ad) + e_of(-n * bd));
    s.pos[static_cast<size_t>(n)] = vaaler_jhat(t) * chi_hat(a, b, n) + fejer;
  }
  return s;
}

double evaluate(const SelbergCoeffs& s, double x) {
  std::complex<double> sum = 0.0;
  for (long n = -s.M; n <= s.M; ++n) sum += s.coeff(n) * e_of(static_cast<double>(n) * x);
  if (std::fabs(sum.imag()) > 1e-10)
    throw consistency_error("selberg evaluate: imaginary residual exceeds 1e-10");
  return sum.real();
}

SelbergCheck check_majorant(const SelbergCoeffs& s, int grid) {
  if (grid < 1) throw invalid_argument("check_majorant: grid must be positive");
  SelbergCheck out;

  out.min_slack_a = 0.0;
  bool first = true;
  for (int i = 0; i <= grid; ++i) {
    const mpq_class x(2 * i - grid, 2 * grid);  // -1/2 + i/grid, exact
    const double chi = (s.a <= x && x <= s.b) ? 1.0 : 0.0;
    const double slack = evaluate(s, x.get_d()) - chi;
    if (first || slack < out.min_slack_a) out.min_slack_a = slack;
    first = false;
  }
  out.majorization = out.min_slack_a >= -1e-12;

  out.constant_exact = std::fabs(s.pos[0].real() - s.c0.get_d()) <= 1e-15 &&
                       std::fabs(s.pos[0].imag()) <= 1e-15;

  out.min_slack_c = 0.0;
  first = true;
  const double len = mpq_class(s.b - s.a).get_d();
  for (int n = 1; n <= s.M; ++n) {
    const double bound = 1.0 / (s.M + 1) + std::min(len, 1.0 / (kPi * n));
    const double slack = bound - std::abs(s.pos[static_cast<size_t>(n)]);
    if (first || slack < out.min_slack_c) out.min_slack_c = slack;
    first = false;
  }
  out.coeff_bound = s.M < 1 || out.min_slack_c >= -1e-15;
  return out;
}

}  // namespace heckepairs
