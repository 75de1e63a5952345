#pragma once

#include <gmpxx.h>

#include <vector>

namespace heckepairs {

// Truncated q-expansion with exact integer coefficients.
// coeff(n) is the coefficient of q^n for 0 <= n < prec(); nothing beyond
// prec() is ever read, and arithmetic truncates to the shorter operand.
class QExpansion {
 public:
  QExpansion(int weight, std::vector<mpz_class> coeffs);

  int weight() const { return weight_; }
  int prec() const { return static_cast<int>(coeffs_.size()); }
  const mpz_class& coeff(int n) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  QExpansion truncated(int prec) const;

  friend QExpansion operator+(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator-(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator*(const QExpansion& a, const QExpansion& b);
  QExpansion pow(int e) const;  // e >= 0; weight scales by e

 private:
  int weight_;
  std::vector<mpz_class> coeffs_;
};

// Normalized Eisenstein series E_4 or E_6 (constant term 1).
QExpansion eisenstein(int k, int prec);

// Discriminant cusp form (E_4^3 - E_6^2)/1728; the division is checked exact.
QExpansion delta(int prec);

// dim S_k(1) by the valence formula, for even k >= 0.
int dim_sk1(int k);

// Echelonized integral basis of S_k(1): form i has coefficient 1 at q^{i+1}
// and 0 at q^{j+1} for j != i, j < dim.
struct MillerBasis {
  int weight = 0;
  int dim = 0;
  std::vector<QExpansion> forms;
};

MillerBasis miller_basis(int k, int prec);

}  // namespace heckepairs
