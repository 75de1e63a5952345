#include "heckepairs/qexpansion.hpp"

#include <algorithm>
#include <string>

#include "heckepairs/errors.hpp"

namespace heckepairs {

QExpansion::QExpansion(int weight, std::vector<mpz_class> coeffs)
    : weight_(weight), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw invalid_argument("QExpansion needs at least one coefficient");
}

const mpz_class& QExpansion::coeff(int n) const {
  if (n < 0 || n >= prec())
    throw invalid_argument("coefficient index " + std::to_string(n) + " outside known precision");
  return coeffs_[static_cast<size_t>(n)];
}

QExpansion QExpansion::truncated(int prec) const {
  if (prec < 1 || prec > this->prec())
    throw invalid_argument("cannot truncate to precision " + std::to_string(prec));
  return QExpansion(weight_, std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + prec));
}

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
  if (a.weight() != b.weight()) throw invalid_argument("weight mismatch in series addition");
  int prec = std::min(a.prec(), b.prec());
  std::vector<mpz_class> c(static_cast<size_t>(prec));
  for (int n = 0; n < prec; ++n) c[n] = a.coeffs_[n] + b.coeffs_[n];
  return QExpansion(a.weight(), std::move(c));
}

QExpansion operator-(const QExpansion& a, const QExpansion& b) {
  if (a.weight() != b.weight()) throw invalid_argument("weight mismatch in series subtraction");
  int prec = std::min(a.prec(), b.prec());
  std::vector<mpz_class> c(static_cast<size_t>(prec));
  for (int n = 0; n < prec; ++n) c[n] = a.coeffs_[n] - b.coeffs_[n];
  return QExpansion(a.weight(), std::move(c));
}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  int prec = std::min(a.prec(), b.prec());
  std::vector<mpz_class> c(static_cast<size_t>(prec));
  mpz_class t;
  for (int i = 0; i < prec; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j < prec; ++j) {
      t = a.coeffs_[i] * b.coeffs_[j];
      c[i + j] += t;
    }
  }
  return QExpansion(a.weight() + b.weight(), std::move(c));
}

QExpansion QExpansion::pow(int e) const {
  if (e < 0) throw invalid_argument("negative series power");
  std::vector<mpz_class> one(static_cast<size_t>(prec()));
  one[0] = 1;
  QExpansion acc(0, std::move(one));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

QExpansion eisenstein(int k, int prec) {
  if (k != 4 && k != 6) throw invalid_argument("eisenstein: only k = 4 and k = 6 are generators");
  if (prec < 1) throw invalid_argument("eisenstein: precision must be positive");
  // E_4 = 1 + 240 sum sigma_3(n) q^n, E_6 = 1 - 504 sum sigma_5(n) q^n.
  long mult = (k == 4) ? 240 : -504;
  int pw = k - 1;
  std::vector<mpz_class> c(static_cast<size_t>(prec));
  c[0] = 1;
  // sigma_{k-1} via the divisor sieve: add d^{k-1} to every multiple of d.
  mpz_class dp;
  for (int d = 1; d < prec; ++d) {
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(pw));
    dp *= mult;
    for (int n = d; n < prec; n += d) c[n] += dp;
  }
  return QExpansion(k, std::move(c));
}

QExpansion delta(int prec) {
  if (prec < 2) throw invalid_argument("delta: need precision >= 2");
  QExpansion e4 = eisenstein(4, prec);
  QExpansion e6 = eisenstein(6, prec);
  QExpansion num = e4.pow(3) - e6.pow(2);
  std::vector<mpz_class> c(static_cast<size_t>(prec));
  for (int n = 0; n < prec; ++n) {
    mpz_class q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.coeff(n).get_mpz_t(), 1728);
    if (r != 0)
      throw consistency_error("delta: E4^3 - E6^2 not divisible by 1728 at q^" + std::to_string(n));
    c[n] = q;
  }
  return QExpansion(12, std::move(c));
}

int dim_sk1(int k) {
  if (k < 0 || (k % 2) != 0) throw invalid_argument("dim_sk1: weight must be even and non-negative");
  if (k < 12) return 0;
  return k / 12 - (k % 12 == 2 ? 1 : 0);
}

MillerBasis miller_basis(int k, int prec) {
  if (k < 4 || (k % 2) != 0) throw invalid_argument("miller_basis: weight must be even and >= 4");
  int d = dim_sk1(k);
  if (prec < d + 1) throw invalid_argument("miller_basis: precision must be >= dim + 1");
  MillerBasis out;
  out.weight = k;
  out.dim = d;
  if (d == 0) return out;

  // Monomials Delta^j E4^a E6^b of weight k, one per j = 1..floor(k/12) with
  // 4a + 6b = k - 12j solvable (exactly the j with k - 12j != 2). Delta^j has
  // valuation j, so the rows are triangular against q^1..q^d.
  QExpansion dl = delta(prec);
  QExpansion e4 = eisenstein(4, prec);
  QExpansion e6 = eisenstein(6, prec);
  std::vector<std::vector<mpq_class>> rows;
  QExpansion dpow = dl;
  for (int j = 1; j <= k / 12; ++j, dpow = dpow * dl) {
    int w = k - 12 * j;
    if (w == 2) continue;
    int b = (w % 4 == 0) ? 0 : 1;
    int a = (w - 6 * b) / 4;
    QExpansion mono = dpow * e4.pow(a) * e6.pow(b);
    std::vector<mpq_class> row(static_cast<size_t>(prec));
    for (int n = 0; n < prec; ++n) row[n] = mono.coeff(n);
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != d)
    throw consistency_error("miller_basis: monomial count disagrees with the valence dimension");

  // Gauss-Jordan over Q with pivots at q^{i+1}. Valuations make every pivot
  // nonzero; the echelonized rows must come out integral.
  for (int i = 0; i < d; ++i) {
    mpq_class piv = rows[i][static_cast<size_t>(i + 1)];
    if (piv == 0) throw consistency_error("miller_basis: zero pivot during echelonization");
    for (int n = 0; n < prec; ++n) rows[i][n] /= piv;
    for (int r = 0; r < d; ++r) {
      if (r == i) continue;
      mpq_class f = rows[r][static_cast<size_t>(i + 1)];
      if (f == 0) continue;
      for (int n = 0; n < prec; ++n) rows[r][n] -= f * rows[i][n];
    }
  }
  for (int i = 0; i < d; ++i) {
    std::vector<mpz_class> c(static_cast<size_t>(prec));
    for (int n = 0; n < prec; ++n) {
      if (rows[i][n].get_den() != 1)
        throw consistency_error("miller_basis: non-integral echelon coefficient");
      c[n] = rows[i][n].get_num();
    }
    out.forms.emplace_back(k, std::move(c));
  }
  return out;
}

}  // namespace heckepairs
