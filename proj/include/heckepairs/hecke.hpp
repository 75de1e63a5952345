#pragma once

#include <gmpxx.h>

#include <vector>

#include "heckepairs/polynomial.hpp"
#include "heckepairs/qexpansion.hpp"

namespace heckepairs {

// Matrix of T_n on the Miller echelon basis of S_k(1); row i holds the
// coordinates of T_n f_i, i.e. entry (i, j) = coefficient of q^{j+1} in T_n f_i.
struct HeckeMatrix {
  int k = 0;
  long n = 0;
  int dim = 0;
  std::vector<std::vector<mpz_class>> entries;
};

HeckeMatrix hecke_matrix(int k, long n);

// T_{p^m} from the Hecke recursion T_{p^m} = T_{p^{m-1}} T_p - p^{k-1} T_{p^{m-2}};
// m = 0 gives the identity.
HeckeMatrix hecke_power_matrix(int k, long p, int m);

// Monic char poly of T_n, coefficients low to high, exact.
struct CharPoly {
  int degree = 0;
  ZPoly coeffs;
  int k = 0;
  long p = 0;  // operator index of the source matrix
};

CharPoly charpoly(const HeckeMatrix& m);

enum class Verdict { yes, no, inconclusive };

const char* verdict_str(Verdict v);

struct SnCertificate {
  bool certified = false;
  // Witness primes, in certificate order: irreducibility, then (for degree
  // >= 3) an odd cycle type, then (for degree >= 4) a 3-cycle or the Jordan
  // prime-cycle for degree >= 8. Empty when certified trivially (degree <= 1)
  // or not certified.
  std::vector<long> witnesses;
};

struct PairCountReport {
  int k = 0;
  long p = 0;
  int dim = 0;
  mpz_class pair_count;        // ordered pairs, diagonal included: sum of m_i^2
  bool squarefree = false;
  Verdict irreducible = Verdict::inconclusive;
  SnCertificate sn_galois;
};

// Fills pair_count and squarefree from the squarefree decomposition; the
// verdict fields stay at their defaults.
PairCountReport squarefree_pair_count(const CharPoly& P);

Verdict irreducibility(const CharPoly& P, int prime_budget = 25);

SnCertificate full_symmetric_heuristic(const CharPoly& P, int prime_budget = 25);

// Convenience: all of the above in one report.
PairCountReport analyze_charpoly(const CharPoly& P, int prime_budget = 25);

}  // namespace heckepairs
