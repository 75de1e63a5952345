#include "heckepairs/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "heckepairs/errors.hpp"

namespace heckepairs {

HeckeMatrix hecke_matrix(int k, long n) {
  if (n < 1) throw invalid_argument("hecke_matrix: operator index must be positive");
  int d = dim_sk1(k);
  HeckeMatrix out;
  out.k = k;
  out.n = n;
  out.dim = d;
  out.entries.assign(static_cast<size_t>(d), std::vector<mpz_class>(static_cast<size_t>(d)));
  if (d == 0) return out;
  // a_m(T_n f) = sum over e | gcd(m, n) of e^(k-1) a_{mn/e^2}(f); the largest
  // index touched is d*n, so precision d*n + 1 suffices.
  MillerBasis basis = miller_basis(k, d * static_cast<int>(n) + 1);
  for (int i = 0; i < d; ++i) {
    const QExpansion& f = basis.forms[static_cast<size_t>(i)];
    for (int j = 0; j < d; ++j) {
      long m = j + 1;
      mpz_class acc = 0, epow;
      for (long e = 1; e <= std::min(m, n); ++e) {
        if (m % e || n % e) continue;
        mpz_ui_pow_ui(epow.get_mpz_t(), static_cast<unsigned long>(e),
                      static_cast<unsigned long>(k - 1));
        acc += epow * f.coeff(static_cast<int>(m / e * (n / e)));
      }
      out.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
    }
  }
  return out;
}

namespace {

std::vector<std::vector<mpz_class>> mat_mul(const std::vector<std::vector<mpz_class>>& a,
                                            const std::vector<std::vector<mpz_class>>& b) {
  size_t n = a.size();
  std::vector<std::vector<mpz_class>> c(n, std::vector<mpz_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < n; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

}  // namespace

HeckeMatrix hecke_power_matrix(int k, long p, int m) {
  if (m < 0) throw invalid_argument("hecke_power_matrix: exponent must be non-negative");
  if (!is_prime_u64(static_cast<std::uint64_t>(p)))
    throw invalid_argument("hecke_power_matrix: " + std::to_string(p) + " is not prime");
  int d = dim_sk1(k);
  HeckeMatrix out;
  out.k = k;
  out.dim = d;
  auto ident = [d]() {
    std::vector<std::vector<mpz_class>> e(static_cast<size_t>(d),
                                          std::vector<mpz_class>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i) e[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return e;
  };
  if (m == 0) {
    out.n = 1;
    out.entries = ident();
    return out;
  }
  HeckeMatrix tp = hecke_matrix(k, p);
  if (m == 1) return tp;
  mpz_class pk1;
  mpz_ui_pow_ui(pk1.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k - 1));
  std::vector<std::vector<mpz_class>> prev = ident();  // T_{p^0}
  std::vector<std::vector<mpz_class>> cur = tp.entries;
  for (int j = 2; j <= m; ++j) {
    std::vector<std::vector<mpz_class>> next = mat_mul(cur, tp.entries);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        next[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            pk1 * prev[static_cast<size_t>(r)][static_cast<size_t>(c)];
    prev = std::move(cur);
    cur = std::move(next);
  }
  out.n = 1;
  for (int j = 0; j < m; ++j) out.n *= p;
  out.entries = std::move(cur);
  return out;
}

CharPoly charpoly(const HeckeMatrix& m) {
  CharPoly out;
  out.k = m.k;
  out.p = m.n;
  out.degree = m.dim;
  out.coeffs = berkowitz_charpoly(m.entries);
  if (m.dim >= 1) {
    mpz_class tr = 0;
    for (int i = 0; i < m.dim; ++i)
      tr += m.entries[static_cast<size_t>(i)][static_cast<size_t>(i)];
    if (out.coeffs[static_cast<size_t>(m.dim - 1)] != -tr)
      throw consistency_error("charpoly: trace coefficient mismatch");
  }
  return out;
}

PairCountReport squarefree_pair_count(const CharPoly& P) {
  PairCountReport rep;
  rep.k = P.k;
  rep.p = P.p;
  rep.dim = P.degree;
  if (P.degree == 0) {
    rep.pair_count = 0;
    rep.squarefree = true;
    return rep;
  }
  auto parts = yun_squarefree(P.coeffs);
  mpz_class pairs = 0;
  int total = 0;
  for (const auto& [mult, poly] : parts) {
    pairs += mpz_class(static_cast<long>(mult)) * mult * degree(poly);
    total += mult * degree(poly);
  }
  if (total != P.degree) throw consistency_error("squarefree decomposition lost degree");
  rep.pair_count = pairs;
  rep.squarefree = (parts.size() == 1 && parts[0].first == 1);
  return rep;
}

namespace {

bool has_integer_root(const ZPoly& p) {
  // Monic integer polynomial: any rational root is an integer. Isolate real
  // roots to width < 1/2 and test the at most two integer candidates exactly.
  auto roots = isolate_real_roots(p, mpq_class(1, 4));
  for (const auto& [lo, hi] : roots) {
    mpz_class a, b;
    mpz_fdiv_q(a.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_cdiv_q(b.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    for (mpz_class c = a; c <= b; ++c)
      if (sign_at(p, mpq_class(c)) == 0) return true;
  }
  return false;
}

std::set<int> subset_sums(const std::vector<int>& degs, int d) {
  std::set<int> sums = {0};
  for (int e : degs) {
    std::set<int> next = sums;
    for (int s : sums)
      if (s + e <= d) next.insert(s + e);
    sums = std::move(next);
  }
  return sums;
}

long next_prime_after(long q) {
  ++q;
  while (!is_prime_u64(static_cast<std::uint64_t>(q))) ++q;
  return q;
}

}  // namespace

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "inconclusive";
  }
}

Verdict irreducibility(const CharPoly& P, int prime_budget) {
  if (prime_budget < 1) throw invalid_argument("irreducibility: prime budget must be positive");
  int d = P.degree;
  if (d <= 1) return Verdict::yes;
  auto sp = squarefree_pair_count(P);
  if (!sp.squarefree) return Verdict::no;  // a repeated factor certifies reducibility
  if (has_integer_root(P.coeffs)) return Verdict::no;
  if (d <= 3) return Verdict::yes;  // monic without rational roots: no proper factor fits

  mpz_class disc = discriminant(P.coeffs);
  std::set<int> proper;  // possible degrees of a proper rational factor
  for (int i = 1; i < d; ++i) proper.insert(i);
  long q = 1;
  for (int used = 0; used < prime_budget;) {
    q = next_prime_after(q);
    if (disc % q == 0) continue;
    auto degs = factor_degrees_mod(P.coeffs, static_cast<std::uint64_t>(q));
    if (degs.empty()) throw consistency_error("irreducibility: unexpected bad reduction");
    ++used;
    if (degs.size() == 1) return Verdict::yes;  // irreducible mod q
    auto sums = subset_sums(degs, d);
    for (auto it = proper.begin(); it != proper.end();)
      it = sums.count(*it) ? std::next(it) : proper.erase(it);
    if (proper.empty()) return Verdict::yes;  // no factor degree survives all Frobenius patterns
  }
  return Verdict::inconclusive;
}

SnCertificate full_symmetric_heuristic(const CharPoly& P, int prime_budget) {
  if (prime_budget < 1)
    throw invalid_argument("full_symmetric_heuristic: prime budget must be positive");
  SnCertificate cert;
  int d = P.degree;
  if (d <= 1) {
    cert.certified = true;  // S_0 and S_1 are trivial
    return cert;
  }
  if (irreducibility(P, prime_budget) != Verdict::yes) return cert;

  // Witness hunt over good primes. Transitivity comes from irreducibility;
  // the extra cycle types pin the group down to S_d:
  //   d = 2: any irreducible witness is a transposition, hence all of S_2.
  //   d = 3: an odd cycle type excludes A_3.
  //   d = 4, 5: a 3-cycle leaves only A_d or S_d among transitive subgroups,
  //             and an odd type excludes A_d.
  //   d >= 8: a prime cycle of length l, d/2 < l < d - 2, forces A_d or S_d
  //           (Jordan), and an odd type excludes A_d.
  //   d = 6, 7: no such prime l exists; stays inconclusive.
  if (d == 6 || d == 7) return cert;

  mpz_class disc = discriminant(P.coeffs);
  long q_irr = 0, q_odd = 0, q_cycle = 0;
  bool need_cycle = (d >= 4);
  long q = 1;
  for (int used = 0; used < prime_budget; ) {
    q = next_prime_after(q);
    if (disc % q == 0) continue;
    auto degs = factor_degrees_mod(P.coeffs, static_cast<std::uint64_t>(q));
    if (degs.empty()) continue;
    ++used;
    if (!q_irr && degs.size() == 1) q_irr = q;
    int parity = (d - static_cast<int>(degs.size())) % 2;
    if (!q_odd && parity == 1) q_odd = q;
    if (need_cycle && !q_cycle) {
      if (d <= 5) {
        if (std::count(degs.begin(), degs.end(), 3) == 1 &&
            std::count(degs.begin(), degs.end(), 1) == d - 3)
          q_cycle = q;
      } else {
        for (int l : degs)
          if (2 * l > d && l < d - 2 && is_prime_u64(static_cast<std::uint64_t>(l))) q_cycle = q;
      }
    }
    bool done = q_irr && (d == 2 || q_odd) && (!need_cycle || q_cycle);
    if (done) break;
  }
  if (!q_irr || (d >= 3 && !q_odd) || (need_cycle && !q_cycle)) return cert;
  cert.certified = true;
  cert.witnesses.push_back(q_irr);
  if (d >= 3) cert.witnesses.push_back(q_odd);
  if (need_cycle) cert.witnesses.push_back(q_cycle);
  return cert;
}

PairCountReport analyze_charpoly(const CharPoly& P, int prime_budget) {
  PairCountReport rep = squarefree_pair_count(P);
  rep.irreducible = irreducibility(P, prime_budget);
  rep.sn_galois = full_symmetric_heuristic(P, prime_budget);
  return rep;
}

}  // namespace heckepairs
