#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace heckepairs {

// Dense integer polynomials, coefficients low to high. The zero polynomial is
// the empty vector; otherwise the leading coefficient is nonzero.
using ZPoly = std::vector<mpz_class>;

int degree(const ZPoly& p);  // -1 for the zero polynomial
ZPoly trim(ZPoly p);
ZPoly derivative(const ZPoly& p);
mpz_class content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);

// gcd over Q, returned as a primitive integer polynomial with positive
// leading coefficient (constant 1 for coprime inputs).
ZPoly poly_gcd(const ZPoly& a, const ZPoly& b);

// Exact sign of p(x) at a rational point, using integer arithmetic only.
int sign_at(const ZPoly& p, const mpq_class& x);

// Yun squarefree decomposition of a primitive polynomial: returns the list
// (multiplicity i, factor a_i) with p = prod a_i^i and the a_i squarefree,
// pairwise coprime, multiplicity ascending, deg a_i >= 1.
std::vector<std::pair<int, ZPoly>> yun_squarefree(const ZPoly& p);

// Characteristic polynomial of an exact integer matrix by the Berkowitz
// division-free method; monic, low-to-high coefficients, degree n.
ZPoly berkowitz_charpoly(const std::vector<std::vector<mpz_class>>& m);

// Resultant via Euclidean pseudo-remainders and the discriminant
// (-1)^{d(d-1)/2} Res(p, p') / lc(p).
mpz_class resultant(const ZPoly& a, const ZPoly& b);
mpz_class discriminant(const ZPoly& p);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Certified real-root isolation of a squarefree polynomial by Sturm counts
// and exact dyadic bisection from the Cauchy bound. Returns disjoint closed
// intervals [lo, hi], width <= tol, sorted ascending, one real root each.
// A degenerate interval lo == hi marks an exactly known rational root.
std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const ZPoly& p,
                                                                const mpq_class& tol);

// Cycle type of the Frobenius at q acting on the roots of p mod q: the list
// of irreducible-factor degrees (with multiplicity, ascending) from
// distinct-degree factorization. Requires q prime, q not dividing lc(p) and
// p squarefree mod q (checked via gcd(p, p') mod q); returns empty on a
// non-squarefree reduction so callers can skip the prime.
std::vector<int> factor_degrees_mod(const ZPoly& p, std::uint64_t q);

}  // namespace heckepairs
