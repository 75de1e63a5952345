#include "heckepairs/polynomial.hpp"

#include <algorithm>

#include "heckepairs/errors.hpp"

namespace heckepairs {

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly trim(ZPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

ZPoly derivative(const ZPoly& p) {
  ZPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(mpz_class(static_cast<long>(i)) * p[i]);
  return trim(std::move(d));
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  ZPoly q = trim(p);
  if (q.empty()) return q;
  mpz_class g = content(q);
  if (q.back() < 0) g = -g;
  for (auto& c : q) c /= g;
  return q;
}

namespace {

// Economical pseudo-remainder: lc(b)^s * a mod b with one factor of lc(b)
// per reduction step, so s <= deg a - deg b + 1 (smaller when degrees drop
// by more than one at once). Callers needing the exact scale read s back.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b, int* steps = nullptr) {
  int db = degree(b);
  if (db < 0) throw invalid_argument("pseudo_rem: division by zero polynomial");
  const mpz_class& lb = b.back();
  int s = 0;
  while (degree(a) >= db) {
    int da = degree(a);
    mpz_class lead = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i)
      a[static_cast<size_t>(da - db + i)] -= lead * b[static_cast<size_t>(i)];
    a = trim(std::move(a));
    ++s;
  }
  if (steps) *steps = s;
  return a;
}

// Exact division of integer polynomials known to divide; checked.
ZPoly exact_div(const ZPoly& num, const ZPoly& den) {
  int dn = degree(num), dd = degree(den);
  if (dd < 0) throw invalid_argument("exact_div: zero divisor");
  if (dn < dd) throw consistency_error("exact_div: degree underflow");
  std::vector<mpq_class> r(num.begin(), num.end());
  std::vector<mpq_class> quo(static_cast<size_t>(dn - dd + 1));
  for (int i = dn; i >= dd; --i) {
    mpq_class c = r[static_cast<size_t>(i)] / den.back();
    quo[static_cast<size_t>(i - dd)] = c;
    if (c != 0)
      for (int j = 0; j <= dd; ++j) r[static_cast<size_t>(i - dd + j)] -= c * den[static_cast<size_t>(j)];
  }
  for (const auto& c : r)
    if (c != 0) throw consistency_error("exact_div: inexact polynomial division");
  ZPoly z(quo.size());
  for (size_t i = 0; i < quo.size(); ++i) {
    if (quo[i].get_den() != 1) throw consistency_error("exact_div: non-integral quotient");
    z[i] = quo[i].get_num();
  }
  return trim(std::move(z));
}

}  // namespace

ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly x = primitive_part(a), y = primitive_part(b);
  if (x.empty()) return y;
  if (y.empty()) return x;
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = primitive_part(pseudo_rem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

int sign_at(const ZPoly& p, const mpq_class& x) {
  // p(n/d) has the sign of sum c_i n^i d^(deg-i); canonical d > 0.
  ZPoly q = trim(p);
  if (q.empty()) return 0;
  const mpz_class& n = x.get_num();
  const mpz_class& d = x.get_den();
  int deg = degree(q);
  std::vector<mpz_class> dpow(static_cast<size_t>(deg) + 1);
  dpow[static_cast<size_t>(deg)] = 1;
  for (int i = deg - 1; i >= 0; --i)
    dpow[static_cast<size_t>(i)] = dpow[static_cast<size_t>(i + 1)] * d;
  mpz_class acc = 0, npow = 1;
  for (int i = 0; i <= deg; ++i) {
    acc += q[static_cast<size_t>(i)] * npow * dpow[static_cast<size_t>(i)];
    if (i < deg) npow *= n;
  }
  return sgn(acc);
}

std::vector<std::pair<int, ZPoly>> yun_squarefree(const ZPoly& p0) {
  ZPoly p = primitive_part(p0);
  std::vector<std::pair<int, ZPoly>> out;
  if (degree(p) < 1) return out;
  ZPoly dp = derivative(p);
  ZPoly g = poly_gcd(p, dp);
  if (degree(g) == 0) {
    out.emplace_back(1, p);
    return out;
  }
  ZPoly w = exact_div(p, g);
  ZPoly y = exact_div(dp, g);
  int i = 1;
  while (true) {
    ZPoly dw = derivative(w);
    ZPoly z(std::max(y.size(), dw.size()));
    for (size_t j = 0; j < z.size(); ++j)
      z[j] = (j < y.size() ? y[j] : mpz_class(0)) - (j < dw.size() ? dw[j] : mpz_class(0));
    z = trim(std::move(z));
    if (z.empty()) {
      if (degree(w) >= 1) out.emplace_back(i, primitive_part(w));
      break;
    }
    ZPoly a = poly_gcd(w, z);
    if (degree(a) >= 1) out.emplace_back(i, a);
    w = exact_div(w, a);
    y = exact_div(z, a);
    ++i;
  }
  return out;
}

ZPoly berkowitz_charpoly(const std::vector<std::vector<mpz_class>>& m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw invalid_argument("charpoly: matrix must be square");
  // cp holds det(XI - A_r) for the leading r x r block, coefficients high to
  // low; each step convolves with the Berkowitz-Toeplitz vector.
  std::vector<mpz_class> cp = {mpz_class(1)};
  for (size_t r = 0; r < n; ++r) {
    std::vector<mpz_class> row(r), col(r);
    for (size_t i = 0; i < r; ++i) {
      row[i] = m[r][i];
      col[i] = m[i][r];
    }
    std::vector<mpz_class> toep(r + 2);
    toep[0] = 1;
    toep[1] = -m[r][r];
    std::vector<mpz_class> cur = col;
    for (size_t j = 2; j <= r + 1; ++j) {
      mpz_class dot = 0;
      for (size_t i = 0; i < r; ++i) dot += row[i] * cur[i];
      toep[j] = -dot;
      if (j <= r) {
        std::vector<mpz_class> nxt(r);
        for (size_t i = 0; i < r; ++i) {
          mpz_class s = 0;
          for (size_t t = 0; t < r; ++t) s += m[i][t] * cur[t];
          nxt[i] = s;
        }
        cur = std::move(nxt);
      }
    }
    std::vector<mpz_class> next(r + 2);
    for (size_t i = 0; i < cp.size(); ++i)
      for (size_t j = 0; j < toep.size() && i + j < r + 2; ++j) next[i + j] += cp[i] * toep[j];
    cp = std::move(next);
  }
  ZPoly out(n + 1);
  for (size_t i = 0; i <= n; ++i) out[n - i] = cp[i];
  return out;
}

mpz_class resultant(const ZPoly& a0, const ZPoly& b0) {
  // Euclidean resultant with exact rational bookkeeping. With R the
  // pseudo-remainder lc(B)^s * (A mod B):
  //   Res(A, B) = (-1)^(deg A deg B) lc(B)^(deg A - deg R - s deg B) Res(B, R).
  // Degrees at desk scale are tiny, so simplicity beats subresultants.
  ZPoly a = trim(a0), b = trim(b0);
  if (degree(a) < 1 && degree(b) < 1) {
    if (a.empty() || b.empty()) return 0;
    return 1;  // two nonzero constants
  }
  mpq_class res = 1;
  if (degree(a) < degree(b)) {
    if ((static_cast<long>(degree(a)) * degree(b)) % 2) res = -res;
    std::swap(a, b);
  }
  if (b.empty()) return 0;
  while (degree(b) >= 1) {
    int da = degree(a), db = degree(b);
    int steps = 0;
    ZPoly r = pseudo_rem(a, b, &steps);
    if (r.empty()) return 0;
    int dr = degree(r);
    if ((static_cast<long>(da) * db) % 2) res = -res;
    long exp = static_cast<long>(da) - dr - static_cast<long>(steps) * db;
    mpz_class lbpow;
    mpz_pow_ui(lbpow.get_mpz_t(), b.back().get_mpz_t(),
               static_cast<unsigned long>(exp < 0 ? -exp : exp));
    if (exp >= 0)
      res *= mpq_class(lbpow);
    else
      res /= mpq_class(lbpow);
    a = std::move(b);
    b = std::move(r);
  }
  // b is a nonzero constant c: Res(a, c) = c^deg(a).
  mpz_class cpow;
  mpz_pow_ui(cpow.get_mpz_t(), b.back().get_mpz_t(), static_cast<unsigned long>(degree(a)));
  res *= mpq_class(cpow);
  if (res.get_den() != 1) throw consistency_error("resultant: non-integral result");
  return res.get_num();
}

mpz_class discriminant(const ZPoly& p0) {
  ZPoly p = trim(p0);
  int d = degree(p);
  if (d < 1) return 0;
  mpq_class disc(resultant(p, derivative(p)));
  disc /= p.back();
  if ((static_cast<long>(d) * (d - 1) / 2) % 2) disc = -disc;
  if (disc.get_den() != 1) throw consistency_error("discriminant: non-integral result");
  return disc.get_num();
}

namespace {

// Content removal that keeps the sign (primitive_part flips negative leading
// coefficients, which would corrupt Sturm sign counts).
ZPoly strip_content(ZPoly p) {
  p = trim(std::move(p));
  if (p.empty()) return p;
  mpz_class g = content(p);
  for (auto& c : p) c /= g;
  return p;
}

std::vector<ZPoly> sturm_chain(const ZPoly& p) {
  std::vector<ZPoly> chain;
  chain.push_back(strip_content(p));
  chain.push_back(strip_content(derivative(p)));
  while (degree(chain.back()) >= 0) {
    const ZPoly& a = chain[chain.size() - 2];
    const ZPoly& b = chain.back();
    if (degree(b) == 0) break;
    // Euclidean remainder over Q, negated; denominators cleared sign-safely.
    int da = degree(a), db = degree(b);
    std::vector<mpq_class> r(a.begin(), a.end());
    for (int i = da; i >= db; --i) {
      mpq_class f = r[static_cast<size_t>(i)] / b.back();
      if (f == 0) continue;
      for (int j = 0; j <= db; ++j)
        r[static_cast<size_t>(i - db + j)] -= f * b[static_cast<size_t>(j)];
    }
    mpz_class den = 1;
    for (const auto& c : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    for (int i = 0; i < db; ++i) {
      mpq_class v = -r[static_cast<size_t>(i)] * den;
      z.push_back(v.get_num());
    }
    z = strip_content(std::move(z));
    if (z.empty()) break;
    chain.push_back(std::move(z));
  }
  return chain;
}

int sturm_variations(const std::vector<ZPoly>& chain, const mpq_class& x) {
  int var = 0, prev = 0;
  for (const auto& q : chain) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const ZPoly& p0,
                                                                const mpq_class& tol) {
  if (tol <= 0) throw invalid_argument("isolate_real_roots: tolerance must be positive");
  ZPoly p = trim(p0);
  if (degree(p) < 1) return {};
  if (degree(poly_gcd(p, derivative(p))) > 0)
    throw invalid_argument(
        "isolate_real_roots: polynomial has repeated roots; deflate by gcd(P, P') first");
  std::vector<ZPoly> chain = sturm_chain(p);

  mpq_class bound = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    mpq_class c(p[i]);
    c /= p.back();
    if (c < 0) c = -c;
    if (c > bound) bound = c;
  }
  bound += 2;  // strict enclosure of the Cauchy bound 1 + max |c_i/c_d|

  // Pick a bisection point that is not a root (possible since roots are finite).
  auto nonroot_mid = [&p](const mpq_class& a, const mpq_class& b) {
    mpq_class m = (a + b) / 2;
    while (sign_at(p, m) == 0) m = (m + b) / 2;
    return m;
  };

  std::vector<std::pair<mpq_class, mpq_class>> out;
  // Work stack of half-open intervals (lo, hi] with Sturm counts at ends.
  struct Seg { mpq_class lo, hi; int vlo, vhi; };
  std::vector<Seg> stack;
  int vl = sturm_variations(chain, -bound);
  int vr = sturm_variations(chain, bound);
  if (vl == vr) return {};
  stack.push_back({-bound, bound, vl, vr});
  while (!stack.empty()) {
    Seg s = std::move(stack.back());
    stack.pop_back();
    int count = s.vlo - s.vhi;
    if (count <= 0) continue;
    if (count == 1) {
      // Refine (lo, hi] around its single root down to the tolerance.
      mpq_class lo = s.lo, hi = s.hi;
      int vlo = s.vlo;
      bool exact = false;
      if (sign_at(p, hi) == 0) {
        out.emplace_back(hi, hi);
        continue;
      }
      while (hi - lo > tol) {
        mpq_class m = (lo + hi) / 2;
        if (sign_at(p, m) == 0) {
          out.emplace_back(m, m);
          exact = true;
          break;
        }
        int vm = sturm_variations(chain, m);
        if (vlo - vm == 1) {
          hi = m;
        } else {
          lo = m;
          vlo = vm;
        }
      }
      if (!exact) out.emplace_back(lo, hi);
      continue;
    }
    mpq_class m = nonroot_mid(s.lo, s.hi);
    int vm = sturm_variations(chain, m);
    stack.push_back({s.lo, m, s.vlo, vm});
    stack.push_back({m, s.hi, vm, s.vhi});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (static_cast<int>(out.size()) != vl - vr)
    throw consistency_error("isolate_real_roots: lost a root during bisection");
  return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

using FPoly = std::vector<u64>;  // coefficients low to high, reduced mod q

FPoly ftrim(FPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int fdeg(const FPoly& p) { return static_cast<int>(p.size()) - 1; }

FPoly fmul(const FPoly& a, const FPoly& b, u64 q) {
  if (a.empty() || b.empty()) return {};
  FPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + (u128)a[i] * b[j]) % q;
  }
  return ftrim(std::move(c));
}

FPoly fmod(FPoly a, const FPoly& m, u64 q) {
  u64 inv_lead = powmod_u64(m.back(), q - 2, q);
  while (a.size() >= m.size()) {
    u64 f = mulmod_u64(a.back(), inv_lead, q);
    size_t off = a.size() - m.size();
    if (f)
      for (size_t i = 0; i < m.size(); ++i)
        a[off + i] = (a[off + i] + q - mulmod_u64(f, m[i], q)) % q;
    a.back() = 0;
    a = ftrim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

// Quotient of an exact division (remainder known zero).
FPoly fdiv(const FPoly& a0, const FPoly& g, u64 q) {
  FPoly a = a0;
  u64 inv_lead = powmod_u64(g.back(), q - 2, q);
  FPoly quo(a.size() - g.size() + 1, 0);
  while (a.size() >= g.size()) {
    u64 f = mulmod_u64(a.back(), inv_lead, q);
    size_t off = a.size() - g.size();
    quo[off] = f;
    for (size_t i = 0; i < g.size(); ++i)
      a[off + i] = (a[off + i] + q - mulmod_u64(f, g[i], q)) % q;
    a.back() = 0;
    a = ftrim(std::move(a));
    if (a.empty()) break;
  }
  return ftrim(std::move(quo));
}

FPoly fgcd(FPoly a, FPoly b, u64 q) {
  while (!b.empty()) {
    FPoly r = fmod(std::move(a), b, q);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = powmod_u64(a.back(), q - 2, q);
    for (auto& c : a) c = mulmod_u64(c, inv, q);
  }
  return a;
}

// x^q mod m by binary exponentiation.
FPoly frobenius_x(const FPoly& m, u64 q) {
  FPoly base = fmod({0, 1}, m, q);
  FPoly r = {1};
  u64 e = q;
  while (e) {
    if (e & 1) r = fmod(fmul(r, base, q), m, q);
    base = fmod(fmul(base, base, q), m, q);
    e >>= 1;
  }
  return r;
}

// h(x)^q mod m for h already reduced: Frobenius turns this into h(x^q),
// computed by Horner in xq = x^q mod m.
FPoly frobenius_step(const FPoly& h, const FPoly& xq, const FPoly& m, u64 q) {
  FPoly r;
  for (size_t i = h.size(); i-- > 0;) {
    r = fmod(fmul(r, xq, q), m, q);
    if (r.empty()) {
      if (h[i]) r = {h[i]};
    } else {
      r[0] = (r[0] + h[i]) % q;
      r = ftrim(std::move(r));
    }
  }
  return r;
}

}  // namespace

std::vector<int> factor_degrees_mod(const ZPoly& p, std::uint64_t q) {
  if (!is_prime_u64(q)) throw invalid_argument("factor_degrees_mod: modulus must be prime");
  ZPoly pt = trim(p);
  if (degree(pt) < 1) return {};
  FPoly f(pt.size());
  for (size_t i = 0; i < pt.size(); ++i) {
    mpz_class r = pt[i] % mpz_class(static_cast<unsigned long>(q));
    if (r < 0) r += mpz_class(static_cast<unsigned long>(q));
    f[i] = r.get_ui();
  }
  f = ftrim(std::move(f));
  if (fdeg(f) != degree(pt)) return {};  // leading coefficient vanished mod q
  {
    FPoly df;
    for (size_t i = 1; i < f.size(); ++i) df.push_back(mulmod_u64(f[i], i % q, q));
    df = ftrim(std::move(df));
    if (df.empty() || fgcd(f, df, q).size() > 1) return {};  // not squarefree mod q
  }

  // Distinct-degree factorization: gcd(rem, x^(q^e) - x) collects all
  // irreducible factors of degree e. Reducing the Frobenius iterate when rem
  // shrinks is valid because the new rem divides the old.
  std::vector<int> degs;
  FPoly rem = f;
  FPoly xq = frobenius_x(rem, q);
  FPoly h = {0, 1};  // x^(q^0) = x
  if (fdeg(rem) >= 1) h = fmod(h, rem, q);
  for (int e = 1; fdeg(rem) >= 2 * e; ++e) {
    h = frobenius_step(h, xq, rem, q);  // now x^(q^e) mod rem
    FPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + q - 1) % q;
    diff = ftrim(std::move(diff));
    // diff = 0 means every surviving factor has degree e; fgcd(rem, 0) = rem.
    FPoly g = fgcd(rem, diff, q);
    if (fdeg(g) >= 1) {
      for (int i = 0; i < fdeg(g) / e; ++i) degs.push_back(e);
      rem = fdiv(rem, g, q);
      if (fdeg(rem) < 1) break;
      xq = fmod(xq, rem, q);
      h = fmod(h, rem, q);
    }
  }
  if (fdeg(rem) >= 1) degs.push_back(fdeg(rem));
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace heckepairs
