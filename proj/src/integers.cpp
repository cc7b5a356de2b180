#include "cyclolab/integers.hpp"

#include <algorithm>

namespace cyclolab {

Int pow_mod(const Int& b, const Int& e, const Int& m) {
  if (m <= 0) throw argument_error("pow_mod: modulus must be positive");
  if (e < 0) throw argument_error("pow_mod: negative exponent");
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

namespace {

/* One Miller-Rabin round; n odd, n - 1 = 2^s * d. */
bool mr_witness(const Int& n, const Int& d, int s, long base) {
  Int a(base);
  if (a >= n) a %= n;
  if (a == 0) return false;
  Int x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true; // composite witnessed
}

} // namespace

bool is_prime(const Int& n) {
  static const long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  if (n < 2) return false;
  for (long p : bases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  int s = v2(d);
  d >>= s;
  for (long b : bases)
    if (mr_witness(n, d, s, b)) return false;
  return true;
}

Int isqrt(const Int& n) {
  if (n < 0) throw argument_error("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n, Int& root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  root = isqrt(n);
  return true;
}

int v2(const Int& n) {
  if (n == 0) throw argument_error("v2: zero argument");
  return static_cast<int>(mpz_scan1(n.get_mpz_t(), 0));
}

Int odd_part(const Int& n) {
  Int r = abs(n);
  return r >> v2(r);
}

Int xgcd(const Int& a, const Int& b, Int& u, Int& v) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int mod_floor(const Int& x, const Int& m) {
  if (m <= 0) throw argument_error("mod_floor: modulus must be positive");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw argument_error("inv_mod: argument not invertible");
  return r;
}

Int crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  Int u, v;
  Int g = xgcd(m1, m2, u, v);
  if (g != 1) throw argument_error("crt: moduli not coprime");
  Int m = m1 * m2;
  // x = r1 + m1 * (u-free part): r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
  Int t = mod_floor((r2 - r1) * mod_floor(u, m2), m2);
  return mod_floor(r1 + m1 * t, m);
}

namespace {

Int rho_brent(const Int& n) {
  // Brent cycle-finding with fixed deterministic parameters.
  for (long c = 1;; ++c) {
    Int x(2), y(2), d(1);
    Int q(1);
    long m = 128;
    while (d == 1) {
      x = y;
      for (long i = 0; i < m; ++i) y = (y * y + c) % n;
      long k = 0;
      while (k < m && d == 1) {
        Int ys = y;
        long lim = std::min<long>(128, m - k);
        for (long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        d = gcd(q, n);
        k += lim;
        if (d == n) {
          // backtrack one step at a time
          d = 1;
          do {
            ys = (ys * ys + c) % n;
            d = gcd(abs(x - ys), n);
          } while (d == 1);
          break;
        }
      }
      m *= 2;
    }
    if (d != n) return d;
  }
}

void factor_into(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = rho_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

std::vector<std::pair<Int, int>> factor(const Int& n) {
  if (n < 1) throw argument_error("factor: argument must be >= 1");
  Int m = n;
  std::vector<Int> primes;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L})
    while (m % p == 0) {
      primes.emplace_back(p);
      m /= p;
    }
  Int p(53);
  while (p * p <= m && p < 100000) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
    p += 2;
  }
  if (m > 1) factor_into(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, int>> out;
  for (const Int& q : primes) {
    if (!out.empty() && out.back().first == q)
      ++out.back().second;
    else
      out.emplace_back(q, 1);
  }
  return out;
}

std::vector<long> primes_below(long n) {
  if (n > 50000000L) throw resource_error("primes_below: sieve bound above desk scale");
  std::vector<long> out;
  if (n <= 2) return out;
  std::vector<bool> comp(n, false);
  for (long i = 2; i < n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (long j = i * i; j < n; j += i) comp[j] = true;
  }
  return out;
}

long to_long(const Int& n) {
  if (!n.fits_slong_p()) throw argument_error("to_long: value exceeds machine range");
  return n.get_si();
}

Int euler_phi(const Int& n) {
  if (n < 1) throw argument_error("euler_phi: n must be positive");
  Int out = 1;
  for (auto& [p, e] : factor(n)) {
    out *= p - 1;
    for (int i = 1; i < e; ++i) out *= p;
  }
  return out;
}

namespace {

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  for (auto& [p, e] : factor(abs(n)))
    if (e > 1) return false;
  return true;
}

} // namespace

bool is_fundamental_discriminant(const Int& D) {
  if (D == 0 || D == 1) return false;
  Int r = mod_floor(D, 4);
  if (r == 1) return is_squarefree(D);
  if (r != 0) return false;
  Int m = D / 4;
  Int mr = mod_floor(m, 4);
  return (mr == 2 || mr == 3) && is_squarefree(m);
}

} // namespace cyclolab
