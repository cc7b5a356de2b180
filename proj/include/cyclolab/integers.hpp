#ifndef CYCLOLAB_INTEGERS_HPP
#define CYCLOLAB_INTEGERS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclolab/errors.hpp"

namespace cyclolab {

using Int = mpz_class;
using Rat = mpq_class;

/* b^e mod m, m > 0, e >= 0. */
Int pow_mod(const Int& b, const Int& e, const Int& m);

/* Deterministic Miller-Rabin.  The fixed base set (first 13 primes) is a
 * proven witness set below 3.317e24, which covers every input this toolkit
 * generates; larger inputs are answered with the same bases. */
bool is_prime(const Int& n);

/* Floor square root (n >= 0). */
Int isqrt(const Int& n);

/* If n is a perfect square, store the root and return true. */
bool is_square(const Int& n, Int& root);
inline bool is_square(const Int& n) {
  Int r;
  return is_square(n, r);
}

/* n = 2^k * odd. */
int v2(const Int& n);
Int odd_part(const Int& n);

/* g = gcd(a,b) = u*a + v*b. */
Int xgcd(const Int& a, const Int& b, Int& u, Int& v);

/* x mod m in [0, m), m > 0. */
Int mod_floor(const Int& x, const Int& m);

/* Inverse of a mod m (gcd(a,m) = 1 required). */
Int inv_mod(const Int& a, const Int& m);

/* x with x = r1 (mod m1), x = r2 (mod m2); gcd(m1,m2) = 1.  Result in [0, m1*m2). */
Int crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

/* Prime factorization n = prod p_i^{e_i}, p_i ascending, n >= 1.
 * Trial division plus Brent-Pollard rho for stubborn cofactors. */
std::vector<std::pair<Int, int>> factor(const Int& n);

/* Euler phi from the factorization. */
Int euler_phi(const Int& n);

/* Primes below n, ascending (simple sieve; n capped at desk scale). */
std::vector<long> primes_below(long n);

/* Checked narrowing for desk-scale values. */
long to_long(const Int& n);

/* True for D = 1 (mod 4) squarefree, or D = 4m with m = 2,3 (mod 4) squarefree.
 * D = 1 and D = 0 are not discriminants of a quadratic field. */
bool is_fundamental_discriminant(const Int& D);

} // namespace cyclolab

#endif
