#include "cyclolab/symbols.hpp"

namespace cyclolab {

int legendre(const Int& a, const Int& p) {
  if (p == 2 || !is_prime(p)) throw argument_error("legendre: modulus must be an odd prime");
  Int r = mod_floor(a, p);
  if (r == 0) return 0;
  Int e = pow_mod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int jacobi(const Int& a, const Int& n) {
  if (n <= 0 || n % 2 == 0) throw argument_error("jacobi: modulus must be odd and positive");
  Int x = mod_floor(a, n);
  Int y = n;
  int sign = 1;
  while (x != 0) {
    int t = v2(x);
    x >>= t;
    // (2/y) = -1 iff y = 3,5 (mod 8)
    if (t % 2 == 1) {
      long y8 = mpz_fdiv_ui(y.get_mpz_t(), 8);
      if (y8 == 3 || y8 == 5) sign = -sign;
    }
    // reciprocity: x, y both odd
    if (mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(y.get_mpz_t(), 4) == 3) sign = -sign;
    std::swap(x, y);
    x = mod_floor(x, y);
  }
  return y == 1 ? sign : 0;
}

int kronecker(const Int& a, const Int& n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  Int m = n;
  int sign = 1;
  if (m < 0) {
    m = -m;
    if (a < 0) sign = -sign;
  }
  if (m % 2 == 0) {
    if (a % 2 == 0) return 0;
    int t = v2(m);
    m >>= t;
    long a8 = mpz_fdiv_ui(a.get_mpz_t(), 8);
    if (t % 2 == 1 && (a8 == 3 || a8 == 5)) sign = -sign;
  }
  return sign * jacobi(a, m);
}

int quartic_symbol(const Int& q, const Int& p) {
  if (!is_prime(p) || mod_floor(p, 4) != 1)
    throw argument_error("quartic_symbol: modulus must be a prime = 1 (mod 4)");
  Int r = mod_floor(q, p);
  if (r == 0) throw argument_error("quartic_symbol: argument divisible by the modulus");
  if (legendre(r, p) != 1)
    throw argument_error("quartic_symbol: argument is a quadratic nonresidue");
  Int e = pow_mod(r, (p - 1) / 4, p);
  // a residue's (p-1)/4 power is a square root of 1
  return e == 1 ? 1 : -1;
}

int octic_symbol_at_8(const Int& q) {
  if (!is_prime(q) || mod_floor(q, 8) != 1)
    throw argument_error("octic_symbol_at_8: argument must be a prime = 1 (mod 8)");
  return mpz_fdiv_ui(Int((q - 1) / 8).get_mpz_t(), 2) == 0 ? 1 : -1;
}

} // namespace cyclolab
