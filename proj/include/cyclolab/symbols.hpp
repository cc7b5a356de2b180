#ifndef CYCLOLAB_SYMBOLS_HPP
#define CYCLOLAB_SYMBOLS_HPP

#include "cyclolab/integers.hpp"

namespace cyclolab {

/* Legendre symbol (a/p) in {-1, 0, +1} for an odd prime p, by Euler's
 * criterion.  Throws argument_error if p is not an odd prime. */
int legendre(const Int& a, const Int& p);

/* Jacobi symbol (a/n) for odd n >= 1, by quadratic reciprocity with the
 * supplementary laws; n is never factored.  Agrees with the product of
 * Legendre symbols over the prime factorization of n. */
int jacobi(const Int& a, const Int& n);

/* Kronecker symbol (a/n): the Jacobi symbol extended to all n by
 * (a/2) = 0, +1, -1 for a even, a = +-1 (mod 8), a = +-3 (mod 8),
 * (a/-1) = sign(a) (with (0/-1) = 1), and complete multiplicativity in n. */
int kronecker(const Int& a, const Int& n);

/* Rational quartic residue symbol (q/p)_4 = q^{(p-1)/4} mod p in {+1, -1}.
 * Defined only for p prime, p = 1 (mod 4), and q a quadratic residue prime
 * to p; anything else throws argument_error. */
int quartic_symbol(const Int& q, const Int& p);

/* (q/8)_4 = (-1)^{(q-1)/8} for a prime q = 1 (mod 8): whether q is a
 * fourth power modulo ideals above 2, read off the 2-adic expansion. */
int octic_symbol_at_8(const Int& q);

} // namespace cyclolab

#endif
