#pragma once

#include <utility>
#include <vector>

#include "cyclolab/errors.hpp"
#include "cyclolab/integers.hpp"

namespace cyclolab {

/* Genus theory of quadratic fields: the 4-rank of the narrow class group via
 * Redei matrices, the two divisibility criteria 4 | h+ and 8 | h+ for pq, and
 * a bounded solver for the conic x^2 - p y^2 = -q z^2 with exact signature
 * analysis of x + y sqrt(p). */

/* Matrix over F_2 attached to the splitting of a fundamental discriminant D
 * into prime discriminants d_1 ... d_t (product = D, at most one even).
 * Entry a_ij for i != j is 1 exactly when chi_{d_i}(p_j) = -1, where p_j is
 * the prime below d_j; the diagonal a_jj is 1 exactly when
 * chi_{D/d_j}(p_j) = -1, which makes every column sum to 0 over F_2. */
struct RedeiMatrix {
  std::vector<Int> prime_discriminants;
  std::vector<std::vector<int>> entries; // entries[i][j] in {0,1}
};

/* Splitting of a fundamental discriminant into prime discriminants:
 * p* = (-1)^((p-1)/2) p for odd p | D, and the remaining even factor
 * (one of -4, 8, -8) listed first when present. */
std::vector<Int> prime_discriminant_factors(const Int& D);

RedeiMatrix redei_matrix(const Int& D);

/* Rank of a 0/1 matrix over F_2. */
int f2_rank(std::vector<std::vector<int>> m);

/* 4-rank of the narrow class group of discriminant D, computed as
 * t - 1 - rank(redei_matrix(D)). */
int redei_four_rank(const Int& D);

/* 4 | h+(pq) test for distinct primes p, q = 1 (mod 4): true iff (p/q) = +1. */
bool c4_condition(const Int& p, const Int& q);

/* 8 | h+(pq) test for primes p, q = 1 (mod 4) with (p/q) = +1:
 * true iff the two quartic residue symbols (p/q)_4 and (q/p)_4 agree. */
bool scholz_real(const Int& p, const Int& q);

/* Hilbert symbol (a, b)_v for nonzero a, b. The place v is 0 for the real
 * place, 2, or an odd prime. */
int hilbert_symbol(const Int& a, const Int& b, const Int& v);

/* Whether x^2 - p y^2 = -q z^2 has a nontrivial rational solution, decided by
 * Hilbert symbols at 2, p, q and the real place. */
bool conic_is_solvable(const Int& p, const Int& q);

/* Primitive solution of x^2 - p y^2 = -q z^2 with x, y >= 0, z > 0. */
struct ConicSolution {
  Int x, y, z;
};

/* Smallest solution in lexicographic (z, y, |x|) order, searched over
 * 1 <= z, y <= bound. Locally unsolvable input is an argument error;
 * a solvable instance whose minimal solution escapes the bound is a
 * resource error. */
ConicSolution solve_conic(const Int& p, const Int& q, const Int& bound = Int(10000));

/* Signs of the two real embeddings x + y sqrt(p) and x - y sqrt(p).
 * A valid solution has negative norm, so the signs always differ. */
std::pair<int, int> signature_of_alpha(const ConicSolution& sol, const Int& p);

} // namespace cyclolab
