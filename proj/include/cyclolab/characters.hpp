#ifndef CYCLOLAB_CHARACTERS_HPP
#define CYCLOLAB_CHARACTERS_HPP

#include <optional>
#include <vector>

#include "cyclolab/cyclotomic.hpp"
#include "cyclolab/integers.hpp"

namespace cyclolab {

/* A fixed generating set of (Z/f)*: for each prime power in f, the smallest
 * primitive root (odd primes) or the {-1, 5} pair (2^k, k >= 3), lifted to
 * modulus f.  The 2-part comes first, then odd primes ascending, so exponent
 * vectors on these generators are reproducible. */
struct UnitGroupGenerator {
  Int value;
  long order;
};
std::vector<UnitGroupGenerator> unit_group_generators(const Int& f);

/* Character of (Z/f)* given by its exponents on the fixed generators:
 * chi(g_i) = zeta_{n_i}^{e_i}.  Order, conductor, and parity are derived
 * on construction and kept consistent. */
struct DirichletCharacter {
  Int modulus;
  std::vector<long> exponents;
  long order;
  Int conductor;
  bool even;

  bool operator==(const DirichletCharacter&) const = default;
};

DirichletCharacter make_character(const Int& f, const std::vector<long>& exponents);
std::vector<DirichletCharacter> all_characters(const Int& f);

/* chi(a): zero on non-units, otherwise a root of unity at level chi.order. */
CycloRational char_value(const DirichletCharacter& chi, const Int& a);

/* The exponent k with chi(a) = zeta_{chi.order}^k, or nullopt on non-units. */
std::optional<long> char_exponent(const DirichletCharacter& chi, const Int& a);

/* The character mod chi.conductor inducing chi; values agree on all units
 * of the original modulus. */
DirichletCharacter primitive_character(const DirichletCharacter& chi);

/* Character group of the degree-d subfield of Q(zeta_n): the d characters
 * of (Z/n)* trivial on the unique index-d subgroup.  Requires (Z/n)* cyclic,
 * where that subgroup and hence the subfield are unambiguous. */
struct SubfieldSpec {
  Int n;
  long d;
  std::vector<DirichletCharacter> characters;
};
SubfieldSpec characters_of_subfield(const Int& n, long d);

} // namespace cyclolab

#endif
