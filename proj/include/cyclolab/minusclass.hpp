#ifndef CYCLOLAB_MINUSCLASS_HPP
#define CYCLOLAB_MINUSCLASS_HPP

#include <vector>

#include "cyclolab/characters.hpp"
#include "cyclolab/cyclotomic.hpp"

namespace cyclolab {

/* B_1,chi = (1/f) sum_{a=1}^{f} chi(a) a, exact at level order(chi).
 * The trivial character is rejected. */
CycloRational bernoulli_b1(const DirichletCharacter& chi);

/* Relative class number data for an imaginary abelian field of odd
 * prime-power conductor: h_minus = Q w prod_{chi odd} (-B_1,chi / 2),
 * each factor taken for the primitive restriction of chi. */
struct MinusReport {
  SubfieldSpec field;
  Int w;                                       // roots of unity in the field
  int unit_index;                              // Q, always 1 in this scope
  std::vector<CycloRational> bernoulli_factors;  // -B_1/2 per odd chi, in order
  Int h_minus;
};
MinusReport minus_class_number(const SubfieldSpec& field);

} // namespace cyclolab

#endif
