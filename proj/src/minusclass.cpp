#include "cyclolab/minusclass.hpp"

#include <algorithm>

#include "cyclolab/errors.hpp"

namespace cyclolab {

CycloRational bernoulli_b1(const DirichletCharacter& chi) {
  if (chi.order == 1) throw argument_error("bernoulli_b1: trivial character has no minus factor");
  long f = to_long(chi.modulus);
  std::vector<Rat> poly(chi.order, Rat(0));
  for (long a = 1; a < f; ++a)
    if (auto k = char_exponent(chi, Int(a))) poly[*k] += a;
  return Rat(1, f) * CycloRational::from_polynomial(chi.order, std::move(poly));
}

MinusReport minus_class_number(const SubfieldSpec& field) {
  if (field.characters.size() != size_t(field.d))
    throw argument_error("minus_class_number: character group order must equal the degree");
  std::vector<DirichletCharacter> odd;
  Int cond = 1;
  for (const auto& chi : field.characters) {
    cond = lcm(cond, chi.conductor);
    if (!chi.even) odd.push_back(chi);
  }
  if (odd.empty()) throw argument_error("minus_class_number: field is totally real");
  auto fac = factor(cond);
  if (fac.size() != 1 || fac[0].first == 2)
    throw unsupported_error("minus_class_number: conductor must be an odd prime power");
  std::sort(odd.begin(), odd.end(),
            [](const DirichletCharacter& x, const DirichletCharacter& y) {
              return x.exponents < y.exponents;
            });

  MinusReport rep;
  rep.field = field;
  rep.unit_index = 1;  // prime-power conductor: cyclotomic units meet the full unit index

  // zeta_{p^j} lies in the field exactly when the unique subfield of degree
  // phi(p^j) does, i.e. when phi(p^j) divides the degree; -1 is always there
  const Int& p = fac[0].first;
  rep.w = 2;
  Int pj = 1;
  for (int j = 1; j <= fac[0].second; ++j) {
    pj *= p;
    if (Int(field.d) % euler_phi(pj) == 0) rep.w = 2 * pj;
  }

  for (const auto& chi : odd)
    rep.bernoulli_factors.push_back(Rat(-1, 2) * bernoulli_b1(primitive_character(chi)));

  // no single factor is rational, but the odd characters are stable under
  // every Galois twist, so the full product is
  CycloRational prod{Rat(1)};
  for (const auto& b : rep.bernoulli_factors) prod = prod * b;
  Rat total = prod.rational_value();

  total *= rep.w;
  if (total.get_den() != 1)
    throw certification_error("minus_class_number: product is not an integer");
  rep.h_minus = total.get_num();
  if (rep.h_minus <= 0) throw std::logic_error("minus_class_number: nonpositive result");
  return rep;
}

} // namespace cyclolab
