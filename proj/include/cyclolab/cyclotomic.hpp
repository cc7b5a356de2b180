#ifndef CYCLOLAB_CYCLOTOMIC_HPP
#define CYCLOLAB_CYCLOTOMIC_HPP

#include <vector>

#include "cyclolab/integers.hpp"

namespace cyclolab {

/* Coefficients of the m-th cyclotomic polynomial, ascending degree.
 * Monic of degree phi(m); computed by dividing x^m - 1 by the lower
 * levels and cached. */
std::vector<Int> cyclotomic_polynomial(long m);

/* Exact element of Q(zeta_m): a polynomial in zeta_m reduced modulo the
 * m-th cyclotomic polynomial, so coefficients 0..phi(m)-1 are coordinates
 * in a Q-basis.  Mixed-level arithmetic lifts both sides to the lcm. */
class CycloRational {
public:
  CycloRational() : CycloRational(Rat(0)) {}
  explicit CycloRational(const Rat& r) : level_(1), coeffs_{r} {}
  explicit CycloRational(long n) : CycloRational(Rat(n)) {}

  static CycloRational zeta(long m) { return zeta_power(m, 1); }
  static CycloRational zeta_power(long m, long k);

  /* Polynomial in zeta_m (ascending coefficients, any degree), reduced. */
  static CycloRational from_polynomial(long m, std::vector<Rat> coeffs);

  long level() const { return level_; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }

  /* Basis coordinates vanish above degree zero exactly for rationals. */
  bool is_rational() const;
  Rat rational_value() const;  // certification_error unless is_rational

  /* Same element expressed in Q(zeta_M); level must divide M. */
  CycloRational lifted(long M) const;

  /* zeta -> zeta^a for gcd(a, level) = 1. */
  CycloRational conjugate(long a) const;

  CycloRational operator-() const;
  friend CycloRational operator+(const CycloRational& x, const CycloRational& y);
  friend CycloRational operator-(const CycloRational& x, const CycloRational& y);
  friend CycloRational operator*(const CycloRational& x, const CycloRational& y);
  friend bool operator==(const CycloRational& x, const CycloRational& y);

private:
  CycloRational(long level, std::vector<Rat> coeffs)
      : level_(level), coeffs_(std::move(coeffs)) {}

  long level_;
  std::vector<Rat> coeffs_;
};

inline CycloRational operator*(const Rat& c, const CycloRational& x) {
  return CycloRational(c) * x;
}

} // namespace cyclolab

#endif
