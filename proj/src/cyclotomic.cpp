#include "cyclolab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "cyclolab/errors.hpp"

namespace cyclolab {

namespace {

// exact division in Z[x] by a monic divisor; remainder must vanish
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  long dn = long(num.size()) - 1, dd = long(den.size()) - 1;
  std::vector<Int> quot(dn - dd + 1);
  for (long d = dn; d >= dd; --d) {
    Int c = num[d];
    if (c == 0) continue;
    quot[d - dd] = c;
    for (long j = 0; j <= dd; ++j) num[d - dd + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("cyclotomic: division left a remainder");
  return quot;
}

std::map<long, std::vector<Int>> cyclo_cache;
std::mutex cyclo_mutex;

std::vector<Int> cyclo_unlocked(long m) {
  auto it = cyclo_cache.find(m);
  if (it != cyclo_cache.end()) return it->second;
  std::vector<Int> poly;
  if (m == 1) {
    poly = {Int(-1), Int(1)};
  } else {
    poly.assign(m + 1, Int(0));
    poly[0] = -1;
    poly[m] = 1;
    for (long d = 1; d < m; ++d)
      if (m % d == 0) poly = poly_div_exact(std::move(poly), cyclo_unlocked(d));
  }
  cyclo_cache.emplace(m, poly);
  return poly;
}

// long division by the monic cyclotomic polynomial, in place
void reduce_mod_cyclo(std::vector<Rat>& p, const std::vector<Int>& cyclo) {
  long phi = long(cyclo.size()) - 1;
  for (long d = long(p.size()) - 1; d >= phi; --d) {
    if (p[d] == 0) continue;
    Rat c = p[d];
    for (long j = 0; j <= phi; ++j) p[d - phi + j] -= c * Rat(cyclo[j]);
  }
  p.resize(phi);
}

} // namespace

std::vector<Int> cyclotomic_polynomial(long m) {
  if (m < 1) throw argument_error("cyclotomic_polynomial: m must be positive");
  std::lock_guard<std::mutex> lock(cyclo_mutex);
  return cyclo_unlocked(m);
}

CycloRational CycloRational::zeta_power(long m, long k) {
  if (m < 1) throw argument_error("zeta_power: level must be positive");
  k %= m;
  if (k < 0) k += m;
  auto cyclo = cyclotomic_polynomial(m);
  std::vector<Rat> p(k + 1, Rat(0));
  p[k] = 1;
  reduce_mod_cyclo(p, cyclo);
  return CycloRational(m, std::move(p));
}

CycloRational CycloRational::from_polynomial(long m, std::vector<Rat> coeffs) {
  if (m < 1) throw argument_error("from_polynomial: level must be positive");
  auto cyclo = cyclotomic_polynomial(m);
  coeffs.resize(std::max(coeffs.size(), cyclo.size() - 1), Rat(0));
  reduce_mod_cyclo(coeffs, cyclo);
  return CycloRational(m, std::move(coeffs));
}

bool CycloRational::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat CycloRational::rational_value() const {
  if (!is_rational())
    throw certification_error("rational_value: element has irrational coordinates");
  return coeffs_[0];
}

CycloRational CycloRational::lifted(long M) const {
  if (M % level_ != 0) throw argument_error("lifted: target level not a multiple");
  if (M == level_) return *this;
  long step = M / level_;  // zeta_m = zeta_M^step
  auto cyclo = cyclotomic_polynomial(M);
  std::vector<Rat> p((coeffs_.size() - 1) * step + 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  reduce_mod_cyclo(p, cyclo);
  return CycloRational(M, std::move(p));
}

CycloRational CycloRational::conjugate(long a) const {
  a %= level_;
  if (a < 0) a += level_;
  if (std::gcd(a, level_) != 1)
    throw argument_error("conjugate: exponent shares a factor with the level");
  auto cyclo = cyclotomic_polynomial(level_);
  std::vector<Rat> p(level_, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    p[(i * a) % level_] += coeffs_[i];
  reduce_mod_cyclo(p, cyclo);
  return CycloRational(level_, std::move(p));
}

CycloRational CycloRational::operator-() const {
  CycloRational out = *this;
  for (Rat& c : out.coeffs_) c = -c;
  return out;
}

CycloRational operator+(const CycloRational& x, const CycloRational& y) {
  long M = std::lcm(x.level_, y.level_);
  CycloRational a = x.lifted(M), b = y.lifted(M);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

CycloRational operator-(const CycloRational& x, const CycloRational& y) {
  return x + (-y);
}

CycloRational operator*(const CycloRational& x, const CycloRational& y) {
  long M = std::lcm(x.level_, y.level_);
  CycloRational a = x.lifted(M), b = y.lifted(M);
  std::vector<Rat> p(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  reduce_mod_cyclo(p, cyclotomic_polynomial(M));
  return CycloRational(M, std::move(p));
}

bool operator==(const CycloRational& x, const CycloRational& y) {
  long M = std::lcm(x.level_, y.level_);
  return x.lifted(M).coeffs_ == y.lifted(M).coeffs_;
}

} // namespace cyclolab
