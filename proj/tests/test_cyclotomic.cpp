#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "cyclolab/cyclotomic.hpp"
#include "cyclolab/errors.hpp"

using namespace cyclolab;

namespace {

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomial pins") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{Int(-1), Int(1)});
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{Int(1), Int(1)});
  CHECK(cyclotomic_polynomial(3) == std::vector<Int>{Int(1), Int(1), Int(1)});
  CHECK(cyclotomic_polynomial(4) == std::vector<Int>{Int(1), Int(0), Int(1)});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{Int(1), Int(-1), Int(1)});
  CHECK(cyclotomic_polynomial(8) == std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(1)});
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{Int(1), Int(0), Int(-1), Int(0), Int(1)});
  CHECK_THROWS_AS(cyclotomic_polynomial(0), argument_error);

  // first level where a coefficient other than 0, +-1 appears
  CHECK(cyclotomic_polynomial(105)[7] == -2);

  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    auto c = cyclotomic_polynomial(p);
    CHECK(c.size() == size_t(p));
    for (const Int& v : c) CHECK(v == 1);
  }

  for (long m = 1; m <= 200; ++m) {
    auto c = cyclotomic_polynomial(m);
    CHECK(Int(long(c.size()) - 1) == euler_phi(Int(m)));
    CHECK(c.back() == 1);
  }

  // the levels dividing m recombine into x^m - 1
  for (long m = 1; m <= 60; ++m) {
    std::vector<Int> prod{Int(1)};
    for (long d = 1; d <= m; ++d)
      if (m % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    REQUIRE(prod.size() == size_t(m + 1));
    CHECK(prod[0] == -1);
    CHECK(prod[m] == 1);
    for (long i = 1; i < m; ++i) CHECK(prod[i] == 0);
  }
}

TEST_CASE("root of unity arithmetic is exact") {
  CycloRational z3 = CycloRational::zeta(3);
  CHECK(z3 * z3 + z3 + CycloRational(1) == CycloRational(0));

  CycloRational z4 = CycloRational::zeta(4);
  CHECK(z4 * z4 == CycloRational(-1));
  CHECK((z4 * z4).is_rational());
  CHECK((z4 * z4).rational_value() == -1);

  // zeta_6 = -zeta_3^2 across levels
  CHECK(CycloRational::zeta(6) == -(z3 * z3));
  CHECK(CycloRational::zeta_power(10, 5) == CycloRational(-1));
  CHECK(CycloRational::zeta_power(12, 4) == z3);
  CHECK(CycloRational::zeta(2) == CycloRational(-1));

  CycloRational z5 = CycloRational::zeta(5);
  CycloRational pow = CycloRational(1), sum = CycloRational(0);
  for (int k = 0; k < 5; ++k) {
    sum = sum + pow;
    pow = pow * z5;
  }
  CHECK(pow == CycloRational(1));  // zeta_5^5
  CHECK(sum == CycloRational(0));
  CHECK(!z5.is_rational());
  CHECK_THROWS_AS(z5.rational_value(), certification_error);

  // (zeta_8 + zeta_8^-1)^2 = 2
  CycloRational rt2 = CycloRational::zeta(8) + CycloRational::zeta_power(8, 7);
  CHECK((rt2 * rt2).rational_value() == 2);

  CHECK(Rat(1, 2) * z3 + Rat(1, 2) * z3 == z3);
  CHECK(z3 - z3 == CycloRational(0));
}

TEST_CASE("galois conjugation permutes roots and fixes rationals") {
  CycloRational z5 = CycloRational::zeta(5);
  CHECK(z5.conjugate(2) == z5 * z5);
  CHECK(z5.conjugate(7) == z5 * z5);  // exponent taken mod the level
  CHECK_THROWS_AS(z5.conjugate(5), argument_error);
  CHECK_THROWS_AS(CycloRational::zeta(6).conjugate(3), argument_error);

  CycloRational x = CycloRational::zeta(7) + Rat(3) * CycloRational::zeta_power(7, 3);
  CycloRational y = CycloRational::zeta_power(7, 2) - CycloRational(2);
  for (long a : {2L, 3L, 6L}) {
    CHECK((x + y).conjugate(a) == x.conjugate(a) + y.conjugate(a));
    CHECK((x * y).conjugate(a) == x.conjugate(a) * y.conjugate(a));
  }
  CHECK(CycloRational(Rat(22, 7)).conjugate(1) == CycloRational(Rat(22, 7)));

  // trace of zeta_7^k is -1, so trace(x) = -4
  CycloRational trace = CycloRational(0);
  for (long a = 1; a < 7; ++a) trace = trace + x.conjugate(a);
  CHECK(trace.rational_value() == -4);

  // norm of 1 - zeta_5 is Phi_5(1) = 5
  CycloRational norm = CycloRational(1);
  for (long a = 1; a < 5; ++a)
    norm = norm * (CycloRational(1) - z5).conjugate(a);
  CHECK(norm.rational_value() == 5);
}
