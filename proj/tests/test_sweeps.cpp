#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclolab/errors.hpp"
#include "cyclolab/sweeps.hpp"

using namespace cyclolab;

TEST_CASE("forms and Bernoulli class numbers agree on the scan range") {
  MinusQuadraticSweep sweep = minus_quadratic(100);
  // textbook class numbers of Q(sqrt(-p))
  std::vector<std::pair<long, long>> want = {{7, 1},  {11, 1}, {19, 1}, {23, 3},
                                             {31, 3}, {43, 1}, {47, 5}, {59, 3},
                                             {67, 1}, {71, 7}, {79, 5}, {83, 3}};
  REQUIRE(sweep.rows.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) {
    CAPTURE(i);
    CHECK(sweep.rows[i].p == want[i].first);
    CHECK(sweep.rows[i].h_forms == want[i].second);
    CHECK(sweep.rows[i].h_minus == want[i].second);
    CHECK(sweep.rows[i].match);
  }
  CHECK(sweep.mismatches == 0);
  CHECK(sweep.pass);
}

TEST_CASE("quartic symbol laws hold on every pair below one hundred") {
  ScholzSweep sweep = scholz_pairs(100);
  CHECK(sweep.rows.size() == 55);
  CHECK(sweep.exceptions == 0);
  CHECK(sweep.pass);
  auto find = [&](long p, long q) -> const ScholzRow& {
    for (const auto& row : sweep.rows)
      if (row.p == p && row.q == q) return row;
    REQUIRE(false);
    return sweep.rows[0];
  };
  const ScholzRow& r513 = find(5, 13);
  CHECK(r513.legendre_pq == -1);
  CHECK(r513.quartic_pq == 0); // quartic laws void without (p/q) = 1
  CHECK(r513.h == 2);
  CHECK(r513.h_plus == 2);
  const ScholzRow& r529 = find(5, 29);
  CHECK(r529.legendre_pq == 1);
  CHECK(r529.quartic_pq == -1);
  CHECK(r529.quartic_qp == -1);
  CHECK(r529.h == 4); // symbols agree and 4 | h, yet 8 does not divide h+
  CHECK(r529.h_plus == 4);
  const ScholzRow& r7397 = find(73, 97);
  CHECK(r7397.quartic_pq == 1);
  CHECK(r7397.quartic_qp == -1);
  CHECK(r7397.h == 2);
  CHECK(r7397.h_plus == 4);
}

TEST_CASE("conic triple suite solves and signs twenty instances") {
  ConicSweep sweep = conic_triples(100, 20);
  REQUIRE(sweep.rows.size() == 20);
  CHECK(sweep.pass);
  for (const auto& row : sweep.rows) {
    CAPTURE(row.p);
    CAPTURE(row.q);
    CAPTURE(row.q2);
    // recheck both norms from scratch: x^2 - p y^2 = -q z^2
    Int p(row.p);
    CHECK(row.alpha_q.x * row.alpha_q.x - p * row.alpha_q.y * row.alpha_q.y ==
          -Int(row.q) * row.alpha_q.z * row.alpha_q.z);
    CHECK(row.alpha_q2.x * row.alpha_q2.x - p * row.alpha_q2.y * row.alpha_q2.y ==
          -Int(row.q2) * row.alpha_q2.z * row.alpha_q2.z);
    CHECK(row.definite);
    // both solutions are nonnegative combinations, so the product is totally positive
    CHECK(row.product_sign == 1);
    CHECK(row.predicted);
  }
  // first and last triples in lexicographic order, solutions checked by hand
  CHECK(sweep.rows[0].p == 5);
  CHECK(sweep.rows[0].q == 11);
  CHECK(sweep.rows[0].q2 == 19);
  CHECK(sweep.rows[0].alpha_q.x == 3);
  CHECK(sweep.rows[0].alpha_q.y == 2);
  CHECK(sweep.rows[0].alpha_q.z == 1);
  CHECK(sweep.rows[0].alpha_q2.x == 1);
  CHECK(sweep.rows[0].alpha_q2.y == 2);
  CHECK(sweep.rows[0].alpha_q2.z == 1);
  CHECK(sweep.rows[15].p == 13);
  CHECK(sweep.rows[15].q == 3);
  CHECK(sweep.rows[15].alpha_q.x == 7);
  CHECK(sweep.rows[15].alpha_q.y == 2);
  CHECK(sweep.rows[19].p == 13);
  CHECK(sweep.rows[19].q == 23);
  CHECK(sweep.rows[19].q2 == 79);
  CHECK(sweep.rows[19].alpha_q.x == 43);
  CHECK(sweep.rows[19].alpha_q.y == 12);
  CHECK(sweep.rows[19].alpha_q2.x == 57);
  CHECK(sweep.rows[19].alpha_q2.y == 16);
}

TEST_CASE("tower scan flags nothing below five hundred") {
  TowerScan scan = c2_scan(5, 500);
  CHECK(scan.rows.size() == 24);
  CHECK(scan.infinite_count == 0);
  for (const auto& row : scan.rows) {
    CAPTURE(row.p);
    CHECK(row.p % 8 == 5);
    CHECK(is_prime(Int(row.p)));
    CHECK(row.h % 2 == 1); // prime discriminant forces odd h
    CHECK(!row.infinite);
  }
  auto h_of = [&](long p) {
    for (const auto& row : scan.rows)
      if (row.p == p) return row.h;
    return Int(-1);
  };
  CHECK(h_of(13) == 1);
  CHECK(h_of(229) == 3);
}

TEST_CASE("field reports stream over a discriminant window") {
  QuadRangeSweep sweep = quad_range(Int(-30), Int(30));
  std::vector<long> want = {-24, -23, -20, -19, -15, -11, -8, -7, -4, -3,
                            5,   8,   12,  13,  17,  21,  24, 28, 29};
  REQUIRE(sweep.rows.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) {
    const QuadFieldReport& row = sweep.rows[i];
    CAPTURE(i);
    CHECK(row.D == want[i]);
    if (row.D < 0) {
      CHECK(!row.unit.has_value());
      CHECK(row.h_plus == row.h);
    } else {
      REQUIRE(row.unit.has_value());
      // narrow equals wide exactly when the unit has norm -1
      CHECK(row.h_plus == (row.unit->norm == -1 ? row.h : 2 * row.h));
    }
  }
  auto report = [&](long d) -> const QuadFieldReport& {
    for (const auto& row : sweep.rows)
      if (row.D == d) return row;
    REQUIRE(false);
    return sweep.rows[0];
  };
  CHECK(report(-23).h == 3);
  CHECK(report(8).h == 1);
  CHECK(report(8).unit->norm == -1);
  CHECK(report(29).h == 1);
  CHECK(report(29).unit->norm == -1);
}

TEST_CASE("worker count does not change any sweep") {
  MinusQuadraticSweep m1 = minus_quadratic(60, 1), m3 = minus_quadratic(60, 3);
  REQUIRE(m1.rows.size() == m3.rows.size());
  for (size_t i = 0; i < m1.rows.size(); ++i) {
    CHECK(m1.rows[i].p == m3.rows[i].p);
    CHECK(m1.rows[i].h_forms == m3.rows[i].h_forms);
    CHECK(m1.rows[i].h_minus == m3.rows[i].h_minus);
    CHECK(m1.rows[i].match == m3.rows[i].match);
  }
  CHECK(m1.pass == m3.pass);

  ScholzSweep s1 = scholz_pairs(60, 1), s3 = scholz_pairs(60, 3);
  REQUIRE(s1.rows.size() == s3.rows.size());
  for (size_t i = 0; i < s1.rows.size(); ++i) {
    CHECK(s1.rows[i].p == s3.rows[i].p);
    CHECK(s1.rows[i].q == s3.rows[i].q);
    CHECK(s1.rows[i].legendre_pq == s3.rows[i].legendre_pq);
    CHECK(s1.rows[i].quartic_pq == s3.rows[i].quartic_pq);
    CHECK(s1.rows[i].quartic_qp == s3.rows[i].quartic_qp);
    CHECK(s1.rows[i].h == s3.rows[i].h);
    CHECK(s1.rows[i].h_plus == s3.rows[i].h_plus);
  }
  CHECK(s1.exceptions == s3.exceptions);

  ConicSweep c1 = conic_triples(100, 20, 1), c3 = conic_triples(100, 20, 3);
  REQUIRE(c1.rows.size() == c3.rows.size());
  for (size_t i = 0; i < c1.rows.size(); ++i) {
    CHECK(c1.rows[i].p == c3.rows[i].p);
    CHECK(c1.rows[i].q == c3.rows[i].q);
    CHECK(c1.rows[i].q2 == c3.rows[i].q2);
    CHECK(c1.rows[i].alpha_q.x == c3.rows[i].alpha_q.x);
    CHECK(c1.rows[i].alpha_q.y == c3.rows[i].alpha_q.y);
    CHECK(c1.rows[i].alpha_q.z == c3.rows[i].alpha_q.z);
    CHECK(c1.rows[i].alpha_q2.x == c3.rows[i].alpha_q2.x);
    CHECK(c1.rows[i].product_sign == c3.rows[i].product_sign);
  }

  TowerScan t1 = c2_scan(5, 300, 1), t3 = c2_scan(5, 300, 3);
  REQUIRE(t1.rows.size() == t3.rows.size());
  for (size_t i = 0; i < t1.rows.size(); ++i) {
    CHECK(t1.rows[i].p == t3.rows[i].p);
    CHECK(t1.rows[i].h == t3.rows[i].h);
    CHECK(t1.rows[i].infinite == t3.rows[i].infinite);
  }

  QuadRangeSweep q1 = quad_range(Int(-30), Int(30), 1), q3 = quad_range(Int(-30), Int(30), 3);
  REQUIRE(q1.rows.size() == q3.rows.size());
  for (size_t i = 0; i < q1.rows.size(); ++i) {
    CHECK(q1.rows[i].D == q3.rows[i].D);
    CHECK(q1.rows[i].h == q3.rows[i].h);
    CHECK(q1.rows[i].h_plus == q3.rows[i].h_plus);
    CHECK(q1.rows[i].class_group == q3.rows[i].class_group);
  }
}

TEST_CASE("sweep arguments are validated") {
  CHECK_THROWS_AS(quad_range(Int(5), Int(4)), argument_error);
  CHECK_THROWS_AS(quad_range(Int(0), Int(200001)), unsupported_error);
  CHECK_THROWS_AS(minus_quadratic(0), argument_error);
  CHECK_THROWS_AS(minus_quadratic(5001), unsupported_error);
  CHECK_THROWS_AS(minus_quadratic(100, 0), argument_error);
  CHECK_THROWS_AS(minus_quadratic(100, 257), argument_error);
  CHECK_THROWS_AS(scholz_pairs(0), argument_error);
  CHECK_THROWS_AS(scholz_pairs(2001), unsupported_error);
  CHECK_THROWS_AS(conic_triples(0, 20), argument_error);
  CHECK_THROWS_AS(conic_triples(100, 0), argument_error);
  CHECK_THROWS_AS(conic_triples(100, 1001), unsupported_error);
  // below twenty only (5, 11, 19) qualifies
  CHECK_THROWS_AS(conic_triples(20, 20), resource_error);
  CHECK(conic_triples(20, 1).rows.size() == 1);
  CHECK_THROWS_AS(c2_scan(10, 5), argument_error);
  CHECK_THROWS_AS(c2_scan(0, 2000000), unsupported_error);
}
