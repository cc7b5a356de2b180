#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclolab/bqf.hpp"
#include "cyclolab/errors.hpp"
#include "cyclolab/towers.hpp"

using namespace cyclolab;

TEST_CASE("ramification counting bound") {
  CHECK(jehne_bound(Int(2), Int(5), Int(2)).lower_bound == 2);
  CHECK(jehne_bound(Int(3), Int(6), Int(2)).lower_bound == 3);
  CHECK(jehne_bound(Int(2), Int(0), Int(0)).lower_bound == 0);  // raw -1 clamps
  CHECK(jehne_bound(Int(2), Int(1), Int(4)).lower_bound == 0);

  for (long ram = 0; ram <= 8; ++ram)
    for (long unit = 0; unit <= 8; ++unit) {
      long raw = ram - unit - 1;
      CHECK(jehne_bound(Int(5), Int(ram), Int(unit)).lower_bound == (raw > 0 ? raw : 0));
    }

  CHECK_THROWS_AS(jehne_bound(Int(4), Int(1), Int(0)), argument_error);
  CHECK_THROWS_AS(jehne_bound(Int(2), Int(-1), Int(0)), argument_error);
}

TEST_CASE("tower criterion is exact at the boundary") {
  CHECK(golod_shafarevich(Int(14), Int(30)).infinite);
  CHECK(!golod_shafarevich(Int(13), Int(30)).infinite);  // 13 < 2 + 2 sqrt(31)
  CHECK(!golod_shafarevich(Int(4), Int(3)).infinite);
  CHECK(golod_shafarevich(Int(6), Int(3)).infinite);  // (6-2)^2 = 16 = 4 * 4 exactly
  CHECK(golod_shafarevich(Int(4), Int(0)).infinite);  // 4 = 2 + 2 sqrt(1) exactly
  CHECK(!golod_shafarevich(Int(1), Int(0)).infinite);
  CHECK(!golod_shafarevich(Int(0), Int(0)).infinite);

  TowerVerdict v = golod_shafarevich(Int(14), Int(30));
  CHECK(v.threshold == doctest::Approx(13.1355).epsilon(1e-3));
  CHECK_THROWS_AS(golod_shafarevich(Int(-1), Int(0)), argument_error);

  // raising the rank never loses the verdict; raising the unit rank never gains it
  for (long r = 0; r <= 14; ++r)
    for (long u = 0; u <= 14; ++u) {
      if (golod_shafarevich(Int(r), Int(u)).infinite)
        CHECK(golod_shafarevich(Int(r + 1), Int(u)).infinite);
      if (golod_shafarevich(Int(r), Int(u + 1)).infinite)
        CHECK(golod_shafarevich(Int(r), Int(u)).infinite);
    }
}

TEST_CASE("prime discriminant tower verdict") {
  C2Verdict big = corollary_c2_check(Int(13693));
  CHECK(big.h == 15);
  CHECK(big.infinite);
  CHECK(big.gs.rank_r == 14);
  CHECK(big.gs.unit_rank == 30);
  CHECK(big.gs.infinite);

  CHECK(!corollary_c2_check(Int(5)).infinite);
  CHECK(corollary_c2_check(Int(5)).h == 1);
  CHECK(!corollary_c2_check(Int(13)).infinite);
  CHECK(!corollary_c2_check(Int(37)).infinite);

  CHECK_THROWS_AS(corollary_c2_check(Int(17)), argument_error);  // 1 mod 8
  CHECK_THROWS_AS(corollary_c2_check(Int(21)), argument_error);
  CHECK_THROWS_AS(corollary_c2_check(Int(7)), argument_error);
}

TEST_CASE("13693 is the least prime meeting the threshold") {
  Int first = 0;
  for (long p : primes_below(13694)) {
    if (p % 8 != 5) continue;
    if (class_number(Int(p)) >= 15) {
      first = p;
      break;
    }
  }
  CHECK(first == 13693);
}

TEST_CASE("composite discriminant tower verdict") {
  PQVerdict yes = corollary_pq_check(Int(29), Int(257));
  CHECK(yes.m == 7453);
  CHECK(yes.congruence_ok);
  CHECK(yes.h == 6);
  CHECK(yes.unit_norm == 1);
  CHECK(yes.h_even);
  CHECK(yes.infinite);
  CHECK(corollary_pq_check(Int(257), Int(29)).infinite);

  // 1765 = 5 * 353 has h = 6 but a norm -1 unit (42^2 - 1765 = -1), so the
  // positive-norm hypothesis fails and no verdict of infinitude is available
  PQVerdict no = corollary_pq_check(Int(5), Int(353));
  CHECK(no.congruence_ok);
  CHECK(no.h == 6);
  CHECK(no.unit_norm == -1);
  CHECK(!no.infinite);

  PQVerdict small = corollary_pq_check(Int(5), Int(13));
  CHECK(!small.congruence_ok);  // 65 = 1 (mod 8)
  CHECK(small.h == 2);
  CHECK(small.unit_norm == -1);
  CHECK(!small.infinite);

  PQVerdict tiny = corollary_pq_check(Int(13), Int(17));
  CHECK(tiny.congruence_ok);
  CHECK(tiny.h == 2);
  CHECK(tiny.unit_norm == 1);
  CHECK(!tiny.infinite);

  CHECK_THROWS_AS(corollary_pq_check(Int(5), Int(5)), argument_error);
  CHECK_THROWS_AS(corollary_pq_check(Int(5), Int(7)), argument_error);
  CHECK_THROWS_AS(corollary_pq_check(Int(5), Int(15)), argument_error);
  CHECK_THROWS_AS(corollary_pq_check(Int(3), Int(13)), argument_error);

  for (long p : primes_below(150)) {
    if (p % 4 != 1) continue;
    for (long q : primes_below(150)) {
      if (q % 4 != 1 || q <= p) continue;
      PQVerdict v = corollary_pq_check(Int(p), Int(q));
      CHECK(v.congruence_ok == (mod_floor(v.m, 8) == 5));
      CHECK(v.h == class_number(v.m));
      CHECK(v.h_even == (v.h % 2 == 0));
      CHECK(v.infinite == (v.unit_norm == 1 && v.h >= 6));
      if (v.unit_norm == 1) CHECK(v.h_even);
    }
  }
}

TEST_CASE("parameter search for large relative rank") {
  OzakiParameters a = ozaki_search(Int(3), Int(1));
  CHECK(a.p == 7);
  CHECK(a.q == 13);
  CHECK(a.r == 3);
  CHECK(a.n == 1);
  CHECK(a.rank_lower_bound == 0);
  CHECK(a.relative.lower_bound == 1);

  OzakiParameters b = ozaki_search(Int(3), Int(3));
  CHECK(b.p == 13);
  CHECK(b.q == 43);
  CHECK(b.r == 7);
  CHECK(b.n == 3);
  CHECK(b.rank_lower_bound == 2);
  CHECK(b.relative.ramified_count == 6);
  CHECK(b.relative.unit_rank_bound == 2);
  CHECK(b.relative.lower_bound == 3);

  OzakiParameters c = ozaki_search(Int(3), Int(5));
  CHECK(c.p == 43);
  CHECK(c.q == 67);
  CHECK(c.r == 11);
  CHECK(c.n == 5);

  CHECK(ozaki_search(Int(5), Int(3)).r == 7);
  CHECK(ozaki_search(Int(5), Int(3)).p == 41);
  CHECK(ozaki_search(Int(7), Int(1)).p == 29);

  // every reported tuple re-verifies from scratch
  for (auto [ell, nt] : {std::pair<long, long>{3, 1}, {3, 3}, {3, 5}, {5, 3}, {7, 1}}) {
    OzakiParameters t = ozaki_search(Int(ell), Int(nt));
    CHECK(is_prime(t.p));
    CHECK(is_prime(t.q));
    CHECK(is_prime(t.r));
    CHECK(t.p % ell == 1);
    CHECK(t.q % ell == 1);
    CHECK(t.n % 2 == 1);
    CHECK((t.r - 1) % t.n == 0);
    CHECK(pow_mod(t.p, (t.r - 1) / t.n, t.r) == 1);
    CHECK(pow_mod(t.q, (t.r - 1) / t.n, t.r) == 1);
    for (Int d = t.n + 2; d <= t.r - 1; d += 2) {
      if ((t.r - 1) % d != 0) continue;
      bool works = pow_mod(t.p, (t.r - 1) / d, t.r) == 1 && pow_mod(t.q, (t.r - 1) / d, t.r) == 1;
      CHECK(!works);  // n is maximal among odd divisors
    }
  }

  CHECK_THROWS_AS(ozaki_search(Int(2), Int(1)), argument_error);
  CHECK_THROWS_AS(ozaki_search(Int(9), Int(1)), argument_error);
  CHECK_THROWS_AS(ozaki_search(Int(3), Int(0)), argument_error);
  CHECK_THROWS_AS(ozaki_search(Int(3), Int(50), OzakiLimits{Int(100), Int(100)}), resource_error);
  CHECK_THROWS_AS(ozaki_search(Int(3), Int(3), OzakiLimits{Int(7), Int(50)}), resource_error);
  CHECK(ozaki_search(Int(3), Int(3), OzakiLimits{Int(8), Int(50)}).r == 7);
}

TEST_CASE("guaranteed 2-rank from an unramified degree") {
  CHECK(morishima_bound(Int(3)) == 2);
  CHECK(morishima_bound(Int(1)) == 0);
  CHECK(morishima_bound(Int(15)) == 14);
  CHECK_THROWS_AS(morishima_bound(Int(0)), argument_error);
}
