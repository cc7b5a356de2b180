#ifndef CYCLOLAB_TOWERS_HPP
#define CYCLOLAB_TOWERS_HPP

#include "cyclolab/integers.hpp"

namespace cyclolab {

/* Lower bound on the p-rank of a relative class group from counting ramified
 * places against a unit-index rank: ramified_count - unit_rank_bound - 1,
 * clamped at zero.  No field arithmetic happens here; callers supply counts. */
struct RankBound {
  Int p;
  Int ramified_count;
  Int unit_rank_bound;
  Int lower_bound;
};
RankBound jehne_bound(const Int& p, const Int& ramified_count, const Int& unit_rank_bound);

/* Infinite-tower criterion rank_r >= 2 + 2 sqrt(unit_rank + 1).  The verdict
 * is decided in integer arithmetic by squaring; threshold is informational. */
struct TowerVerdict {
  Int rank_r;
  Int unit_rank;
  double threshold;
  bool infinite;
};
TowerVerdict golod_shafarevich(const Int& rank_r, const Int& unit_rank);

/* Tower verdict for the real quadratic field of prime discriminant
 * p = 5 (mod 8): infinite class field tower once h >= 15.  The criterion
 * evaluation golod_shafarevich(h - 1, 2h) is carried alongside and must
 * agree (h is odd for these p, so both cut at 15). */
struct C2Verdict {
  Int p;
  Int h;
  TowerVerdict gs;
  bool infinite;
};
C2Verdict corollary_c2_check(const Int& p);

/* Tower verdict for Q(sqrt(pq)) with p, q distinct primes = 1 (mod 4):
 * infinite once the fundamental unit has norm +1 and h >= 6.  The criterion
 * is stated for pq = 5 (mod 8); other inputs are still evaluated and the
 * hypothesis status is reported in congruence_ok.  A positive unit norm
 * forces h even, which is checked and reported. */
struct PQVerdict {
  Int p, q;
  Int m;
  bool congruence_ok;
  Int h;
  int unit_norm;
  bool h_even;
  bool infinite;
};
PQVerdict corollary_pq_check(const Int& p, const Int& q);

/* Parameters for conductor-pqr abelian fields with large ell-class rank:
 * p = q = 1 (mod ell) and n is the largest odd divisor of r - 1 such that
 * p^((r-1)/n) = q^((r-1)/n) = 1 (mod r).  The implied bound is
 * rank >= n - 1; the relative record carries the ramification count 2n
 * against unit rank n - 1, whose raw bound is n. */
struct OzakiParameters {
  Int ell;
  Int p, q, r;
  Int n;
  Int rank_lower_bound;
  RankBound relative;
};

struct OzakiLimits {
  Int r_max = 1000;
  Int pq_max = 10000;
};

/* First triple in scan order (r ascending over odd primes, then p, then q
 * ascending over primes = 1 mod ell, all three distinct) with n >= n_target.
 * Throws resource_error when the limits are exhausted. */
OzakiParameters ozaki_search(const Int& ell, const Int& n_target,
                             const OzakiLimits& limits = {});

/* Guaranteed 2-rank n - 1 of the class group of a CM field with an
 * unramified degree-n relative extension, via the ramification count. */
Int morishima_bound(const Int& n);

} // namespace cyclolab

#endif
