#ifndef CYCLOLAB_SWEEPS_HPP
#define CYCLOLAB_SWEEPS_HPP

#include <vector>

#include "cyclolab/bqf.hpp"
#include "cyclolab/genus.hpp"
#include "cyclolab/integers.hpp"

namespace cyclolab {

/* Scan suites over ranges of discriminants, prime pairs, and conic triples.
 * Each sweep enumerates its items up front in a fixed order, runs one pure
 * kernel per item, and writes results by item index, so the report is
 * identical for every worker count.  jobs = 1 is the serial reference path;
 * jobs > 1 dispatches the same kernels across OpenMP workers. */

/* Field reports for every fundamental discriminant in [lo, hi]. */
struct QuadRangeSweep {
  Int lo, hi;
  std::vector<QuadFieldReport> rows;
};
QuadRangeSweep quad_range(const Int& lo, const Int& hi, long jobs = 1);

/* Two independent routes to the class number of Q(sqrt(-p)) for every prime
 * p = 3 (mod 4) with 3 < p < bound: reduced-form counting for discriminant
 * -p against the Bernoulli route through the odd character of the quadratic
 * subfield of the p-th cyclotomic field. */
struct MinusQuadraticRow {
  long p = 0;
  Int h_forms;
  Int h_minus;
  bool match = false;
};
struct MinusQuadraticSweep {
  long bound = 0;
  std::vector<MinusQuadraticRow> rows;
  long mismatches = 0;
  bool pass = false;
};
MinusQuadraticSweep minus_quadratic(long bound, long jobs = 1);

/* Quartic-symbol laws against the 2-part of the class numbers of pq, over
 * every pair of primes p < q < bound, both 1 (mod 4).  On each pair the
 * quadratic criterion (p/q) = 1 must match 4 | h+; when (p/q) = 1 the
 * symbol equality (p/q)_4 = (q/p)_4 must match 4 | h and the all-positive
 * pattern must match 8 | h+.  Symbols are 0 on rows they do not apply to. */
struct ScholzRow {
  long p = 0, q = 0;
  int legendre_pq = 0;
  int quartic_pq = 0, quartic_qp = 0;
  Int h;
  Int h_plus;
  bool c4_ok = false, wide_ok = false, eight_ok = false;
};
struct ScholzSweep {
  long bound = 0;
  std::vector<ScholzRow> rows;
  long exceptions = 0;
  bool pass = false;
};
ScholzSweep scholz_pairs(long bound, long jobs = 1);

/* The first `count` triples (p, q, q2) in lexicographic order with p, q, q2
 * prime below bound, p = 1 and q < q2 both 3 (mod 4), and p a quadratic
 * residue of both q and q2.  Both conics x^2 - p y^2 = -q z^2
 * are solved; each solution has negative norm, hence mixed embedding signs,
 * and the product of the two solutions must come out sign-definite.  The
 * parity engine must emit its divisibility claim on the same premises. */
struct ConicTripleRow {
  long p = 0, q = 0, q2 = 0;
  ConicSolution alpha_q, alpha_q2;
  int product_sign = 0;
  bool definite = false;
  bool predicted = false;
};
struct ConicSweep {
  long bound = 0;
  long count = 0;
  std::vector<ConicTripleRow> rows;
  bool pass = false;
};
ConicSweep conic_triples(long bound, long count, long jobs = 1);

/* Tower verdicts for every prime p = 5 (mod 8) in [lo, hi]: class number of
 * the real quadratic field and the infinite-tower cut at h >= 15. */
struct TowerScanRow {
  long p = 0;
  Int h;
  bool infinite = false;
};
struct TowerScan {
  long lo = 0, hi = 0;
  std::vector<TowerScanRow> rows;
  long infinite_count = 0;
};
TowerScan c2_scan(long lo, long hi, long jobs = 1);

} // namespace cyclolab

#endif
