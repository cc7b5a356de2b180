#include "cyclolab/sweeps.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <utility>

#include "cyclolab/characters.hpp"
#include "cyclolab/errors.hpp"
#include "cyclolab/minusclass.hpp"
#include "cyclolab/predict.hpp"
#include "cyclolab/symbols.hpp"
#include "cyclolab/towers.hpp"

namespace cyclolab {

namespace {

void check_jobs(long jobs) {
  if (jobs < 1 || jobs > 256) throw argument_error("sweep: jobs out of range");
}

/* Runs kernel(0..n-1); jobs = 1 is the plain serial loop.  The parallel path
 * parks exceptions per item and rethrows the lowest-index one, so both paths
 * fail identically. */
template <class Kernel>
void run_items(long n, long jobs, Kernel&& kernel) {
  if (jobs <= 1) {
    for (long i = 0; i < n; ++i) kernel(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(static_cast<int>(jobs))
#endif
  for (long i = 0; i < n; ++i) {
    try {
      kernel(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<long> primes_in(long lo, long hi, long residue, long mod) {
  std::vector<long> out;
  for (long p = lo; p < hi; ++p)
    if (p % mod == residue && is_prime(Int(p))) out.push_back(p);
  return out;
}

} // namespace

QuadRangeSweep quad_range(const Int& lo, const Int& hi, long jobs) {
  check_jobs(jobs);
  if (lo > hi) throw argument_error("quad_range: empty range");
  if (hi - lo > 100000) throw unsupported_error("quad_range: range wider than 100000");
  QuadRangeSweep sweep;
  sweep.lo = lo;
  sweep.hi = hi;
  std::vector<Int> ds;
  for (Int d = lo; d <= hi; ++d)
    if (is_fundamental_discriminant(d)) ds.push_back(d);
  sweep.rows.resize(ds.size());
  run_items(static_cast<long>(ds.size()), jobs, [&](long i) {
    sweep.rows[static_cast<std::size_t>(i)] = quad_report(ds[static_cast<std::size_t>(i)]);
  });
  return sweep;
}

MinusQuadraticSweep minus_quadratic(long bound, long jobs) {
  check_jobs(jobs);
  if (bound < 1) throw argument_error("minus_quadratic: bound must be positive");
  if (bound > 5000) throw unsupported_error("minus_quadratic: bound capped at 5000");
  MinusQuadraticSweep sweep;
  sweep.bound = bound;
  std::vector<long> ps = primes_in(5, bound, 3, 4);
  sweep.rows.resize(ps.size());
  run_items(static_cast<long>(ps.size()), jobs, [&](long i) {
    MinusQuadraticRow& row = sweep.rows[static_cast<std::size_t>(i)];
    row.p = ps[static_cast<std::size_t>(i)];
    row.h_forms = class_number(Int(-row.p));
    row.h_minus = minus_class_number(characters_of_subfield(Int(row.p), 2)).h_minus;
    row.match = row.h_forms == row.h_minus;
  });
  for (const auto& row : sweep.rows)
    if (!row.match) ++sweep.mismatches;
  sweep.pass = sweep.mismatches == 0;
  return sweep;
}

ScholzSweep scholz_pairs(long bound, long jobs) {
  check_jobs(jobs);
  if (bound < 1) throw argument_error("scholz_pairs: bound must be positive");
  if (bound > 2000) throw unsupported_error("scholz_pairs: bound capped at 2000");
  ScholzSweep sweep;
  sweep.bound = bound;
  std::vector<long> ps = primes_in(5, bound, 1, 4);
  std::vector<std::pair<long, long>> pairs;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) pairs.emplace_back(ps[i], ps[j]);
  sweep.rows.resize(pairs.size());
  run_items(static_cast<long>(pairs.size()), jobs, [&](long i) {
    ScholzRow& row = sweep.rows[static_cast<std::size_t>(i)];
    row.p = pairs[static_cast<std::size_t>(i)].first;
    row.q = pairs[static_cast<std::size_t>(i)].second;
    Int p(row.p), q(row.q), d = p * q;
    row.legendre_pq = legendre(p, q);
    row.h = class_number(d);
    row.h_plus = narrow_class_number(d);
    row.c4_ok = c4_condition(p, q) == (row.h_plus % 4 == 0);
    if (row.legendre_pq == 1) {
      row.quartic_pq = quartic_symbol(p, q);
      row.quartic_qp = quartic_symbol(q, p);
      row.wide_ok = scholz_real(p, q) == (row.h % 4 == 0);
      row.eight_ok =
          (row.quartic_pq == 1 && row.quartic_qp == 1) == (row.h_plus % 8 == 0);
    } else {
      // the quartic laws presuppose (p/q) = 1; nothing to test here
      row.wide_ok = true;
      row.eight_ok = true;
    }
  });
  for (const auto& row : sweep.rows)
    if (!(row.c4_ok && row.wide_ok && row.eight_ok)) ++sweep.exceptions;
  sweep.pass = sweep.exceptions == 0;
  return sweep;
}

ConicSweep conic_triples(long bound, long count, long jobs) {
  check_jobs(jobs);
  if (bound < 1 || count < 1)
    throw argument_error("conic_triples: bound and count must be positive");
  if (bound > 1000 || count > 1000)
    throw unsupported_error("conic_triples: bound and count capped at 1000");
  ConicSweep sweep;
  sweep.bound = bound;
  sweep.count = count;
  std::vector<long> ps = primes_in(5, bound, 1, 4);
  std::vector<long> qs = primes_in(3, bound, 3, 4);
  std::vector<std::array<long, 3>> triples;
  for (long p : ps) {
    for (std::size_t i = 0; i < qs.size() && static_cast<long>(triples.size()) < count; ++i) {
      if (legendre(Int(p), Int(qs[i])) != 1) continue;
      for (std::size_t j = i + 1; j < qs.size(); ++j) {
        if (legendre(Int(p), Int(qs[j])) != 1) continue;
        triples.push_back({p, qs[i], qs[j]});
        if (static_cast<long>(triples.size()) == count) break;
      }
    }
    if (static_cast<long>(triples.size()) == count) break;
  }
  if (static_cast<long>(triples.size()) < count)
    throw resource_error("conic_triples: not enough qualifying triples below the bound");
  sweep.rows.resize(triples.size());
  run_items(static_cast<long>(triples.size()), jobs, [&](long i) {
    ConicTripleRow& row = sweep.rows[static_cast<std::size_t>(i)];
    const auto& t = triples[static_cast<std::size_t>(i)];
    row.p = t[0];
    row.q = t[1];
    row.q2 = t[2];
    Int p(row.p);
    row.alpha_q = solve_conic(p, Int(row.q));
    row.alpha_q2 = solve_conic(p, Int(row.q2));
    auto sa = signature_of_alpha(row.alpha_q, p);
    auto sb = signature_of_alpha(row.alpha_q2, p);
    int plus = sa.first * sb.first;
    int minus = sa.second * sb.second;
    row.definite = sa.first != sa.second && sb.first != sb.second && plus == minus;
    row.product_sign = row.definite ? plus : 0;
    row.predicted = predict_pqq(p, Int(row.q), Int(row.q2)).has_value();
  });
  sweep.pass = true;
  for (const auto& row : sweep.rows)
    if (!row.definite || !row.predicted) sweep.pass = false;
  return sweep;
}

TowerScan c2_scan(long lo, long hi, long jobs) {
  check_jobs(jobs);
  if (lo > hi) throw argument_error("c2_scan: empty range");
  if (hi - lo > 1000000) throw unsupported_error("c2_scan: range wider than 1000000");
  TowerScan scan;
  scan.lo = lo;
  scan.hi = hi;
  std::vector<long> ps = primes_in(std::max(lo, 5L), hi + 1, 5, 8);
  scan.rows.resize(ps.size());
  run_items(static_cast<long>(ps.size()), jobs, [&](long i) {
    TowerScanRow& row = scan.rows[static_cast<std::size_t>(i)];
    C2Verdict v = corollary_c2_check(Int(ps[static_cast<std::size_t>(i)]));
    row.p = ps[static_cast<std::size_t>(i)];
    row.h = v.h;
    row.infinite = v.infinite;
  });
  for (const auto& row : scan.rows)
    if (row.infinite) ++scan.infinite_count;
  return scan;
}

} // namespace cyclolab
