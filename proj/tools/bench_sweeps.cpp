// Times every sweep twice, once on the serial reference path (jobs = 1) and
// once through the OpenMP dispatch, and verifies the two reports are
// identical field by field.  Pass a worker count as the only argument;
// the default is the OpenMP thread limit, floored at two so the parallel
// code path always runs.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cyclolab/galmod_fast.hpp"
#include "cyclolab/sweeps.hpp"

namespace cl = cyclolab;

namespace {

template <class F> double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const cl::QuadRangeSweep& a, const cl::QuadRangeSweep& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto &x = a.rows[i], &y = b.rows[i];
    if (x.D != y.D || x.h != y.h || x.h_plus != y.h_plus || x.class_group != y.class_group)
      return false;
    if (x.unit.has_value() != y.unit.has_value()) return false;
    if (x.unit && (x.unit->x != y.unit->x || x.unit->y != y.unit->y ||
                   x.unit->norm != y.unit->norm || x.unit->period != y.unit->period))
      return false;
  }
  return true;
}

bool same(const cl::MinusQuadraticSweep& a, const cl::MinusQuadraticSweep& b) {
  if (a.rows.size() != b.rows.size() || a.mismatches != b.mismatches || a.pass != b.pass)
    return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto &x = a.rows[i], &y = b.rows[i];
    if (x.p != y.p || x.h_forms != y.h_forms || x.h_minus != y.h_minus || x.match != y.match)
      return false;
  }
  return true;
}

bool same(const cl::ScholzSweep& a, const cl::ScholzSweep& b) {
  if (a.rows.size() != b.rows.size() || a.exceptions != b.exceptions || a.pass != b.pass)
    return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto &x = a.rows[i], &y = b.rows[i];
    if (x.p != y.p || x.q != y.q || x.legendre_pq != y.legendre_pq ||
        x.quartic_pq != y.quartic_pq || x.quartic_qp != y.quartic_qp || x.h != y.h ||
        x.h_plus != y.h_plus || x.c4_ok != y.c4_ok || x.wide_ok != y.wide_ok ||
        x.eight_ok != y.eight_ok)
      return false;
  }
  return true;
}

bool same(const cl::ConicSweep& a, const cl::ConicSweep& b) {
  if (a.rows.size() != b.rows.size() || a.pass != b.pass) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto &x = a.rows[i], &y = b.rows[i];
    if (x.p != y.p || x.q != y.q || x.q2 != y.q2 || x.product_sign != y.product_sign ||
        x.definite != y.definite || x.predicted != y.predicted)
      return false;
    if (x.alpha_q.x != y.alpha_q.x || x.alpha_q.y != y.alpha_q.y || x.alpha_q.z != y.alpha_q.z)
      return false;
    if (x.alpha_q2.x != y.alpha_q2.x || x.alpha_q2.y != y.alpha_q2.y ||
        x.alpha_q2.z != y.alpha_q2.z)
      return false;
  }
  return true;
}

bool same(const cl::TowerScan& a, const cl::TowerScan& b) {
  if (a.rows.size() != b.rows.size() || a.infinite_count != b.infinite_count) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto &x = a.rows[i], &y = b.rows[i];
    if (x.p != y.p || x.h != y.h || x.infinite != y.infinite) return false;
  }
  return true;
}

bool same(const cl::SurveyReport& a, const cl::SurveyReport& b) {
  if (a.modules != b.modules || a.configurations != b.configurations ||
      a.sf_pairs != b.sf_pairs || a.minus_pairs != b.minus_pairs ||
      a.failures != b.failures || a.pass != b.pass ||
      a.counterexamples != b.counterexamples || a.shapes.size() != b.shapes.size())
    return false;
  for (std::size_t i = 0; i < a.shapes.size(); ++i) {
    const auto &x = a.shapes[i], &y = b.shapes[i];
    if (x.e != y.e || x.sigma_count != y.sigma_count || x.chain_steps != y.chain_steps ||
        x.fixed_sum != y.fixed_sum || x.configurations != y.configurations ||
        x.sf_pairs != y.sf_pairs || x.minus_pairs != y.minus_pairs)
      return false;
  }
  return true;
}

int rows_printed = 0;
int mismatches = 0;

template <class F> void bench(const char* name, long jobs, F&& runner) {
  decltype(runner(1L)) serial, parallel;
  double t1 = seconds([&] { serial = runner(1L); });
  double tn = seconds([&] { parallel = runner(jobs); });
  bool ok = same(serial, parallel);
  if (!ok) ++mismatches;
  std::printf("%-28s %9.3fs %9.3fs %7.2fx   %s\n", name, t1, tn, tn > 0 ? t1 / tn : 0.0,
              ok ? "identical" : "DIFFER");
  ++rows_printed;
}

} // namespace

int main(int argc, char** argv) {
  long jobs = 0;
  if (argc > 1) jobs = std::atol(argv[1]);
  if (jobs <= 0) {
#ifdef _OPENMP
    jobs = omp_get_max_threads();
#endif
    if (jobs < 2) jobs = 2;
  }
  std::printf("serial reference against %ld OpenMP workers\n", jobs);
  std::printf("%-28s %10s %10s %8s\n", "sweep", "jobs=1", "parallel", "speedup");

  bench("quad_range [-5000, 5000]", jobs,
        [](long j) { return cl::quad_range(cl::Int(-5000), cl::Int(5000), j); });
  bench("minus_quadratic 3000", jobs, [](long j) { return cl::minus_quadratic(3000, j); });
  bench("scholz_pairs 600", jobs, [](long j) { return cl::scholz_pairs(600, j); });
  bench("conic_triples 1000 x 1000", jobs,
        [](long j) { return cl::conic_triples(1000, 1000, j); });
  bench("c2_scan 100000", jobs, [](long j) { return cl::c2_scan(5, 100000, j); });
  bench("module_survey 3^4", jobs,
        [](long j) { return cl::module_survey(3, 81, cl::survey_all, j); });

  std::printf("%d sweeps, %d mismatches\n", rows_printed, mismatches);
  return mismatches == 0 ? 0 : 1;
}
