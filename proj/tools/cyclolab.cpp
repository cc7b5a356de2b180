// Command-line front door: every module behind one binary, JSON by default,
// CSV for the two streaming scans, text for reading at the terminal.  Output
// for a fixed invocation is byte-identical across runs, so nothing
// time-dependent is ever written in json or csv mode.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclolab/bqf.hpp"
#include "cyclolab/characters.hpp"
#include "cyclolab/errors.hpp"
#include "cyclolab/galmod.hpp"
#include "cyclolab/galmod_fast.hpp"
#include "cyclolab/genus.hpp"
#include "cyclolab/integers.hpp"
#include "cyclolab/minusclass.hpp"
#include "cyclolab/paper_suite.hpp"
#include "cyclolab/predict.hpp"
#include "cyclolab/report.hpp"
#include "cyclolab/sweeps.hpp"
#include "cyclolab/symbols.hpp"
#include "cyclolab/towers.hpp"

namespace cl = cyclolab;
using cl::Int;
using cl::Json;
using cl::Rat;

namespace {

struct Options {
  std::string format = "json";
  bool format_set = false;
  std::string bound;
  long jobs = 1;
  std::string only;
};

Int to_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw cl::argument_error("not an integer: " + text);
  }
}

long to_long(const Int& v, const std::string& what) {
  if (!v.fits_slong_p()) throw cl::argument_error(what + " out of range");
  return v.get_si();
}

/* Formats for one-shot reports; csv is reserved for the streaming scans. */
std::string report_format(const Options& opt) {
  if (opt.format == "csv")
    throw cl::argument_error("csv output applies to scan commands only; use json or text");
  return opt.format;
}

std::string scan_format(const Options& opt) { return opt.format_set ? opt.format : "csv"; }

Int solver_bound(const Options& opt, const Int& fallback) {
  if (opt.bound.empty()) return fallback;
  Int b = to_int(opt.bound);
  if (b <= 0) throw cl::argument_error("--bound must be positive");
  return b;
}

/* Coarse pre-flight size estimate against CYCLOLAB_MAX_MEM_MB.  The estimate
 * covers the dominant allocation of the command and errs high; an unset or
 * empty variable means no cap. */
void check_memory_cap(double estimated_bytes, const std::string& what) {
  const char* cap_text = std::getenv("CYCLOLAB_MAX_MEM_MB");
  if (cap_text == nullptr || *cap_text == '\0') return;
  char* end = nullptr;
  double cap_mb = std::strtod(cap_text, &end);
  if (end == cap_text || *end != '\0' || cap_mb <= 0)
    throw cl::argument_error("CYCLOLAB_MAX_MEM_MB: not a positive number");
  if (estimated_bytes > cap_mb * 1024.0 * 1024.0) {
    char line[160];
    std::snprintf(line, sizeof line, "%s: estimated %.1f MB exceeds CYCLOLAB_MAX_MEM_MB=%s",
                  what.c_str(), estimated_bytes / (1024.0 * 1024.0), cap_text);
    throw cl::resource_error(line);
  }
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

const char* signed_unit(int value) { return value > 0 ? "+1" : value < 0 ? "-1" : "0"; }

Json strings_json(const std::vector<Int>& values) {
  Json out = Json::array();
  for (const Int& v : values) out.push_back(cl::dec(v));
  return out;
}

Json structure_json(const cl::AbelianStructure& s) {
  return Json{{"order", cl::dec(s.order)}, {"divisors", strings_json(s.divisors)}};
}

Json ring_json(const cl::GroupRingElement& r) { return strings_json(r.coefficients); }

// ---------------------------------------------------------------- symbols

int run_symbols(const std::vector<std::string>& leg, const std::vector<std::string>& jac,
                const std::vector<std::string>& quart, const std::string& oct,
                const Options& opt) {
  int given = (leg.empty() ? 0 : 1) + (jac.empty() ? 0 : 1) + (quart.empty() ? 0 : 1) +
              (oct.empty() ? 0 : 1);
  if (given != 1)
    throw cl::argument_error(
        "symbols: give exactly one of --legendre, --jacobi, --quartic, --octic8");
  std::string op;
  Json args = Json::object();
  int value = 0;
  if (!leg.empty()) {
    Int a = to_int(leg[0]), p = to_int(leg[1]);
    op = "legendre";
    args["a"] = cl::dec(a);
    args["p"] = cl::dec(p);
    value = cl::legendre(a, p);
  } else if (!jac.empty()) {
    Int a = to_int(jac[0]), n = to_int(jac[1]);
    op = "jacobi";
    args["a"] = cl::dec(a);
    args["n"] = cl::dec(n);
    value = cl::jacobi(a, n);
  } else if (!quart.empty()) {
    Int q = to_int(quart[0]), p = to_int(quart[1]);
    op = "quartic";
    args["q"] = cl::dec(q);
    args["p"] = cl::dec(p);
    value = cl::quartic_symbol(q, p);
  } else {
    Int q = to_int(oct);
    op = "octic8";
    args["q"] = cl::dec(q);
    value = cl::octic_symbol_at_8(q);
  }
  if (report_format(opt) == "text") {
    std::cout << signed_unit(value) << "\n";
    return 0;
  }
  Json doc = cl::make_document("symbols");
  doc["op"] = op;
  doc["args"] = args;
  doc["value"] = value;
  emit(doc);
  return 0;
}

// ------------------------------------------------------------------- quad

Json unit_json(const cl::FundamentalUnit& u) {
  Rat x(u.x, 2), y(u.y, 2);
  x.canonicalize();
  y.canonicalize();
  return Json{{"x_num", cl::dec(x.get_num())},
              {"x_den", cl::dec(x.get_den())},
              {"y_num", cl::dec(y.get_num())},
              {"y_den", cl::dec(y.get_den())}};
}

int run_quad(const std::string& d_text, const std::vector<std::string>& range,
             const Options& opt) {
  if (d_text.empty() == range.empty())
    throw cl::argument_error("quad: give exactly one of --D, --range");
  if (!d_text.empty()) {
    Int D = to_int(d_text);
    cl::QuadFieldReport r = cl::quad_report(D);
    if (report_format(opt) == "text") {
      std::cout << "D = " << r.D << "\n"
                << "h = " << r.h << "\n"
                << "h+ = " << r.h_plus << "\n";
      if (r.unit)
        std::cout << "unit = (" << r.unit->x << " + " << r.unit->y << " sqrt(D))/2, norm "
                  << signed_unit(r.unit->norm) << "\n";
      std::cout << "class group =";
      if (r.class_group.empty()) std::cout << " trivial";
      for (std::size_t i = 0; i < r.class_group.size(); ++i)
        std::cout << (i ? " x Z/" : " Z/") << r.class_group[i];
      std::cout << "\n";
      return 0;
    }
    Json doc = cl::make_document("quad");
    doc["D"] = cl::dec(r.D);
    doc["h"] = cl::dec(r.h);
    doc["h_plus"] = cl::dec(r.h_plus);
    doc["unit"] = r.unit ? unit_json(*r.unit) : Json(nullptr);
    doc["unit_norm"] = r.unit ? r.unit->norm : 0;
    doc["class_group"] = strings_json(r.class_group);
    emit(doc);
    return 0;
  }
  Int lo = to_int(range[0]), hi = to_int(range[1]);
  if (hi >= lo) check_memory_cap(Int(hi - lo + 1).get_d() * 400.0, "quad --range");
  cl::QuadRangeSweep sweep = cl::quad_range(lo, hi, opt.jobs);
  std::string format = scan_format(opt);
  if (format == "json") {
    Json doc = cl::make_document("quad");
    Json rows = Json::array();
    for (const auto& r : sweep.rows)
      rows.push_back(Json{{"D", cl::dec(r.D)},
                          {"h", cl::dec(r.h)},
                          {"h_plus", cl::dec(r.h_plus)},
                          {"unit_norm", r.unit ? r.unit->norm : 0}});
    doc["rows"] = rows;
    emit(doc);
    return 0;
  }
  std::cout << "D,h,h_plus,unit_norm\n";
  for (const auto& r : sweep.rows)
    std::cout << cl::csv_line({cl::dec(r.D), cl::dec(r.h), cl::dec(r.h_plus),
                               std::to_string(r.unit ? r.unit->norm : 0)})
              << "\n";
  return 0;
}

// ------------------------------------------------------------------ genus

int run_genus(const std::string& four_rank, const std::vector<std::string>& scholz,
              const std::vector<std::string>& conic, const Options& opt) {
  int given = (four_rank.empty() ? 0 : 1) + (scholz.empty() ? 0 : 1) + (conic.empty() ? 0 : 1);
  if (given != 1)
    throw cl::argument_error("genus: give exactly one of --four-rank, --scholz, --conic");
  std::string format = report_format(opt);
  Json doc = cl::make_document("genus");
  if (!four_rank.empty()) {
    Int D = to_int(four_rank);
    int rank = cl::redei_four_rank(D);
    if (format == "text") {
      std::cout << rank << "\n";
      return 0;
    }
    doc["op"] = "four_rank";
    doc["D"] = cl::dec(D);
    doc["prime_discriminants"] = strings_json(cl::prime_discriminant_factors(D));
    doc["four_rank"] = rank;
    emit(doc);
    return 0;
  }
  if (!scholz.empty()) {
    Int p = to_int(scholz[0]), q = to_int(scholz[1]);
    bool c4 = cl::c4_condition(p, q);
    int lg = cl::legendre(p, q);
    if (format == "text") {
      std::cout << "(p/q) = " << signed_unit(lg) << "\n"
                << "4 | h+(pq): " << (c4 ? "yes" : "no") << "\n";
      if (lg == 1)
        std::cout << "(p/q)_4 = " << signed_unit(cl::quartic_symbol(p, q)) << ", (q/p)_4 = "
                  << signed_unit(cl::quartic_symbol(q, p)) << "\n"
                  << "8 | h+(pq): " << (cl::scholz_real(p, q) ? "yes" : "no") << "\n";
      return 0;
    }
    doc["op"] = "scholz";
    doc["p"] = cl::dec(p);
    doc["q"] = cl::dec(q);
    doc["legendre"] = lg;
    doc["c4_condition"] = c4;
    doc["quartic_pq"] = lg == 1 ? Json(cl::quartic_symbol(p, q)) : Json(nullptr);
    doc["quartic_qp"] = lg == 1 ? Json(cl::quartic_symbol(q, p)) : Json(nullptr);
    doc["scholz_real"] = lg == 1 ? Json(cl::scholz_real(p, q)) : Json(nullptr);
    emit(doc);
    return 0;
  }
  Int p = to_int(conic[0]), q = to_int(conic[1]);
  Int bound = solver_bound(opt, Int(10000));
  cl::ConicSolution sol = cl::solve_conic(p, q, bound);
  std::pair<int, int> sig = cl::signature_of_alpha(sol, p);
  if (format == "text") {
    std::cout << "x = " << sol.x << ", y = " << sol.y << ", z = " << sol.z << "\n"
              << "signature of x + y sqrt(p): (" << signed_unit(sig.first) << ", "
              << signed_unit(sig.second) << ")\n";
    return 0;
  }
  doc["op"] = "conic";
  doc["p"] = cl::dec(p);
  doc["q"] = cl::dec(q);
  doc["bound"] = cl::dec(bound);
  doc["solution"] =
      Json{{"x", cl::dec(sol.x)}, {"y", cl::dec(sol.y)}, {"z", cl::dec(sol.z)}};
  doc["signature"] = Json::array({sig.first, sig.second});
  emit(doc);
  return 0;
}

// ---------------------------------------------------------------- predict

Json prediction_json(const cl::ParityPrediction& pr) {
  return Json{{"modulus", cl::dec(pr.modulus_m)},
              {"target", cl::target_name(pr.target)},
              {"divisor", cl::dec(pr.divisor)},
              {"premises", pr.premises},
              {"proposition", cl::proposition_name(pr.proposition)}};
}

void print_prediction(const cl::ParityPrediction& pr) {
  std::cout << pr.divisor << " | h of " << cl::target_name(pr.target) << " at m = "
            << pr.modulus_m << "  [" << cl::proposition_name(pr.proposition) << "]\n";
  for (const std::string& line : pr.premises) std::cout << "  premise: " << line << "\n";
}

int run_predict(const std::vector<std::string>& pq, const std::string& m,
                const std::vector<std::string>& pqq, const Options& opt) {
  int given = (pq.empty() ? 0 : 1) + (m.empty() ? 0 : 1) + (pqq.empty() ? 0 : 1);
  if (given != 1) throw cl::argument_error("predict: give exactly one of --pq, --m, --pqq");
  std::string format = report_format(opt);
  Json doc = cl::make_document("predict");
  std::vector<cl::ParityPrediction> predictions;
  std::optional<std::string> certificate;
  if (!pq.empty()) {
    cl::PredictionSet set = cl::predict_pq(to_int(pq[0]), to_int(pq[1]));
    predictions = set.predictions;
    certificate = set.negative_certificate;
    doc["op"] = "pq";
    doc["p"] = cl::dec(to_int(pq[0]));
    doc["q"] = cl::dec(to_int(pq[1]));
  } else if (!m.empty()) {
    if (auto pr = cl::predict_three_primes(to_int(m))) predictions.push_back(*pr);
    doc["op"] = "m";
    doc["m"] = cl::dec(to_int(m));
  } else {
    if (auto pr = cl::predict_pqq(to_int(pqq[0]), to_int(pqq[1]), to_int(pqq[2])))
      predictions.push_back(*pr);
    doc["op"] = "pqq";
    doc["p"] = cl::dec(to_int(pqq[0]));
    doc["q"] = cl::dec(to_int(pqq[1]));
    doc["q2"] = cl::dec(to_int(pqq[2]));
  }
  if (format == "text") {
    for (const auto& pr : predictions) print_prediction(pr);
    if (certificate) std::cout << "odd: " << *certificate << "\n";
    if (predictions.empty() && !certificate) std::cout << "no prediction\n";
    return 0;
  }
  Json rows = Json::array();
  for (const auto& pr : predictions) rows.push_back(prediction_json(pr));
  doc["predictions"] = rows;
  doc["negative_certificate"] = certificate ? Json(*certificate) : Json(nullptr);
  emit(doc);
  return 0;
}

// ----------------------------------------------------------------- towers

Json gs_json(const cl::TowerVerdict& v) {
  return Json{{"rank_r", cl::dec(v.rank_r)},
              {"unit_rank", cl::dec(v.unit_rank)},
              {"infinite", v.infinite}};
}

int run_towers(const std::string& c2, const std::vector<std::string>& pq,
               const std::vector<std::string>& ozaki, bool scan, const std::string& scan_min,
               const std::string& scan_max, const Options& opt) {
  int given = (c2.empty() ? 0 : 1) + (pq.empty() ? 0 : 1) + (ozaki.empty() ? 0 : 1) +
              (scan ? 1 : 0);
  if (given != 1)
    throw cl::argument_error("towers: give exactly one of --c2, --pq, --ozaki, --scan-c2");
  if (!scan && !(scan_min.empty() && scan_max.empty()))
    throw cl::argument_error("towers: --min/--max accompany --scan-c2");
  if (scan) {
    if (scan_min.empty() || scan_max.empty())
      throw cl::argument_error("towers: --scan-c2 needs --min and --max");
    long lo = to_long(to_int(scan_min), "--min");
    long hi = to_long(to_int(scan_max), "--max");
    if (hi >= lo) check_memory_cap((static_cast<double>(hi) - lo + 1) * 8.0, "towers --scan-c2");
    cl::TowerScan rows = cl::c2_scan(lo, hi, opt.jobs);
    std::string format = scan_format(opt);
    if (format == "json") {
      Json doc = cl::make_document("towers");
      Json out = Json::array();
      for (const auto& r : rows.rows)
        out.push_back(
            Json{{"p", std::to_string(r.p)}, {"h", cl::dec(r.h)}, {"infinite", r.infinite}});
      doc["rows"] = out;
      emit(doc);
      return 0;
    }
    std::cout << "p,h,infinite\n";
    for (const auto& r : rows.rows)
      std::cout << cl::csv_line(
                       {std::to_string(r.p), cl::dec(r.h), r.infinite ? "1" : "0"})
                << "\n";
    return 0;
  }
  std::string format = report_format(opt);
  Json doc = cl::make_document("towers");
  if (!c2.empty()) {
    cl::C2Verdict v = cl::corollary_c2_check(to_int(c2));
    if (format == "text") {
      std::cout << "h(" << v.p << ") = " << v.h << "\n"
                << "class field tower: " << (v.infinite ? "infinite" : "undecided") << "\n";
      return 0;
    }
    doc["op"] = "c2";
    doc["p"] = cl::dec(v.p);
    doc["h"] = cl::dec(v.h);
    doc["gs"] = gs_json(v.gs);
    doc["infinite"] = v.infinite;
    emit(doc);
    return 0;
  }
  if (!pq.empty()) {
    cl::PQVerdict v = cl::corollary_pq_check(to_int(pq[0]), to_int(pq[1]));
    if (format == "text") {
      std::cout << "m = " << v.m << ", h = " << v.h << ", unit norm "
                << signed_unit(v.unit_norm) << "\n"
                << "class field tower: " << (v.infinite ? "infinite" : "undecided") << "\n";
      return 0;
    }
    doc["op"] = "pq";
    doc["p"] = cl::dec(v.p);
    doc["q"] = cl::dec(v.q);
    doc["m"] = cl::dec(v.m);
    doc["congruence_ok"] = v.congruence_ok;
    doc["h"] = cl::dec(v.h);
    doc["unit_norm"] = v.unit_norm;
    doc["h_even"] = v.h_even;
    doc["infinite"] = v.infinite;
    emit(doc);
    return 0;
  }
  cl::OzakiParameters v = cl::ozaki_search(to_int(ozaki[0]), to_int(ozaki[1]));
  if (format == "text") {
    std::cout << "ell = " << v.ell << ": p = " << v.p << ", q = " << v.q << ", r = " << v.r
              << ", n = " << v.n << "\n"
              << "class group ell-rank >= " << v.rank_lower_bound << "\n";
    return 0;
  }
  doc["op"] = "ozaki";
  doc["ell"] = cl::dec(v.ell);
  doc["p"] = cl::dec(v.p);
  doc["q"] = cl::dec(v.q);
  doc["r"] = cl::dec(v.r);
  doc["n"] = cl::dec(v.n);
  doc["rank_lower_bound"] = cl::dec(v.rank_lower_bound);
  doc["relative"] = Json{{"p", cl::dec(v.relative.p)},
                         {"ramified_count", cl::dec(v.relative.ramified_count)},
                         {"unit_rank_bound", cl::dec(v.relative.unit_rank_bound)},
                         {"lower_bound", cl::dec(v.relative.lower_bound)}};
  emit(doc);
  return 0;
}

// ------------------------------------------------------------ chars/hminus

int run_chars(const std::string& modulus, long degree, const Options& opt) {
  if (modulus.empty() || degree == 0)
    throw cl::argument_error("chars: --modulus and --degree are required");
  cl::SubfieldSpec spec = cl::characters_of_subfield(to_int(modulus), degree);
  if (report_format(opt) == "text") {
    for (const auto& chi : spec.characters)
      std::cout << "order " << chi.order << ", conductor " << chi.conductor << ", "
                << (chi.even ? "even" : "odd") << "\n";
    return 0;
  }
  Json doc = cl::make_document("chars");
  doc["modulus"] = cl::dec(spec.n);
  doc["degree"] = spec.d;
  Json rows = Json::array();
  for (const auto& chi : spec.characters)
    rows.push_back(Json{{"exponents", chi.exponents},
                        {"order", chi.order},
                        {"conductor", cl::dec(chi.conductor)},
                        {"even", chi.even}});
  doc["characters"] = rows;
  emit(doc);
  return 0;
}

int run_hminus(const std::string& modulus, long degree, const Options& opt) {
  if (modulus.empty()) throw cl::argument_error("hminus: --modulus is required");
  Int n = to_int(modulus);
  if (degree == 0) degree = to_long(cl::euler_phi(n), "degree");
  cl::MinusReport r = cl::minus_class_number(cl::characters_of_subfield(n, degree));
  if (report_format(opt) == "text") {
    std::cout << "degree " << r.field.d << " field of conductor " << r.field.n << ": h- = "
              << r.h_minus << "\n"
              << "w = " << r.w << ", unit index Q = " << r.unit_index << ", "
              << r.bernoulli_factors.size() << " odd characters\n";
    return 0;
  }
  Json doc = cl::make_document("hminus");
  doc["modulus"] = cl::dec(r.field.n);
  doc["degree"] = r.field.d;
  doc["w"] = cl::dec(r.w);
  doc["unit_index"] = r.unit_index;
  Json rows = Json::array();
  for (const auto& factor : r.bernoulli_factors) rows.push_back(cl::cyclo_json(factor));
  doc["bernoulli_factors"] = rows;
  doc["h_minus"] = cl::dec(r.h_minus);
  emit(doc);
  return 0;
}

// ----------------------------------------------------------------- galmod

unsigned check_mask(const std::vector<std::string>& names) {
  if (names.empty()) return cl::survey_all;
  unsigned mask = 0;
  for (const std::string& name : names) {
    if (name == "inaba")
      mask |= cl::survey_inaba;
    else if (name == "p1am")
      mask |= cl::survey_p1am;
    else if (name == "p3")
      mask |= cl::survey_p3;
    else if (name == "sf")
      mask |= cl::survey_sf;
    else
      throw cl::argument_error("galmod: unknown check " + name +
                               " (expected inaba, p1am, p3, sf)");
  }
  return mask;
}

Json check_names(unsigned mask) {
  Json out = Json::array();
  if (mask & cl::survey_inaba) out.push_back("inaba");
  if (mask & cl::survey_p1am) out.push_back("p1am");
  if (mask & cl::survey_p3) out.push_back("p3");
  if (mask & cl::survey_sf) out.push_back("sf");
  return out;
}

int run_galmod(long e1e2_p, const std::vector<long>& enumerate_args,
               const std::vector<std::string>& checks, const std::string& tate,
               const Options& opt) {
  int given = (e1e2_p ? 1 : 0) + (enumerate_args.empty() ? 0 : 1) + (tate.empty() ? 0 : 1);
  if (given != 1)
    throw cl::argument_error("galmod: give exactly one of --e1e2, --enumerate, --tate");
  if (enumerate_args.empty() && !checks.empty())
    throw cl::argument_error("galmod: --check accompanies --enumerate");
  std::string format = report_format(opt);
  Json doc = cl::make_document("galmod");
  if (e1e2_p) {
    cl::NormIdentity id = cl::solve_e1_e2(e1e2_p);
    if (format == "text") {
      std::cout << "p = (1-s)^" << e1e2_p - 1 << " f + nu g and nu = (1-s)^" << e1e2_p - 1
                << " + p h hold with\n";
      for (auto [name, elem] : {std::pair<const char*, const cl::GroupRingElement*>{"f", &id.f},
                                {"g", &id.g},
                                {"h", &id.h}}) {
        std::cout << name << " =";
        for (const Int& c : elem->coefficients) std::cout << " " << c;
        std::cout << "\n";
      }
      return 0;
    }
    doc["op"] = "e1e2";
    doc["p"] = e1e2_p;
    doc["f"] = ring_json(id.f);
    doc["g"] = ring_json(id.g);
    doc["h"] = ring_json(id.h);
    emit(doc);
    return 0;
  }
  if (!enumerate_args.empty()) {
    long p = enumerate_args[0], max_order = enumerate_args[1];
    unsigned mask = check_mask(checks);
    long rank = 0;
    for (long order = 1; p > 1 && order <= max_order / p; ++rank) order *= p;
    check_memory_cap(static_cast<double>(max_order) * max_order * 64.0 +
                         200000.0 * rank * rank * 8.0,
                     "galmod --enumerate");
    cl::SurveyReport s = cl::module_survey(p, max_order, mask, opt.jobs);
    if (format == "text") {
      std::cout << s.modules << " modules, " << s.configurations << " configurations, "
                << s.sf_pairs << " split pairs, " << s.minus_pairs << " minus pairs\n"
                << "failures: " << s.failures << (s.pass ? " (pass)" : " (FAIL)") << "\n";
      for (const std::string& line : s.counterexamples) std::cout << "  " << line << "\n";
      return s.pass ? 0 : 1;
    }
    doc["op"] = "enumerate";
    doc["p"] = s.p;
    doc["max_order"] = s.max_order;
    doc["checks"] = check_names(s.checks);
    Json shapes = Json::array();
    for (const auto& shape : s.shapes)
      shapes.push_back(Json{{"e", shape.e},
                            {"sigma_count", shape.sigma_count},
                            {"chain_steps", shape.chain_steps},
                            {"fixed_sum", shape.fixed_sum},
                            {"configurations", shape.configurations},
                            {"sf_pairs", shape.sf_pairs},
                            {"minus_pairs", shape.minus_pairs}});
    doc["shapes"] = shapes;
    doc["modules"] = s.modules;
    doc["configurations"] = s.configurations;
    doc["sf_pairs"] = s.sf_pairs;
    doc["minus_pairs"] = s.minus_pairs;
    doc["failures"] = s.failures;
    doc["counterexamples"] = s.counterexamples;
    doc["pass"] = s.pass;
    emit(doc);
    return s.pass ? 0 : 1;
  }
  cl::GModule M = cl::parse_module_descriptor(tate);
  cl::AbelianStructure h0 = cl::tate_cohomology(M, 0);
  cl::AbelianStructure hm1 = cl::tate_cohomology(M, -1);
  if (format == "text") {
    for (auto [name, s] : {std::pair<const char*, const cl::AbelianStructure*>{"H^0", &h0},
                           {"H^-1", &hm1}}) {
      std::cout << name << " =";
      if (s->divisors.empty()) std::cout << " trivial";
      for (std::size_t i = 0; i < s->divisors.size(); ++i)
        std::cout << (i ? " x Z/" : " Z/") << s->divisors[i];
      std::cout << "\n";
    }
    return 0;
  }
  doc["op"] = "tate";
  doc["module"] = cl::module_descriptor(M);
  doc["h0"] = structure_json(h0);
  doc["h_minus1"] = structure_json(hm1);
  emit(doc);
  return 0;
}

// ------------------------------------------------------------- paper-suite

int run_suite(const Options& opt) {
  std::string format = report_format(opt);
  cl::SuiteReport report = cl::run_paper_suite(opt.jobs, opt.only);
  if (format == "text") {
    for (const auto& c : report.results) {
      char line[64];
      std::snprintf(line, sizeof line, "%5.2fs/%.0fs", c.seconds, c.budget_seconds);
      std::printf("%2d  %-44s %s  %s\n", c.number, c.name.c_str(),
                  c.pass ? "PASS" : "FAIL", line);
      std::printf("    %s\n", c.detail.c_str());
    }
    std::printf("%s: %zu checks in %.2fs\n", report.pass ? "PASS" : "FAIL",
                report.results.size(), report.total_seconds);
    return report.pass ? 0 : 1;
  }
  Json doc = cl::make_document("paper-suite");
  Json rows = Json::array();
  for (const auto& c : report.results)
    rows.push_back(Json{{"number", c.number},
                        {"name", c.name},
                        {"value_ok", c.value_ok},
                        {"within_budget", c.within_budget},
                        {"budget_seconds", static_cast<long>(c.budget_seconds)},
                        {"pass", c.pass},
                        {"detail", c.detail}});
  doc["results"] = rows;
  doc["pass"] = report.pass;
  emit(doc);
  return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for quadratic fields, cyclotomic characters, and C_p modules"};
  app.require_subcommand(1);
  Options opt;
  auto* format_opt =
      app.add_option("--format", opt.format, "output format: json, csv (scans only), text")
          ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--bound", opt.bound, "search bound for the conic solver");
  app.add_option("--jobs", opt.jobs, "worker count for scans and the suite");
  app.add_option("--only", opt.only, "run only one module's checks (paper-suite)");

  auto* sym = app.add_subcommand("symbols", "Legendre, Jacobi, quartic, and octic symbols");
  std::vector<std::string> sym_leg, sym_jac, sym_quart;
  std::string sym_oct;
  sym->add_option("--legendre", sym_leg, "a p")->expected(2);
  sym->add_option("--jacobi", sym_jac, "a n")->expected(2);
  sym->add_option("--quartic", sym_quart, "q p")->expected(2);
  sym->add_option("--octic8", sym_oct, "q");

  auto* quad = app.add_subcommand("quad", "class numbers and units of quadratic fields");
  std::string quad_d;
  std::vector<std::string> quad_range_args;
  quad->add_option("--D", quad_d, "fundamental discriminant");
  quad->add_option("--range", quad_range_args, "lo hi")->expected(2);

  auto* genus = app.add_subcommand("genus", "4-rank, divisibility criteria, conic solver");
  std::string genus_four;
  std::vector<std::string> genus_scholz, genus_conic;
  genus->add_option("--four-rank", genus_four, "fundamental discriminant");
  genus->add_option("--scholz", genus_scholz, "p q")->expected(2);
  genus->add_option("--conic", genus_conic, "p q")->expected(2);

  auto* predict = app.add_subcommand("predict", "parity predictions for plus class numbers");
  std::vector<std::string> predict_pq_args, predict_pqq_args;
  std::string predict_m;
  predict->add_option("--pq", predict_pq_args, "p q")->expected(2);
  predict->add_option("--m", predict_m, "modulus with three prime factors");
  predict->add_option("--pqq", predict_pqq_args, "p q q2")->expected(3);

  auto* towers = app.add_subcommand("towers", "class field tower criteria");
  std::string towers_c2, towers_min, towers_max;
  std::vector<std::string> towers_pq, towers_ozaki;
  bool towers_scan = false;
  towers->add_option("--c2", towers_c2, "prime 5 mod 8");
  towers->add_option("--pq", towers_pq, "p q")->expected(2);
  towers->add_option("--ozaki", towers_ozaki, "ell n")->expected(2);
  towers->add_flag("--scan-c2", towers_scan, "scan primes 5 mod 8 in [min, max]");
  towers->add_option("--min", towers_min, "scan start");
  towers->add_option("--max", towers_max, "scan end");

  auto* chars = app.add_subcommand("chars", "Dirichlet characters of a cyclotomic subfield");
  std::string chars_modulus;
  long chars_degree = 0;
  chars->add_option("--modulus", chars_modulus, "cyclotomic level");
  chars->add_option("--degree", chars_degree, "subfield degree");

  auto* hminus = app.add_subcommand("hminus", "relative class number of an imaginary subfield");
  std::string hminus_modulus;
  long hminus_degree = 0;
  hminus->add_option("--modulus", hminus_modulus, "odd prime power conductor");
  hminus->add_option("--degree", hminus_degree, "subfield degree (default: full field)");

  auto* galmod = app.add_subcommand("galmod", "modules over Z[C_p] and their laws");
  long galmod_p = 0;
  std::vector<long> galmod_enum;
  std::vector<std::string> galmod_checks;
  std::string galmod_tate;
  galmod->add_option("--e1e2", galmod_p, "odd prime p");
  galmod->add_option("--enumerate", galmod_enum, "p max_order")->expected(2);
  galmod->add_option("--check", galmod_checks, "inaba, p1am, p3, sf (repeatable)");
  galmod->add_option("--tate", galmod_tate, "module descriptor p:e1,e2,...:rowmajor-sigma");

  auto* suite = app.add_subcommand("paper-suite", "pinned regression suite over all modules");

  for (CLI::App* sub : {sym, quad, genus, predict, towers, chars, hminus, galmod, suite})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    opt.format_set = format_opt->count() > 0;
    if (opt.jobs < 1 || opt.jobs > 256)
      throw cl::argument_error("--jobs out of range (1..256)");
    if (!opt.only.empty() && !suite->parsed())
      throw cl::argument_error("--only applies to paper-suite");
    if (sym->parsed()) return run_symbols(sym_leg, sym_jac, sym_quart, sym_oct, opt);
    if (quad->parsed()) return run_quad(quad_d, quad_range_args, opt);
    if (genus->parsed()) return run_genus(genus_four, genus_scholz, genus_conic, opt);
    if (predict->parsed()) return run_predict(predict_pq_args, predict_m, predict_pqq_args, opt);
    if (towers->parsed())
      return run_towers(towers_c2, towers_pq, towers_ozaki, towers_scan, towers_min,
                        towers_max, opt);
    if (chars->parsed()) return run_chars(chars_modulus, chars_degree, opt);
    if (hminus->parsed()) return run_hminus(hminus_modulus, hminus_degree, opt);
    if (galmod->parsed()) return run_galmod(galmod_p, galmod_enum, galmod_checks, galmod_tate, opt);
    return run_suite(opt);
  } catch (const cl::argument_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cl::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const cl::unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
