#ifndef CYCLOLAB_BQF_HPP
#define CYCLOLAB_BQF_HPP

#include <optional>
#include <vector>

#include "cyclolab/integers.hpp"

namespace cyclolab {

/* Integral binary quadratic form a x^2 + b xy + c y^2. */
struct Form {
  Int a, b, c;

  Int discriminant() const { return b * b - 4 * a * c; }
  Int eval(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }
  bool operator==(const Form&) const = default;
};

/* Lexicographic (a, b, c) order; canonical choices always take the least form. */
bool form_less(const Form& f, const Form& g);

bool is_primitive(const Form& f);

/* Reduction domain test.
 * D < 0 (positive definite): |b| <= a <= c, with b >= 0 if |b| = a or a = c.
 * D > 0 (indefinite):        0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b. */
bool is_reduced(const Form& f);

/* A proper-equivalence reduction of f.  For D < 0 the result is the unique
 * reduced representative; for D > 0 it is some form on the class's cycle. */
Form reduce(const Form& f);

/* One rho step (D > 0).  On reduced forms this is the cycle successor. */
Form rho(const Form& f);

/* All primitive reduced forms of discriminant D, in (a, b, c) order. */
std::vector<Form> reduced_forms(const Int& D);

/* D > 0: the rho-orbits partitioning the reduced forms.  Each cycle starts at
 * its least form and cycles are listed by their least forms, so the output is
 * independent of traversal order. */
std::vector<std::vector<Form>> reduction_cycles(const Int& D);

/* (1, b0, ...) with b0 = D mod 2. */
Form principal_form(const Int& D);

/* Gaussian composition via concordant representatives; result is reduced.
 * Both forms must be primitive with equal discriminants. */
Form compose(const Form& f, const Form& g);

Form inverse(const Form& f);

/* Proper (SL2) equivalence. */
bool equivalent(const Form& f, const Form& g);

/* Unique class label: the reduced form (D < 0) or the least form on the
 * class's cycle (D > 0). */
Form canonical_class_rep(const Form& f);

/* Fundamental unit (x + y sqrt(D))/2 of the order of discriminant D > 0,
 * from the purely periodic continued fraction of ((b0 + sqrt(D))/2 with
 * b0 = max {b <= sqrt(D), b = D (mod 2)}; period found by state repetition.
 * x^2 - D y^2 = 4 * norm with norm = (-1)^period. */
struct FundamentalUnit {
  Int x, y;
  int norm = 1;
  long period = 0;
};
FundamentalUnit fundamental_unit(const Int& D);

/* Class number of the order of discriminant D.  Fundamental D required unless
 * allow_non_fundamental; D = 0, 1 and perfect squares are always rejected.
 * For D > 0 this is the wide class number: cycle count divided by 2 when the
 * fundamental unit has norm +1. */
Int class_number(const Int& D, bool allow_non_fundamental = false);

/* D > 0 fundamental: number of rho-cycles = strict-equivalence class count. */
Int narrow_class_number(const Int& D);

/* Invariant-factor presentation: orders[i] >= 2, orders[i] | orders[i+1],
 * product = group order, generators[i] independent of order orders[i]. */
struct ClassGroup {
  std::vector<Form> generators;
  std::vector<Int> orders;
};

/* Form class group under composition; D < 0 fundamental. */
ClassGroup class_group(const Int& D);

/* D > 0 fundamental: strict-equivalence class group on cycle labels. */
ClassGroup narrow_class_group(const Int& D);

/* D > 0 fundamental: quotient of the strict class group by the class of
 * (-1, b0, ...); trivial quotient step when a norm -1 unit exists. */
ClassGroup wide_class_group(const Int& D);

/* Everything the quad subcommand reports for one field. */
struct QuadFieldReport {
  Int D;
  Int h;
  Int h_plus;
  std::optional<FundamentalUnit> unit; // D > 0 only
  std::vector<Int> class_group;        // invariant factors of the wide group
};
QuadFieldReport quad_report(const Int& D);

} // namespace cyclolab

#endif
