#include "cyclolab/bqf.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cyclolab {

bool form_less(const Form& f, const Form& g) {
  if (f.a != g.a) return f.a < g.a;
  if (f.b != g.b) return f.b < g.b;
  return f.c < g.c;
}

bool is_primitive(const Form& f) {
  return gcd(gcd(f.a, f.b), f.c) == 1;
}

namespace {

struct FormLess {
  bool operator()(const Form& f, const Form& g) const { return form_less(f, g); }
};

void check_discriminant(const Int& D, bool allow_non_fundamental) {
  if (D == 0 || D == 1) throw argument_error("discriminant must not be 0 or 1");
  Int r = mod_floor(D, 4);
  if (r != 0 && r != 1) throw argument_error("discriminant must be 0 or 1 (mod 4)");
  if (D > 0 && mpz_perfect_square_p(D.get_mpz_t()))
    throw argument_error("positive discriminant must not be a perfect square");
  if (!allow_non_fundamental && !is_fundamental_discriminant(D))
    throw argument_error("discriminant is not fundamental (pass the order-permitting flag to allow it)");
}

bool reduced_definite(const Form& f) {
  if (f.a <= 0) return false;
  Int ab = abs(f.b);
  if (!(ab <= f.a && f.a <= f.c)) return false;
  if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

// 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, in exact arithmetic.
bool reduced_indefinite(const Form& f, const Int& D) {
  if (f.b <= 0) return false;
  if (f.b * f.b >= D) return false;
  Int t = 2 * abs(f.a);
  if ((t + f.b) * (t + f.b) <= D) return false;         // 2|a| <= sqrt(D) - b
  if (t > f.b && (t - f.b) * (t - f.b) >= D) return false; // 2|a| >= sqrt(D) + b
  return true;
}

Form normalize_definite(Form f) {
  // b into (-a, a]
  Int r = f.a - mod_floor(f.a - f.b, 2 * f.a);
  f.c = f.c + (r * r - f.b * f.b) / (4 * f.a); // keeps the discriminant
  f.b = r;
  return f;
}

Form reduce_definite(Form f) {
  if (f.a <= 0) throw argument_error("reduce: definite form must have a > 0");
  for (long guard = 0; guard < 1000000; ++guard) {
    f = normalize_definite(f);
    if (f.a > f.c) {
      f = Form{f.c, -f.b, f.a};
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
  throw std::logic_error("reduce: definite reduction did not terminate");
}

Form rho_indefinite(const Form& f, const Int& D, const Int& sqrtD) {
  const Int& c = f.c;
  if (c == 0) throw argument_error("rho: degenerate form (square discriminant)");
  Int ac = abs(c);
  Int two_ac = 2 * ac;
  Int r;
  if (ac > sqrtD) {
    r = mod_floor(-f.b + ac, two_ac) - ac; // (-|c|, |c|]
  } else {
    r = sqrtD - mod_floor(sqrtD + f.b, two_ac); // (sqrt(D) - 2|c|, sqrt(D)]
  }
  Int cc = (r * r - D) / (4 * c);
  return Form{c, r, cc};
}

} // namespace

bool is_reduced(const Form& f) {
  Int D = f.discriminant();
  if (D < 0) return reduced_definite(f);
  if (D > 0 && mpz_perfect_square_p(D.get_mpz_t()) == 0) return reduced_indefinite(f, D);
  throw argument_error("is_reduced: discriminant must be a nonsquare");
}

Form rho(const Form& f) {
  Int D = f.discriminant();
  if (D <= 0 || mpz_perfect_square_p(D.get_mpz_t()))
    throw argument_error("rho: indefinite nonsquare discriminant required");
  return rho_indefinite(f, D, isqrt(D));
}

Form reduce(const Form& f) {
  Int D = f.discriminant();
  if (D < 0) return reduce_definite(f);
  if (D == 0 || mpz_perfect_square_p(D.get_mpz_t()))
    throw argument_error("reduce: discriminant must be a nonsquare");
  Int s = isqrt(D);
  Form g = f;
  for (long guard = 0; guard < 10000000; ++guard) {
    if (reduced_indefinite(g, D)) return g;
    g = rho_indefinite(g, D, s);
  }
  throw std::logic_error("reduce: indefinite reduction did not terminate");
}

std::vector<Form> reduced_forms(const Int& D) {
  check_discriminant(D, true);
  std::vector<Form> out;
  if (D < 0) {
    Int amax = isqrt(-D / 3);
    for (Int a = 1; a <= amax; ++a) {
      Int foura = 4 * a;
      for (Int b = -a + 1; b <= a; ++b) {
        if (mod_floor(b, 2) != mod_floor(D, 2)) continue;
        Int num = b * b - D;
        if (num % foura != 0) continue;
        Int c = num / foura;
        if (c < a) continue;
        if (a == c && b < 0) continue;
        Form f{a, b, c};
        if (is_primitive(f)) out.push_back(f);
      }
    }
  } else {
    Int s = isqrt(D);
    Int b0 = mod_floor(D, 2) == 0 ? Int(2) : Int(1);
    for (Int b = b0; b <= s; b += 2) {
      Int N = (D - b * b) / 4; // positive, b = D (mod 2)
      // 2|a| ranges inside (sqrt(D) - b, sqrt(D) + b)
      for (Int aa = 1; 2 * aa < s + b + 1; ++aa) {
        if (N % aa != 0) continue;
        Form f{aa, b, -(N / aa)};
        if (!reduced_indefinite(f, D)) continue;
        if (!is_primitive(f)) continue;
        out.push_back(f);
        out.push_back(Form{-f.a, f.b, -f.c});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Form& x, const Form& y) { return form_less(x, y); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Form>> reduction_cycles(const Int& D) {
  if (D <= 0) throw argument_error("reduction_cycles: positive discriminant required");
  std::vector<Form> forms = reduced_forms(D);
  std::map<Form, bool, FormLess> seen;
  for (const Form& f : forms) seen[f] = false;
  std::vector<std::vector<Form>> cycles;
  for (const Form& f : forms) {
    if (seen[f]) continue;
    std::vector<Form> cyc;
    Form g = f;
    do {
      auto it = seen.find(g);
      if (it == seen.end() || it->second)
        throw std::logic_error("reduction_cycles: rho left the reduced set");
      it->second = true;
      cyc.push_back(g);
      g = rho(g);
    } while (!(g == f));
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

Form principal_form(const Int& D) {
  check_discriminant(D, true);
  Int b0 = mod_floor(D, 2);
  return Form{Int(1), b0, (b0 * b0 - D) / 4};
}

namespace {

/* Primitive vector (x, y) with gcd(g(x, y), n) = 1, for primitive g. */
void coprime_representation(const Form& g, const Int& n, Int& x, Int& y) {
  Int L(1);
  x = 1;
  y = 0;
  std::vector<std::pair<Int, int>> fac = factor(abs(n));
  for (auto& [p, e] : fac) {
    Int xr, yr;
    if (g.a % p != 0) {
      xr = 1; yr = 0;
    } else if (g.c % p != 0) {
      xr = 0; yr = 1;
    } else {
      xr = 1; yr = 1; // then g(1,1) = a + b + c = b (mod p), nonzero by primitivity
    }
    x = crt(x, L, xr, p);
    y = crt(y, L, yr, p);
    L *= p;
  }
  if (x == 0) x = L == 1 ? Int(1) : L;
  for (Int k = 0;; ++k) {
    if (gcd(x, y + k * L) == 1) {
      y += k * L;
      return;
    }
    if (k > abs(x) + 2) throw std::logic_error("coprime_representation: no primitive lift");
  }
}

/* g transformed by [[x, z], [y, w]] with xw - yz = 1; first coefficient g(x, y). */
Form transform(const Form& g, const Int& x, const Int& y) {
  Int u, v;
  Int d = xgcd(x, y, u, v);
  if (d != 1) throw argument_error("transform: vector not primitive");
  Int z = -v, w = u;
  Int A = g.eval(x, y);
  Int B = 2 * (g.a * x * z + g.c * y * w) + g.b * (x * w + y * z);
  Int C = g.eval(z, w);
  return Form{A, B, C};
}

} // namespace

Form compose(const Form& f, const Form& g) {
  Int D = f.discriminant();
  if (g.discriminant() != D) throw argument_error("compose: discriminants differ");
  if (!is_primitive(f) || !is_primitive(g)) throw argument_error("compose: forms must be primitive");
  Int x, y;
  coprime_representation(g, f.a, x, y);
  Form g2 = transform(g, x, y);
  if (g2.discriminant() != D) throw std::logic_error("compose: transform broke the discriminant");
  // b = f.b (mod 2 f.a), b = g2.b (mod 2 g2.a): solve with t = (g2.b - f.b)/2 * f.a^{-1}
  Int a1 = f.a, a2 = g2.a;
  Int m2 = abs(a2);
  Int B;
  if (m2 == 1) {
    B = f.b;
  } else {
    Int t = mod_floor((g2.b - f.b) / 2 * inv_mod(mod_floor(a1, m2), m2), m2);
    B = f.b + 2 * a1 * t;
  }
  Int A = a1 * a2;
  Int num = B * B - D;
  if (num % (4 * A) != 0) throw std::logic_error("compose: composed middle coefficient invalid");
  Form h{A, B, num / (4 * A)};
  return reduce(h);
}

Form inverse(const Form& f) {
  return reduce(Form{f.a, -f.b, f.c});
}

Form canonical_class_rep(const Form& f) {
  Int D = f.discriminant();
  Form r = reduce(f);
  if (D < 0) return r;
  Form best = r;
  Form g = rho(r);
  long guard = 0;
  while (!(g == r)) {
    if (form_less(g, best)) best = g;
    g = rho(g);
    if (++guard > 10000000) throw std::logic_error("canonical_class_rep: cycle did not close");
  }
  return best;
}

bool equivalent(const Form& f, const Form& g) {
  if (f.discriminant() != g.discriminant()) return false;
  return canonical_class_rep(f) == canonical_class_rep(g);
}

FundamentalUnit fundamental_unit(const Int& D) {
  if (D <= 0) throw argument_error("fundamental_unit: positive discriminant required");
  check_discriminant(D, true);
  Int s = isqrt(D);
  Int b0 = s;
  if (mod_floor(b0, 2) != mod_floor(D, 2)) b0 -= 1;
  // purely periodic continued fraction of (b0 + sqrt(D))/2
  Int P = b0, Q = 2;
  const Int P0 = P, Q0 = Q;
  Int qm2 = 1, qm1 = 0; // convergent denominators q_{i-2}, q_{i-1}
  for (long i = 0; i < 100000000; ++i) {
    Int a = (P + s) / Q;
    Int qi = a * qm1 + qm2;
    Int Pn = a * Q - P;
    Int Qn = (D - Pn * Pn) / Q;
    if (Pn == P0 && Qn == Q0) {
      long period = i + 1;
      FundamentalUnit u;
      u.x = qi * b0 + 2 * qm1;
      u.y = qi;
      u.norm = period % 2 == 0 ? 1 : -1;
      u.period = period;
      if (u.x * u.x - D * u.y * u.y != 4 * u.norm)
        throw std::logic_error("fundamental_unit: Pell relation failed");
      return u;
    }
    qm2 = qm1;
    qm1 = qi;
    P = Pn;
    Q = Qn;
  }
  throw resource_error("fundamental_unit: period not found within iteration bound");
}

Int class_number(const Int& D, bool allow_non_fundamental) {
  check_discriminant(D, allow_non_fundamental);
  if (D < 0) return Int(reduced_forms(D).size());
  Int cycles(reduction_cycles(D).size());
  if (fundamental_unit(D).norm == -1) return cycles;
  if (mod_floor(cycles, 2) != 0)
    throw std::logic_error("class_number: odd cycle count with a norm +1 unit");
  return cycles / 2;
}

Int narrow_class_number(const Int& D) {
  if (D <= 0) throw argument_error("narrow_class_number: positive discriminant required");
  check_discriminant(D, false);
  return Int(reduction_cycles(D).size());
}

namespace {

/* A finite abelian group on canonical form labels. */
struct FormGroup {
  std::vector<Form> elems; // sorted canonical representatives
  Form id;
  std::function<Form(const Form&, const Form&)> mul;
};

Form group_pow(const FormGroup& G, const Form& g, Int e) {
  Form r = G.id;
  Form p = g;
  while (e > 0) {
    if (mod_floor(e, 2) == 1) r = G.mul(r, p);
    e >>= 1;
    if (e > 0) p = G.mul(p, p);
  }
  return r;
}

Int element_order(const FormGroup& G, const Form& g, const Int& group_order) {
  Int ord = group_order;
  for (auto& [p, e] : factor(group_order)) {
    for (int i = 0; i < e; ++i) {
      if (group_pow(G, g, ord / p) == G.id)
        ord /= p;
      else
        break;
    }
  }
  return ord;
}

/* Invariant factors with honest generators: descending chain produced by
 * splitting off a cyclic subgroup of maximal order, then recursing on the
 * quotient and correcting the lifts so their orders survive. */
std::vector<std::pair<Form, Int>> abelian_structure(const FormGroup& G) {
  Int n(G.elems.size());
  if (n == 1) return {};
  // maximal-order element; exponent of a finite abelian group is attained
  Int expo(1);
  std::map<Form, Int, FormLess> ord;
  for (const Form& x : G.elems) {
    Int o = element_order(G, x, n);
    ord[x] = o;
    expo = lcm(expo, o);
  }
  Form g = G.id;
  for (const Form& x : G.elems)
    if (ord[x] == expo) { g = x; break; }
  if (g == G.id && expo != 1) throw std::logic_error("abelian_structure: exponent not attained");
  if (expo == n) return {{g, expo}}; // cyclic: no quotient step needed
  // discrete logs in <g>
  std::map<Form, Int, FormLess> dlog;
  Form p = G.id;
  for (Int k = 0; k < expo; ++k) {
    dlog[p] = k;
    p = G.mul(p, g);
  }
  // quotient by <g>: coset label = least element of the coset
  std::map<Form, Form, FormLess> coset;
  for (const Form& x : G.elems) {
    Form best = x;
    Form y = x;
    for (Int k = 1; k < expo; ++k) {
      y = G.mul(y, g);
      if (form_less(y, best)) best = y;
    }
    coset[x] = best;
  }
  FormGroup Q;
  Q.id = coset.at(G.id);
  for (auto& [x, r] : coset)
    if (x == r) Q.elems.push_back(r);
  std::sort(Q.elems.begin(), Q.elems.end(), [](const Form& x, const Form& y) { return form_less(x, y); });
  auto base_mul = G.mul;
  auto coset_of = coset;
  Q.mul = [base_mul, coset_of](const Form& x, const Form& y) { return coset_of.at(base_mul(x, y)); };

  std::vector<std::pair<Form, Int>> rest = abelian_structure(Q);
  std::vector<std::pair<Form, Int>> out;
  out.emplace_back(g, expo);
  for (auto& [r, m] : rest) {
    // lift r so its order in G equals its order m in Q: r^m = g^s with m | s
    Form rm = group_pow(G, r, m);
    Int s = dlog.at(rm);
    Form fixed = r;
    if (s != 0) {
      Int t = mod_floor(-(s / m), expo);
      fixed = G.mul(r, group_pow(G, g, t));
    }
    out.emplace_back(fixed, m);
  }
  return out;
}

ClassGroup package_structure(const FormGroup& G) {
  auto gens = abelian_structure(G);
  // descending chain -> ascending, each dividing the next
  std::reverse(gens.begin(), gens.end());
  ClassGroup cg;
  for (auto& [g, o] : gens) {
    if (o == 1) continue;
    cg.generators.push_back(g);
    cg.orders.push_back(o);
  }
  return cg;
}

FormGroup definite_group(const Int& D) {
  FormGroup G;
  G.elems = reduced_forms(D);
  G.id = reduce(principal_form(D));
  G.mul = [](const Form& x, const Form& y) { return compose(x, y); };
  return G;
}

FormGroup narrow_group(const Int& D) {
  FormGroup G;
  for (auto& cyc : reduction_cycles(D)) {
    Form best = cyc.front();
    for (const Form& f : cyc)
      if (form_less(f, best)) best = f;
    G.elems.push_back(best);
  }
  std::sort(G.elems.begin(), G.elems.end(), [](const Form& x, const Form& y) { return form_less(x, y); });
  G.id = canonical_class_rep(principal_form(D));
  G.mul = [](const Form& x, const Form& y) { return canonical_class_rep(compose(x, y)); };
  return G;
}

/* Quotient of G by the subgroup generated by w. */
FormGroup quotient_by(const FormGroup& G, const Form& w) {
  std::vector<Form> sub{G.id};
  Form p = w;
  while (!(p == G.id)) {
    sub.push_back(p);
    p = G.mul(p, w);
  }
  std::map<Form, Form, FormLess> coset;
  for (const Form& x : G.elems) {
    Form best = x;
    for (const Form& h : sub) {
      Form y = G.mul(x, h);
      if (form_less(y, best)) best = y;
    }
    coset[x] = best;
  }
  FormGroup Q;
  Q.id = coset.at(G.id);
  for (auto& [x, r] : coset)
    if (x == r) Q.elems.push_back(r);
  std::sort(Q.elems.begin(), Q.elems.end(), [](const Form& x, const Form& y) { return form_less(x, y); });
  auto base_mul = G.mul;
  auto coset_of = coset;
  Q.mul = [base_mul, coset_of](const Form& x, const Form& y) { return coset_of.at(base_mul(x, y)); };
  return Q;
}

} // namespace

ClassGroup class_group(const Int& D) {
  if (D >= 0) throw argument_error("class_group: negative fundamental discriminant required");
  check_discriminant(D, false);
  return package_structure(definite_group(D));
}

ClassGroup narrow_class_group(const Int& D) {
  if (D <= 0) throw argument_error("narrow_class_group: positive discriminant required");
  check_discriminant(D, false);
  return package_structure(narrow_group(D));
}

ClassGroup wide_class_group(const Int& D) {
  if (D <= 0) throw argument_error("wide_class_group: positive discriminant required");
  check_discriminant(D, false);
  FormGroup N = narrow_group(D);
  Form pf = principal_form(D);
  Form neg = canonical_class_rep(Form{-pf.a, pf.b, -pf.c});
  return package_structure(quotient_by(N, neg));
}

QuadFieldReport quad_report(const Int& D) {
  check_discriminant(D, false);
  QuadFieldReport r;
  r.D = D;
  if (D < 0) {
    ClassGroup g = class_group(D);
    r.h = 1;
    for (const Int& o : g.orders) r.h *= o;
    r.h_plus = r.h;
    r.class_group = g.orders;
  } else {
    r.unit = fundamental_unit(D);
    r.h_plus = narrow_class_number(D);
    r.h = r.unit->norm == -1 ? r.h_plus : r.h_plus / 2;
    ClassGroup g = wide_class_group(D);
    r.class_group = g.orders;
    Int prod(1);
    for (const Int& o : g.orders) prod *= o;
    if (prod != r.h) throw std::logic_error("quad_report: wide group order mismatch");
  }
  return r;
}

} // namespace cyclolab
