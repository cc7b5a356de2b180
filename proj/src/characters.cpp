#include "cyclolab/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "cyclolab/errors.hpp"

namespace cyclolab {

namespace {

long smallest_primitive_root(long p) {
  Int p1 = Int(p) - 1;
  auto fac = factor(p1);
  for (long g = 2; g < p; ++g) {
    bool primitive = true;
    for (auto& [l, e] : fac)
      if (pow_mod(Int(g), p1 / l, Int(p)) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return g;
  }
  throw std::logic_error("smallest_primitive_root: none found");
}

// a primitive root mod p stays one mod p^k unless g^(p-1) = 1 (mod p^2)
Int primitive_root_prime_power(const Int& p, int e) {
  long g = smallest_primitive_root(to_long(p));
  if (e == 1) return Int(g);
  if (pow_mod(Int(g), p - 1, p * p) == 1) return Int(g) + p;
  return Int(g);
}

struct UnitTable {
  Int f;
  std::vector<UnitGroupGenerator> gens;
  std::unordered_map<long, std::vector<long>> dlog;
};

UnitTable build_unit_table(const Int& f) {
  UnitTable t;
  t.f = f;
  t.gens = unit_group_generators(f);
  size_t count = 1;
  for (const auto& g : t.gens) count *= size_t(g.order);
  std::vector<std::vector<long>> powers(t.gens.size());
  for (size_t i = 0; i < t.gens.size(); ++i) {
    powers[i].resize(t.gens[i].order);
    long v = 1;
    for (long j = 0; j < t.gens[i].order; ++j) {
      powers[i][j] = v;
      v = to_long(Int(Int(v) * t.gens[i].value % f));
    }
  }
  std::vector<long> digits(t.gens.size(), 0);
  for (size_t idx = 0; idx < count; ++idx) {
    Int v = 1;
    for (size_t i = 0; i < digits.size(); ++i) v = v * powers[i][digits[i]] % f;
    t.dlog.emplace(to_long(mod_floor(v, f)), digits);
    for (size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < t.gens[i].order) break;
      digits[i] = 0;
    }
  }
  if (t.dlog.size() != count)
    throw std::logic_error("unit table: generators failed to span the group");
  return t;
}

std::map<long, UnitTable> table_cache;
std::mutex table_mutex;

const UnitTable& unit_table(const Int& f) {
  std::lock_guard<std::mutex> lock(table_mutex);
  long key = to_long(f);
  auto it = table_cache.find(key);
  if (it == table_cache.end()) it = table_cache.emplace(key, build_unit_table(f)).first;
  return it->second;
}

// exponent k with chi(a) = zeta_order^k, or -1 on non-units
long chi_exponent(const UnitTable& t, const DirichletCharacter& chi, const Int& a) {
  Int r = mod_floor(a, t.f);
  if (gcd(r, t.f) != 1) return -1;
  const auto& digits = t.dlog.at(to_long(r));
  long k = 0;
  for (size_t i = 0; i < digits.size(); ++i) {
    long ni = t.gens[i].order;
    // e_i * order / n_i is integral: the value is an n_i-th root of unity
    k = (k + digits[i] % ni * (chi.exponents[i] * chi.order / ni)) % chi.order;
  }
  return k;
}

std::vector<Int> divisors_ascending(const Int& f) {
  std::vector<Int> divs{Int(1)};
  for (auto& [p, e] : factor(f)) {
    size_t base = divs.size();
    Int pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

} // namespace

std::vector<UnitGroupGenerator> unit_group_generators(const Int& f) {
  if (f < 1) throw argument_error("unit_group_generators: modulus must be positive");
  std::vector<UnitGroupGenerator> out;
  for (auto& [p, e] : factor(f)) {
    Int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    Int rest = f / pe;
    auto lift = [&](const Int& g) { return rest == 1 ? mod_floor(g, f) : crt(g, pe, Int(1), rest); };
    if (p == 2) {
      if (e == 2) out.push_back({lift(Int(3)), 2});
      if (e >= 3) {
        out.push_back({lift(pe - 1), 2});
        out.push_back({lift(Int(5)), to_long(pe / 4)});
      }
    } else {
      out.push_back({lift(primitive_root_prime_power(p, e)), to_long(euler_phi(pe))});
    }
  }
  return out;
}

DirichletCharacter make_character(const Int& f, const std::vector<long>& exponents) {
  const UnitTable& t = unit_table(f);
  if (exponents.size() != t.gens.size())
    throw argument_error("make_character: one exponent per generator required");
  DirichletCharacter chi;
  chi.modulus = f;
  chi.exponents.resize(exponents.size());
  chi.order = 1;
  for (size_t i = 0; i < exponents.size(); ++i) {
    long ni = t.gens[i].order;
    long e = ((exponents[i] % ni) + ni) % ni;
    chi.exponents[i] = e;
    chi.order = std::lcm(chi.order, ni / std::gcd(ni, e));
  }
  chi.even = f <= 2 || chi_exponent(t, chi, f - 1) == 0;
  chi.conductor = f;
  for (const Int& c : divisors_ascending(f)) {
    bool trivial_on_kernel = true;
    for (Int a = 1 + c; a < f && trivial_on_kernel; a += c)
      if (gcd(a, f) == 1 && chi_exponent(t, chi, a) != 0) trivial_on_kernel = false;
    if (trivial_on_kernel) {
      chi.conductor = c;
      break;
    }
  }
  return chi;
}

std::vector<DirichletCharacter> all_characters(const Int& f) {
  const UnitTable& t = unit_table(f);
  size_t count = 1;
  for (const auto& g : t.gens) count *= size_t(g.order);
  std::vector<DirichletCharacter> out;
  out.reserve(count);
  std::vector<long> digits(t.gens.size(), 0);
  for (size_t idx = 0; idx < count; ++idx) {
    out.push_back(make_character(f, digits));
    for (size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < t.gens[i].order) break;
      digits[i] = 0;
    }
  }
  return out;
}

CycloRational char_value(const DirichletCharacter& chi, const Int& a) {
  long k = chi_exponent(unit_table(chi.modulus), chi, a);
  if (k < 0) return CycloRational(0);
  return CycloRational::zeta_power(chi.order, k);
}

std::optional<long> char_exponent(const DirichletCharacter& chi, const Int& a) {
  long k = chi_exponent(unit_table(chi.modulus), chi, a);
  if (k < 0) return std::nullopt;
  return k;
}

DirichletCharacter primitive_character(const DirichletCharacter& chi) {
  if (chi.conductor == chi.modulus) return chi;
  const UnitTable& t = unit_table(chi.modulus);
  const UnitTable& tc = unit_table(chi.conductor);
  std::vector<long> exponents(tc.gens.size());
  for (size_t i = 0; i < tc.gens.size(); ++i) {
    // lift the conductor-level generator to a unit of the full modulus
    Int a = 1, m = 1;
    for (auto& [p, e] : factor(chi.modulus)) {
      Int pe = 1;
      for (int j = 0; j < e; ++j) pe *= p;
      Int target = chi.conductor % p == 0 ? mod_floor(tc.gens[i].value, pe) : Int(1);
      a = m == 1 ? target : crt(a, m, target, pe);
      m *= pe;
    }
    long k = chi_exponent(t, chi, a);
    long ni = tc.gens[i].order;
    if ((k * ni) % chi.order != 0)
      throw std::logic_error("primitive_character: value is not an n_i-th root of unity");
    exponents[i] = k * ni / chi.order % ni;
  }
  DirichletCharacter prim = make_character(chi.conductor, exponents);
  if (prim.conductor != chi.conductor || prim.order != chi.order)
    throw std::logic_error("primitive_character: induced character mismatch");
  return prim;
}

SubfieldSpec characters_of_subfield(const Int& n, long d) {
  auto gens = unit_group_generators(n);
  if (gens.size() > 1)
    throw argument_error(
        "characters_of_subfield: unit group is not cyclic; the degree alone is ambiguous");
  long N = gens.empty() ? 1 : gens[0].order;
  if (d < 1 || N % d != 0)
    throw argument_error("characters_of_subfield: degree must divide the unit group order");
  SubfieldSpec spec;
  spec.n = n;
  spec.d = d;
  for (long k = 0; k < d; ++k)
    spec.characters.push_back(
        make_character(n, gens.empty() ? std::vector<long>{} : std::vector<long>{k * (N / d)}));
  return spec;
}

} // namespace cyclolab
