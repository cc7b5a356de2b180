#include "cyclolab/predict.hpp"

#include <algorithm>

#include "cyclolab/genus.hpp"
#include "cyclolab/symbols.hpp"

namespace cyclolab {

std::string target_name(PredictionTarget t) {
  switch (t) {
    case PredictionTarget::K_PLUS_2PART: return "K_PLUS_2PART";
    case PredictionTarget::ALL_SUBFIELDS_CONTAINING_SQRT_PQ: return "ALL_SUBFIELDS_CONTAINING_SQRT_PQ";
    case PredictionTarget::H_PLUS_M: return "H_PLUS_M";
  }
  throw std::logic_error("target_name: unknown tag");
}

std::string proposition_name(PropositionTag t) {
  switch (t) {
    case PropositionTag::P1_i: return "P1_i";
    case PropositionTag::P1_ii: return "P1_ii";
    case PropositionTag::P1_iii: return "P1_iii";
    case PropositionTag::P2: return "P2";
    case PropositionTag::P3: return "P3";
    case PropositionTag::REMARK_8: return "REMARK_8";
  }
  throw std::logic_error("proposition_name: unknown tag");
}

namespace {

std::string show(const Int& n) { return n.get_str(); }

std::string signed_unit(int v) { return v == 1 ? "+1" : "-1"; }

std::string sym_fact(const Int& a, const Int& b, int v) {
  return "(" + show(a) + "/" + show(b) + ") = " + signed_unit(v);
}

std::string quartic_fact(const Int& a, const Int& b, int v) {
  return "(" + show(a) + "/" + show(b) + ")_4 = " + signed_unit(v);
}

bool valid_pq_entry(const Int& n) {
  return n == 8 || (is_prime(n) && mod_floor(n, 4) == 1);
}

} // namespace

PredictionSet predict_pq(const Int& p, const Int& q) {
  if (p == q) throw argument_error("predict: entries must be distinct");
  if (!valid_pq_entry(p) || !valid_pq_entry(q))
    throw argument_error("predict: each entry must be a prime 1 (mod 4) or 8");
  bool with8 = p == 8 || q == 8;
  int base = with8 ? kronecker(Int(8), p == 8 ? q : p) : legendre(p, q);

  PredictionSet out;
  Int m = p * q;
  if (base != 1) {
    out.negative_certificate = "h(K+) is odd: " + sym_fact(p, q, base);
    return out;
  }
  std::string base_fact = sym_fact(p, q, base);
  PropositionTag t1 = with8 ? PropositionTag::REMARK_8 : PropositionTag::P1_i;
  out.predictions.push_back({m, PredictionTarget::K_PLUS_2PART, Int(2), {base_fact}, t1});

  // the pair of quartic symbols, reading (q/8)_4 off the 2-adic expansion
  auto quartic_pair_entry = [](const Int& top, const Int& bottom) {
    return bottom == 8 ? octic_symbol_at_8(top) : quartic_symbol(top, bottom);
  };
  int s_pq = quartic_pair_entry(p, q);
  int s_qp = quartic_pair_entry(q, p);
  std::vector<std::string> quartic_facts{base_fact, quartic_fact(p, q, s_pq), quartic_fact(q, p, s_qp)};
  if (s_pq == s_qp) {
    PropositionTag t2 = with8 ? PropositionTag::REMARK_8 : PropositionTag::P1_ii;
    out.predictions.push_back(
        {m, PredictionTarget::ALL_SUBFIELDS_CONTAINING_SQRT_PQ, Int(2), quartic_facts, t2});
  }
  if (s_pq == 1 && s_qp == 1) {
    PropositionTag t3 = with8 ? PropositionTag::REMARK_8 : PropositionTag::P1_iii;
    out.predictions.push_back({m, PredictionTarget::K_PLUS_2PART, Int(4), quartic_facts, t3});
  }
  return out;
}

std::optional<ParityPrediction> predict_three_primes(const Int& m) {
  if (m < 3) throw argument_error("predict: modulus must be at least 3");
  std::vector<Int> qual;
  for (auto& [pr, e] : factor(m))
    if (mod_floor(pr, 4) == 1) qual.push_back(pr);
  std::sort(qual.begin(), qual.end());
  if (qual.size() < 3) return std::nullopt;

  std::string listing = "qualifying primes:";
  for (const Int& pr : qual) listing += " " + show(pr);

  for (size_t i = 0; i < qual.size(); ++i)
    for (size_t j = i + 1; j < qual.size(); ++j)
      if (legendre(qual[i], qual[j]) == 1)
        return ParityPrediction{m,
                                PredictionTarget::H_PLUS_M,
                                Int(2),
                                {listing, "case: residue pair", sym_fact(qual[i], qual[j], 1)},
                                PropositionTag::P2};

  // every pair is a mutual nonresidue; a quaternion extension does the work
  std::vector<std::string> premises{listing, "case: quaternion"};
  for (int i : {0, 1})
    for (int j = i + 1; j < 3; ++j)
      premises.push_back(sym_fact(qual[i], qual[j], -1));
  return ParityPrediction{m, PredictionTarget::H_PLUS_M, Int(2), premises, PropositionTag::P2};
}

std::optional<ParityPrediction> predict_pqq(const Int& p, const Int& q, const Int& q2) {
  if (!is_prime(p) || mod_floor(p, 4) != 1)
    throw argument_error("predict: p must be a prime 1 (mod 4)");
  for (const Int& v : {q, q2})
    if (!is_prime(v) || mod_floor(v, 4) != 3)
      throw argument_error("predict: q and q2 must be primes 3 (mod 4)");
  if (q == q2) throw argument_error("predict: entries must be distinct");

  int s1 = legendre(p, q), s2 = legendre(p, q2);
  if (s1 != 1 || s2 != 1) return std::nullopt;

  std::vector<std::string> premises{sym_fact(p, q, 1), sym_fact(p, q2, 1)};
  std::pair<int, int> sigs[2];
  int k = 0;
  for (const Int& qq : {q, q2}) {
    ConicSolution s = solve_conic(p, qq);
    auto sig = signature_of_alpha(s, p);
    sigs[k++] = sig;
    premises.push_back("x^2 - " + show(p) + " y^2 = -" + show(qq) + " z^2: (" + show(s.x) + ", " +
                       show(s.y) + ", " + show(s.z) + "), signature (" + signed_unit(sig.first) +
                       ", " + signed_unit(sig.second) + ")");
  }
  int pr1 = sigs[0].first * sigs[1].first, pr2 = sigs[0].second * sigs[1].second;
  if (pr1 != pr2) throw std::logic_error("predict: conjugate product is not definite");
  premises.push_back(pr1 == 1 ? "conjugate product totally positive"
                              : "conjugate product totally negative");
  return ParityPrediction{p * q * q2, PredictionTarget::H_PLUS_M, Int(2), premises,
                          PropositionTag::P3};
}

} // namespace cyclolab
