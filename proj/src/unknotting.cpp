#include "wittknot/unknotting.hpp"

#include <stdexcept>

namespace wittknot {

namespace {

void require_odd_positive(const Int& d, const char* what) {
  if (d <= 0 || mpz_even_p(d.get_mpz_t()))
    throw std::domain_error(std::string(what) + " must be odd and positive");
}

}  // namespace

CrossingContext CrossingContext::create(Int det_minus, Int det_plus,
                                        int sig_minus, int sig_plus) {
  require_odd_positive(det_minus, "det(K-)");
  require_odd_positive(det_plus, "det(K+)");
  const int gap = sig_plus - sig_minus;
  if (gap != 0 && gap != -2)
    throw std::domain_error("impossible signature jump");
  return CrossingContext{std::move(det_minus), std::move(det_plus), sig_minus,
                         sig_plus};
}

DiagonalForm crossing_change_image(const DiagonalForm& phi_minus,
                                   const CrossingContext& ctx) {
  const bool equal = ctx.sig_plus == ctx.sig_minus;
  Rat gen = make_rat(2 * ctx.det_plus, ctx.det_minus);
  if (!equal) gen = -gen;
  return direct_sum(phi_minus,
                    DiagonalForm({gen, Rat(-2)}));
}

DiagonalForm crossing_change_preimage(const DiagonalForm& phi_plus,
                                      const CrossingContext& ctx) {
  const bool equal = ctx.sig_plus == ctx.sig_minus;
  Rat gen = make_rat(2 * ctx.det_minus, ctx.det_plus);
  if (equal) gen = -gen;
  return direct_sum(phi_plus, DiagonalForm({gen, Rat(2)}));
}

Rat solve_a(const CrossingContext& ctx) {
  if (ctx.sig_plus == ctx.sig_minus) {
    if (ctx.det_minus == ctx.det_plus)
      throw std::domain_error("a undefined: equal determinants");
    return make_rat(2 * ctx.det_minus, ctx.det_minus - ctx.det_plus);
  }
  return make_rat(2 * ctx.det_minus, ctx.det_minus + ctx.det_plus);
}

namespace {

// Largest separating prime; 0 when the set is empty.
Int largest(const std::vector<Int>& primes) {
  return primes.empty() ? Int(0) : primes.back();
}

CaseResult run_case(const DiagonalForm& phi, DiagonalForm target) {
  CaseResult r;
  r.target = std::move(target);
  if (is_equal(phi, r.target)) {
    r.status = CaseStatus::Consistent;
    return r;
  }
  r.status = CaseStatus::Excluded;
  r.separating = separating_primes(phi, r.target);
  if (r.separating.empty())
    r.by_signature = true;  // invariants differ only in the signature
  else
    r.witness = witness_at(phi, r.target, largest(r.separating));
  return r;
}

CaseResult signature_case() {
  CaseResult r;
  r.status = CaseStatus::Excluded;
  r.by_signature = true;
  return r;
}

}  // namespace

ObstructionVerdict u1_obstruction(const DiagonalForm& phi, const Int& det,
                                  int sigma) {
  require_odd_positive(det, "det");
  ObstructionVerdict v;

  // A positive change to the unknot needs sigma in {2, 0}; a negative one
  // needs sigma in {0, -2}. Anything else fails on the signature alone.
  if (sigma == 2)
    v.positive_case = run_case(phi, DiagonalForm({Rat(2 * det), Rat(2)}));
  else if (sigma == 0)
    v.positive_case = run_case(phi, DiagonalForm({Rat(-2 * det), Rat(2)}));
  else
    v.positive_case = signature_case();

  if (sigma == 0)
    v.negative_case = run_case(phi, DiagonalForm({Rat(2 * det), Rat(-2)}));
  else if (sigma == -2)
    v.negative_case = run_case(phi, DiagonalForm({Rat(-2 * det), Rat(-2)}));
  else
    v.negative_case = signature_case();

  v.obstructed = v.positive_case.status == CaseStatus::Excluded &&
                 v.negative_case.status == CaseStatus::Excluded;
  v.signature_excluded =
      v.positive_case.by_signature && v.negative_case.by_signature;

  if (v.obstructed && !v.signature_excluded) {
    // Verdict witness: the largest prime separating every prime-excluded
    // case, rendered from the first excluded case; when no prime works
    // for all cases, fall back to the first excluded case's own witness.
    const CaseResult* first = nullptr;
    std::vector<Int> common;
    bool have_common = false;
    for (const CaseResult* c : {&v.positive_case, &v.negative_case}) {
      if (c->status != CaseStatus::Excluded || c->by_signature) continue;
      if (!first) first = c;
      if (!have_common) {
        common = c->separating;
        have_common = true;
      } else {
        std::vector<Int> next;
        for (const Int& p : common)
          for (const Int& q : c->separating)
            if (p == q) next.push_back(p);
        common = std::move(next);
      }
    }
    if (first) {
      Int p = largest(common);
      if (p == 0) p = largest(first->separating);
      v.witness = witness_at(phi, first->target, p);
    }
  }
  return v;
}

DiagonalForm u2_target_forms(const Int& det_K, const Int& det_L, int sigma_K,
                             U2Case c, U2Signs signs) {
  require_odd_positive(det_K, "det K");
  require_odd_positive(det_L, "det L");
  const Rat kl(2 * det_K * det_L);
  const Rat l(2 * det_L);
  const bool pm = signs == U2Signs::PlusMinus;
  switch (c) {
    case U2Case::NegNeg:
      if (sigma_K == -4) return DiagonalForm({-kl, -l, Rat(-1), Rat(-1)});
      if (sigma_K == -2)
        return pm ? DiagonalForm({kl, -l, Rat(-1), Rat(-1)})
                  : DiagonalForm({-kl, l, Rat(-1), Rat(-1)});
      if (sigma_K == 0) return DiagonalForm({kl, l, Rat(-1), Rat(-1)});
      break;
    case U2Case::PosNeg:
      if (sigma_K == -2) return DiagonalForm({-kl, -l});
      if (sigma_K == 0)
        return pm ? DiagonalForm({kl, -l}) : DiagonalForm({-kl, l});
      break;
    case U2Case::PosPos:
      if (sigma_K == 0) return DiagonalForm({-kl, -l, Rat(1), Rat(1)});
      break;
  }
  throw std::domain_error("no target form for this case and signature");
}

std::vector<DiagonalForm> u2_all_targets(const Int& det_K, const Int& det_L,
                                         int sigma_K) {
  std::vector<DiagonalForm> rows;
  switch (sigma_K) {
    case -4:
      rows.push_back(u2_target_forms(det_K, det_L, sigma_K, U2Case::NegNeg));
      break;
    case -2:
      rows.push_back(u2_target_forms(det_K, det_L, sigma_K, U2Case::NegNeg,
                                     U2Signs::PlusMinus));
      rows.push_back(u2_target_forms(det_K, det_L, sigma_K, U2Case::NegNeg,
                                     U2Signs::MinusPlus));
      rows.push_back(u2_target_forms(det_K, det_L, sigma_K, U2Case::PosNeg));
      break;
    case 0:
      rows.push_back(u2_target_forms(det_K, det_L, sigma_K, U2Case::NegNeg));
      rows.push_back(u2_target_forms(det_K, det_L, sigma_K, U2Case::PosNeg,
                                     U2Signs::PlusMinus));
      rows.push_back(u2_target_forms(det_K, det_L, sigma_K, U2Case::PosNeg,
                                     U2Signs::MinusPlus));
      rows.push_back(u2_target_forms(det_K, det_L, sigma_K, U2Case::PosPos));
      break;
    default:
      throw std::domain_error("signature must be 0, -2 or -4");
  }
  return rows;
}

std::vector<Int> u2_candidate_filter(const DiagonalForm& phi_K,
                                     const Int& det_K, int sigma_K,
                                     const std::vector<Int>& d_values) {
  std::vector<Int> out;
  for (const Int& d : d_values) {
    for (const DiagonalForm& row : u2_all_targets(det_K, d, sigma_K)) {
      if (is_equal(phi_K, row)) {
        out.push_back(d);
        break;
      }
    }
  }
  return out;
}

DiagonalForm chain_form(const std::vector<Int>& dets) {
  if (dets.size() < 2)
    throw std::domain_error("need the full determinant chain down to 1");
  if (dets.back() != 1)
    throw std::domain_error("the chain must end at the unknot (det 1)");
  for (const Int& d : dets) require_odd_positive(d, "chain determinant");
  DiagonalForm out;
  for (std::size_t i = 0; i + 1 < dets.size(); ++i)
    out = direct_sum(
        out, DiagonalForm({Rat(-2 * dets[i + 1] * dets[i]), Rat(-2)}));
  return out;
}

Int signature_lower_bound(int sigma) {
  if (sigma % 2 != 0)
    throw std::domain_error("knot signatures are even");
  return Int(sigma < 0 ? -sigma : sigma) / 2;
}

LensSurgeryDescription LensSurgeryDescription::create(Int p, Int q) {
  if (p == 0) throw std::domain_error("lens space with p = 0");
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw std::domain_error("lens parameters must be coprime");
  return LensSurgeryDescription{std::move(p), std::move(q)};
}

bool lickorish_solvable(const LensSurgeryDescription& lens, const Int& det) {
  require_odd_positive(det, "det");
  if (abs(lens.p) != det)
    throw std::domain_error("|p| must equal the knot determinant");
  // q == +-2 t^2 (mod det) for some t; t and det - t give the same square,
  // so scanning t <= det/2 suffices.
  Int qr = ((lens.q % det) + det) % det;
  for (Int t = 0; 2 * t <= det; ++t) {
    Int s = 2 * t * t % det;
    if (s == qr || (det - s) % det == qr) return true;
  }
  return false;
}

}  // namespace wittknot
