#include "wittknot/pretzel.hpp"

#include <algorithm>
#include <stdexcept>

namespace wittknot {

namespace {

bool even(const Int& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

// The closed forms index the even strand last; rotate it there.
std::vector<Int> even_last(const std::vector<Int>& strands) {
  std::vector<Int> out;
  std::vector<Int> evens;
  for (const Int& p : strands)
    (even(p) ? evens : out).push_back(p);
  out.insert(out.end(), evens.begin(), evens.end());
  return out;
}

}  // namespace

PretzelParams PretzelParams::create(std::vector<Int> strands) {
  std::size_t evens = 0;
  for (const Int& p : strands) {
    if (p == 0) throw std::domain_error("zero pretzel strand");
    if (even(p)) ++evens;
  }
  if (evens > 1)
    throw std::domain_error("at most one pretzel strand may be even");
  if (strands.size() % 2 == 0 && evens != 1)
    throw std::domain_error(
        "an even number of strands needs exactly one even strand");
  return PretzelParams{std::move(strands)};
}

Int signed_det_3(const Int& p1, const Int& p2, const Int& p3) {
  return p1 * p2 + p1 * p3 + p2 * p3;
}

Int signed_det_4(const Int& p1, const Int& p2, const Int& p3, const Int& p4) {
  return p1 * p2 * p3 + p1 * p2 * p4 + p1 * p3 * p4 + p2 * p3 * p4;
}

DiagonalForm telescope_simplify(const Int& n, int eps) {
  if (n < 2) throw std::domain_error("telescope needs n >= 2");
  std::vector<Rat> es{Rat(eps * n)};
  for (Int k = 0; k < n; ++k) es.emplace_back(-eps);
  return DiagonalForm(std::move(es));
}

DiagonalForm telescope_chain(const Int& n, int eps) {
  std::vector<Rat> es;
  for (Int k = 1; k < n; ++k) es.emplace_back(-eps * k * (k + 1));
  return DiagonalForm(std::move(es));
}

PretzelClass pretzel3_class(const PretzelParams& params) {
  if (params.strands.size() != 3)
    throw std::domain_error("pretzel3_class needs 3 strands");
  std::vector<Int> p = even_last(params.strands);
  if (!even(p[2]))
    throw std::domain_error("pretzel3_class needs one even strand");

  PretzelClass out;
  out.signed_det = signed_det_3(p[0], p[1], p[2]);

  if (p[0] + p[1] == 0) {
    // The two telescopes cancel and the closed form's last generators
    // degenerate; the class is zero.
    out.phi = DiagonalForm();
    out.sigma = 0;
    return out;
  }

  DiagonalForm phi;
  for (int i = 0; i < 2; ++i)
    phi = direct_sum(phi, telescope_chain(abs(p[i]), sign_of(p[i])));
  Rat second_last = make_rat(-(p[0] + p[1]), p[0] * p[1]);
  Rat last = make_rat(out.signed_det, p[0] + p[1]);
  phi = direct_sum(phi, DiagonalForm({second_last, last}));
  out.phi = phi;

  // (eps1 + eps2) - (p1 + p2) - Sign((p1+p2)/(p1 p2)) + Sign(det/(p1+p2)),
  // which equals the sum of entry signs of phi. The third term is the
  // negated sign of second_last.
  Int sig = sign_of(p[0]) + sign_of(p[1]) - (p[0] + p[1]) +
            sign_of(second_last) + sign_of(last);
  out.sigma = static_cast<int>(sig.get_si());
  return out;
}

PretzelClass pretzel4_class(const PretzelParams& params) {
  if (params.strands.size() != 4)
    throw std::domain_error("pretzel4_class needs 4 strands");
  std::vector<Int> p = even_last(params.strands);

  PretzelClass out;
  out.signed_det = signed_det_4(p[0], p[1], p[2], p[3]);
  if (out.signed_det == 0)
    throw std::domain_error("pretzel4_class needs nonzero determinant");

  Int prod = p[0] * p[1] * p[2] * p[3];
  DiagonalForm phi;
  Int sig = 0;
  for (int i = 0; i < 4; ++i) {
    std::vector<Rat> block{Rat(p[i])};
    for (Int k = 0; k < abs(p[i]); ++k) block.emplace_back(-sign_of(p[i]));
    phi = direct_sum(phi, DiagonalForm(std::move(block)));
    sig += sign_of(p[i]) - p[i];
  }
  Rat last = make_rat(-out.signed_det, prod);
  phi = direct_sum(phi, DiagonalForm::gen(last));
  sig -= sign_of(Int(prod * out.signed_det));
  out.phi = std::move(phi);
  out.sigma = static_cast<int>(sig.get_si());
  return out;
}

namespace {

PretzelCheck compare_forms(DiagonalForm phi, DiagonalForm target) {
  PretzelCheck c;
  c.phi = std::move(phi);
  c.target = std::move(target);
  c.obstructed = !is_equal(c.phi, c.target);
  if (c.obstructed) {
    c.separating = separating_primes(c.phi, c.target);
    if (!c.separating.empty())
      c.witness = witness_at(c.phi, c.target, c.separating.back());
  }
  return c;
}

}  // namespace

PretzelCheck check_pretzel1(const Int& p1, const Int& p3) {
  if (p1 < 7 || even(p1)) throw std::domain_error("need p1 odd and >= 7");
  if (!even(p3)) throw std::domain_error("need p3 even");
  Int d = 4 * p3 - p1 * (p1 - 4);
  if (d <= 0)
    throw std::domain_error("need 4 p3 > p1 (p1 - 4)");
  return compare_forms(DiagonalForm({Rat(-1), Rat(-2), Rat(d)}),
                       DiagonalForm::gen(Rat(-2 * d)));
}

PretzelCheck check_pretzel2(const Int& p) {
  if (p <= 0 || even(p)) throw std::domain_error("need p odd and positive");
  Rat tail = make_rat(-(8 * p + 3), p * (3 * p + 1));
  DiagonalForm phi({Rat(p), Rat(p), Rat(p), Rat(-3 * p - 1), tail, Rat(1)});
  DiagonalForm target({Rat(2), Rat(2 * (8 * p + 3))});
  return compare_forms(std::move(phi), std::move(target));
}

PretzelParams upward_stabilize(const PretzelParams& params, const Int& p,
                               std::size_t pos1, std::size_t pos2) {
  if (even(p))
    throw std::domain_error("stabilizing strands must be odd");
  const std::size_t n = params.strands.size();
  if (pos1 >= pos2 || pos2 > n + 1)
    throw std::domain_error("invalid insertion positions");
  std::vector<Int> out;
  for (std::size_t i = 0; i <= n + 1; ++i) {
    if (i == pos1) out.push_back(p);
    else if (i == pos2) out.push_back(-p);
    else {
      // index into the original list, shifted past the insertions
      std::size_t orig = i - (i > pos1 ? 1 : 0) - (i > pos2 ? 1 : 0);
      out.push_back(params.strands[orig]);
    }
  }
  return PretzelParams::create(std::move(out));
}

}  // namespace wittknot
