#pragma once

#include <optional>
#include <vector>

#include "wittknot/witt.hpp"

namespace wittknot {

// Strand parameters p1..pn of a pretzel knot. To describe a knot at most
// one entry may be even, and exactly one when n is even.
struct PretzelParams {
  std::vector<Int> strands;

  static PretzelParams create(std::vector<Int> strands);
};

// Signed determinants (sum of products of all-but-one strand).
Int signed_det_3(const Int& p1, const Int& p2, const Int& p3);
Int signed_det_4(const Int& p1, const Int& p2, const Int& p3, const Int& p4);

// <eps*n> + n copies of <-eps>; equal in W(Q) to telescope_chain(n, eps).
// Requires n >= 2.
DiagonalForm telescope_simplify(const Int& n, int eps);

// Direct sum over k = 1..n-1 of <-eps * k(k+1)>.
DiagonalForm telescope_chain(const Int& n, int eps);

struct PretzelClass {
  DiagonalForm phi;
  int sigma = 0;
  Int signed_det;
};

// Closed forms for the class, signature and signed determinant; the even
// strand is rotated into the last slot internally (the formulas are
// symmetric in the odd strands).
//
// 3 strands (p1, p2 odd, p3 even != 0), d = signed_det_3:
//   phi = telescopes of p1 and p2 + <-(p1+p2)/(p1 p2)> + <d/(p1+p2)>,
// with the special value phi = 0 when p1 + p2 = 0.
PretzelClass pretzel3_class(const PretzelParams& params);

// 4 strands (p1..p3 odd, p4 even != 0), d = signed_det_4 != 0:
//   phi = sum_i (<p_i> + |p_i| copies of <-eps_i>) + <-d/(p1 p2 p3 p4)>.
PretzelClass pretzel4_class(const PretzelParams& params);

// Result of one of the two family obstruction checks.
struct PretzelCheck {
  bool obstructed = false;
  DiagonalForm phi;     // the class tested
  DiagonalForm target;  // the u = 1 target it was compared against
  std::vector<Int> separating;
  std::optional<LocalWitness> witness;  // at the largest separating prime
};

// Family P(p1, 4-p1, p3): p1 odd >= 7, p3 even with 4 p3 > p1(p1-4).
// Obstructed (u >= 2) iff <-1> + <-2> + <d> differs from <-2d> in W(Q),
// d = 4 p3 - p1(p1-4).
PretzelCheck check_pretzel1(const Int& p1, const Int& p3);

// Family P(p,p,p,-3p-1), p odd > 0. Obstructed iff the six-generator
// closed form differs from <2> + <2(8p+3)>.
PretzelCheck check_pretzel2(const Int& p);

// Insert p at pos1 and -p at pos2 (indices into the extended list,
// pos1 < pos2). p must be odd so the one-even-strand rule is preserved;
// the class is unchanged and the determinant scales by a square, so
// obstruction verdicts transfer.
PretzelParams upward_stabilize(const PretzelParams& params, const Int& p,
                               std::size_t pos1, std::size_t pos2);

}  // namespace wittknot
