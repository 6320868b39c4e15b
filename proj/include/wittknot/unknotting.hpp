#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wittknot/witt.hpp"

namespace wittknot {

// Data of a single positive crossing change K- -> K+. A positive change
// keeps the signature or lowers it by 2, so sig_plus - sig_minus must lie
// in {0, -2}; both determinants are odd and positive.
struct CrossingContext {
  Int det_minus;
  Int det_plus;
  int sig_minus = 0;
  int sig_plus = 0;

  static CrossingContext create(Int det_minus, Int det_plus, int sig_minus,
                                int sig_plus);
};

// phi(K+) from phi(K-):
//   sigma equal : phi(K-) + <2 det+ / det-> + <-2>
//   sigma drops : phi(K-) + <-2 det+ / det-> + <-2>
DiagonalForm crossing_change_image(const DiagonalForm& phi_minus,
                                   const CrossingContext& ctx);

// The reverse direction, phi(K-) from phi(K+):
//   sigma equal : phi(K+) + <-2 det- / det+> + <2>
//   sigma drops : phi(K+) + <2 det- / det+> + <2>
DiagonalForm crossing_change_preimage(const DiagonalForm& phi_plus,
                                      const CrossingContext& ctx);

// The scalar a with det+ = det- * |(a-2)/a|:
//   sigma equal : a = 2 det- / (det- - det+)   (undefined if det- == det+)
//   sigma drops : a = 2 det- / (det- + det+)
Rat solve_a(const CrossingContext& ctx);

enum class CaseStatus { Consistent, Excluded, NotApplicable };

// Outcome of testing one sign case of the unknotting-number-one relation.
struct CaseResult {
  CaseStatus status = CaseStatus::NotApplicable;
  bool by_signature = false;  // excluded because no signature value fits
  DiagonalForm target;        // the form phi was compared against
  std::vector<Int> separating;  // primes where the invariants differ
  std::optional<LocalWitness> witness;  // rendered at the chosen prime
};

// Verdict over both crossing signs. A knot with unknotting number one
// must satisfy at least one applicable case; `obstructed` means every
// applicable case is excluded, so u >= 2.
struct ObstructionVerdict {
  CaseResult positive_case;
  CaseResult negative_case;
  bool obstructed = false;
  bool signature_excluded = false;  // |sigma| > 2 shortcut
  // Verdict-level witness: the largest prime separating every excluded
  // case, rendered from the first excluded case; absent when the
  // exclusion is by signature alone or no common prime exists.
  std::optional<LocalWitness> witness;
};

// Tests phi against the u = 1 target forms:
//   positive change: <2 det> + <2>  (sigma = 2),  <-2 det> + <2>  (sigma = 0)
//   negative change: <2 det> + <-2> (sigma = 0),  <-2 det> + <-2> (sigma = -2)
// |sigma| > 2 excludes both signs outright. det must be odd and positive.
ObstructionVerdict u1_obstruction(const DiagonalForm& phi, const Int& det,
                                  int sigma);

// The target forms phi(K) must equal when u(K) = 2 and L is the knot after
// the first of the two crossing changes; K is taken with sigma(K) <= 0.
enum class U2Case { NegNeg, PosNeg, PosPos };
enum class U2Signs { PlusMinus, MinusPlus };  // the (+,-) / (-,+) choices

DiagonalForm u2_target_forms(const Int& det_K, const Int& det_L, int sigma_K,
                             U2Case c, U2Signs signs = U2Signs::PlusMinus);

// All rows applicable to sigma_K (every case and sign choice).
std::vector<DiagonalForm> u2_all_targets(const Int& det_K, const Int& det_L,
                                         int sigma_K);

// The d in d_values for which some applicable row equals phi_K.
std::vector<Int> u2_candidate_filter(const DiagonalForm& phi_K,
                                     const Int& det_K, int sigma_K,
                                     const std::vector<Int>& d_values);

// For a knot with sigma = -2n and u = n passing through knots of
// determinants dets[0] (= det K), ..., dets[n] (= 1, the unknot):
// the direct sum of <-2 d_{i+1} d_i> + <-2> over the n steps.
DiagonalForm chain_form(const std::vector<Int>& dets);

// |sigma| / 2; throws on odd sigma.
Int signature_lower_bound(int sigma);

// Lens space description L(p, q) of the double branched cover of a
// two-bridge knot; |p| equals the knot determinant.
struct LensSurgeryDescription {
  Int p;
  Int q;

  static LensSurgeryDescription create(Int p, Int q);  // gcd(p,q) = 1
};

// True iff q == +-2 t^2 (mod det) has a solution; false proves u > 1 for
// the two-bridge knot with this double cover.
bool lickorish_solvable(const LensSurgeryDescription& lens, const Int& det);

}  // namespace wittknot
