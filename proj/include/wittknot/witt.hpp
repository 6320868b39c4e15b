#pragma once

#include <map>
#include <string>
#include <vector>

#include "wittknot/factor.hpp"
#include "wittknot/rational.hpp"

namespace wittknot {

// A diagonal symmetric bilinear form <a1> + ... + <an> over Q, the ai
// nonzero rationals. Entry order is preserved (reports print ordered
// diagonals); equality of Witt classes is always decided through the
// complete invariant, never entrywise.
class DiagonalForm {
 public:
  DiagonalForm() = default;  // the zero class (empty form)
  explicit DiagonalForm(std::vector<Rat> entries);

  static DiagonalForm gen(const Rat& a);  // <a>

  const std::vector<Rat>& entries() const { return entries_; }
  int dim() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  std::string str() const;  // e.g. "[4, 7/4, -4/7, 15/4]"

 private:
  std::vector<Rat> entries_;
};

DiagonalForm direct_sum(const DiagonalForm& f, const DiagonalForm& g);
DiagonalForm negate(const DiagonalForm& f);

// <a> (x) <b> = <a*b>, as a one-generator form.
DiagonalForm tensor_gen(const Rat& a, const Rat& b);

// The square-free integer representative of <a>; throws on a == 0.
Int canonical_gen(const Rat& a);

// Count of positive entries minus count of negative entries.
int signature(const DiagonalForm& f);

// An element of the Witt group of the field with p elements, in a fixed
// canonical encoding depending on p mod 4:
//   p == 2      : Z/2, one parity bit;
//   p == 1 (4)  : Z/2 + Z/2, a parity bit per square class of generators;
//   p == 3 (4)  : Z/4, (#square-class - #nonsquare-class generators) mod 4.
class LocalClass {
 public:
  static LocalClass zero(const Int& p);
  // Class of the rank-one form <b>, b any integer that is a unit mod p.
  static LocalClass generator(const Int& p, const Int& b);

  const Int& prime() const { return p_; }
  bool is_zero() const;
  unsigned order() const;  // additive order: 1, 2 or 4
  LocalClass operator+(const LocalClass& o) const;
  LocalClass operator-() const;
  bool operator==(const LocalClass& o) const;
  bool operator!=(const LocalClass& o) const { return !(*this == o); }

  // Canonical display: "0", "<1>", "<n>", "<1>+<n>", "2<1>", "3<1>"
  // (n stands for a non-square residue).
  std::string str() const;

  // Raw encoding, for tests: p=2 -> {bit,0}; p=1(4) -> {sq bit, nonsq bit};
  // p=3(4) -> {value mod 4, 0}.
  std::pair<unsigned, unsigned> encoding() const { return {a_, b_}; }

 private:
  LocalClass(Int p, unsigned a, unsigned b);
  Int p_;
  int shape_;  // 2, 1 or 3 (p mod 4, with 2 for p == 2)
  unsigned a_ = 0;
  unsigned b_ = 0;
};

// Second-residue homomorphism at p: each entry lambda = p^l * beta with
// beta a unit contributes the class of <beta> when l is odd, nothing when
// l is even. Throws if p is not prime.
LocalClass boundary_p(const DiagonalForm& f, const Int& p);

// Product over the odd-valuation entries of the unit part of
// numerator*denominator, reduced mod p to the least non-negative residue.
// This is the residue a hand computation of boundary_p would write down
// for the summed generator; 0 when no entry has odd valuation.
Int residue_product(const DiagonalForm& f, const Int& p);

// The complete invariant of a class in W(Q): signature plus the finitely
// many nonzero local classes.
struct WittInvariant {
  int sig = 0;
  std::map<Int, LocalClass> locals;  // nonzero classes only

  bool operator==(const WittInvariant& o) const;
  bool operator!=(const WittInvariant& o) const { return !(*this == o); }
  std::string str() const;
};

// Primes that appear with odd exponent in some entry (the only places
// boundary_p can be nonzero); sorted ascending.
std::vector<Int> support_primes(const DiagonalForm& f);

WittInvariant witt_invariant(const DiagonalForm& f);

bool is_equal(const DiagonalForm& f, const DiagonalForm& g);
bool is_zero_class(const DiagonalForm& f);

// Additive order of the class: {1, 2, 4} when the signature vanishes
// (is_finite true), infinite otherwise.
struct TorsionOrder {
  bool is_finite = true;
  unsigned value = 1;  // meaningful only when is_finite

  bool operator==(const TorsionOrder& o) const {
    return is_finite == o.is_finite && (!is_finite || value == o.value);
  }
  std::string str() const;
};

TorsionOrder torsion_order(const DiagonalForm& f);

// Primes p where boundary_p(f) != boundary_p(g); sorted ascending.
std::vector<Int> separating_primes(const DiagonalForm& f, const DiagonalForm& g);

// Local data rendered for a report: the two classes at p plus the two
// hand-computation residues (see residue_product).
struct LocalWitness {
  Int p;
  LocalClass f_class;
  LocalClass g_class;
  Int f_residue;
  Int g_residue;
};

LocalWitness witness_at(const DiagonalForm& f, const DiagonalForm& g, const Int& p);

}  // namespace wittknot
