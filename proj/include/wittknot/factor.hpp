#pragma once

#include <map>

#include "wittknot/rational.hpp"

namespace wittknot {

// Sign and prime -> exponent table of a nonzero integer.
struct Factorization {
  int sign = 1;                    // +1 or -1
  std::map<Int, unsigned> factors; // prime -> exponent >= 1

  Int reconstruct() const;
};

// Exact factorization of n != 0 (trial division up to 1e6, then
// Miller-Rabin + Pollard rho for any large cofactor). Deterministic.
Factorization factorize(const Int& n);

bool is_prime(const Int& n);

// Euler-criterion quadratic-residue test: true iff a is a nonzero square
// mod the odd prime p. Throws std::domain_error if p | a or p is not an
// odd prime.
bool is_square_mod(const Int& a, const Int& p);

// p-adic valuation of a nonzero value.
int valuation(const Int& n, const Int& p);
int valuation(const Rat& q, const Int& p);

// The unique square-free integer s with a = s * d^2 for some rational d;
// sign preserved (7/4 -> 7, 49 -> 1, -23/9 -> -23). Throws on a == 0.
Int squarefree_part(const Rat& a);

}  // namespace wittknot
