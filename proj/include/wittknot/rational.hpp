#pragma once

#include <gmpxx.h>

#include <string>

namespace wittknot {

using Int = mpz_class;
using Rat = mpq_class;  // kept canonical (reduced, positive denominator)

// Build n/d in canonical form. Throws std::domain_error when d == 0.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

// "n" or "n/d" (canonical form).
std::string rat_str(const Rat& q);

// Parse "n" or "n/d"; throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

inline int sign_of(const Int& n) { return sgn(n); }
inline int sign_of(const Rat& q) { return sgn(q); }

}  // namespace wittknot
