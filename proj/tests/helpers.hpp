// Shared utilities for the test suites: form construction from string
// lists, a brute-force model of the Witt group of a finite field (via the
// dimension + discriminant classification), and a seeded RNG.
#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "wittknot/witt.hpp"

namespace testutil {

using wittknot::DiagonalForm;
using wittknot::Int;
using wittknot::Rat;

inline DiagonalForm form(const std::vector<std::string>& entries) {
  std::vector<Rat> es;
  for (const auto& s : entries) es.push_back(wittknot::parse_rat(s));
  return DiagonalForm(es);
}

inline std::mt19937_64 seeded_rng() { return std::mt19937_64(0x5eed1234abcdULL); }

// Nonzero square residues mod p by brute squaring.
inline std::set<long> brute_squares(long p) {
  std::set<long> s;
  for (long t = 1; t < p; ++t) s.insert(t * t % p);
  return s;
}

// Brute model of W(F_p): a form given by nonzero residues is Witt-trivial
// iff its dimension is even and (-1)^(dim/2) * prod(entries) is a square.
// For p = 2 the class is the dimension mod 2. This is the standard
// dimension/discriminant classification of forms over finite fields,
// independent of the group encodings used by the library.
inline bool brute_zero(const std::vector<long>& entries, long p) {
  if (entries.size() % 2 != 0) return false;
  if (p == 2) return true;
  long disc = 1;
  for (long a : entries) disc = disc * (a % p) % p;
  if (entries.size() / 2 % 2 == 1) disc = p - disc % p;  // factor (-1)^(m)
  disc = ((disc % p) + p) % p;
  return brute_squares(p).count(disc) > 0;
}

inline bool brute_equal(std::vector<long> f, const std::vector<long>& g,
                        long p) {
  for (long a : g) f.push_back(((p - a) % p + p) % p);  // append -g
  return brute_zero(f, p);
}

}  // namespace testutil
