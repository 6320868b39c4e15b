#include "wittknot/factor.hpp"

#include <stdexcept>

namespace wittknot {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

Int Factorization::reconstruct() const {
  Int n = sign;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    n *= pe;
  }
  return n;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;

void add_factor(std::map<Int, unsigned>& factors, const Int& p, unsigned e) {
  factors[p] += e;
}

// Pollard rho (Brent's variant) on an odd composite with no factor below
// the trial-division limit. Deterministic: the polynomial offset is
// incremented on each failed attempt.
Int pollard_rho(const Int& n) {
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor; retry with next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(std::map<Int, unsigned>& factors, Int n) {
  if (n == 1) return;
  if (is_prime(n)) {
    add_factor(factors, n, 1);
    return;
  }
  Int d = pollard_rho(n);
  factor_into(factors, d);
  factor_into(factors, n / d);
}

}  // namespace

Factorization factorize(const Int& n) {
  if (n == 0) throw std::domain_error("factorize(0)");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  Int m = abs(n);

  if (mpz_even_p(m.get_mpz_t())) {
    unsigned cnt = 0;
    while (mpz_even_p(m.get_mpz_t())) {
      m /= 2;
      ++cnt;
    }
    add_factor(out.factors, 2, cnt);
  }
  for (unsigned long d = 3; d <= kTrialLimit && m > 1; d += 2) {
    if (Int(d) * d > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      unsigned cnt = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
        m /= d;
        ++cnt;
      }
      add_factor(out.factors, Int(d), cnt);
    }
  }
  if (m > 1) {
    if (Int(kTrialLimit) * kTrialLimit > m || is_prime(m))
      add_factor(out.factors, m, 1);
    else
      factor_into(out.factors, m);
  }
  return out;
}

bool is_square_mod(const Int& a, const Int& p) {
  if (p == 2 || !is_prime(p)) throw std::domain_error("need an odd prime");
  if (a % p == 0) throw std::domain_error("residue test of a multiple of p");
  Int e = (p - 1) / 2, r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r == 1;
}

int valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::domain_error("valuation of 0");
  Int m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(const Rat& q, const Int& p) {
  if (q == 0) throw std::domain_error("valuation of 0");
  return valuation(Int(q.get_num()), p) - valuation(Int(q.get_den()), p);
}

Int squarefree_part(const Rat& a) {
  if (a == 0) throw std::domain_error("squarefree_part(0)");
  // <num/den> = <num*den> up to the square den^2.
  Factorization f = factorize(Int(a.get_num() * a.get_den()));
  Int s = f.sign;
  for (const auto& [p, e] : f.factors)
    if (e % 2 == 1) s *= p;
  return s;
}

}  // namespace wittknot
