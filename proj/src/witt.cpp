#include "wittknot/witt.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wittknot {

DiagonalForm::DiagonalForm(std::vector<Rat> entries)
    : entries_(std::move(entries)) {
  for (auto& e : entries_) {
    if (e == 0) throw std::domain_error("zero entry in diagonal form");
    e.canonicalize();
  }
}

DiagonalForm DiagonalForm::gen(const Rat& a) { return DiagonalForm({a}); }

std::string DiagonalForm::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(entries_[i]);
  }
  return s + "]";
}

DiagonalForm direct_sum(const DiagonalForm& f, const DiagonalForm& g) {
  std::vector<Rat> es = f.entries();
  es.insert(es.end(), g.entries().begin(), g.entries().end());
  return DiagonalForm(std::move(es));
}

DiagonalForm negate(const DiagonalForm& f) {
  std::vector<Rat> es;
  es.reserve(f.entries().size());
  for (const auto& e : f.entries()) es.push_back(-e);
  return DiagonalForm(std::move(es));
}

DiagonalForm tensor_gen(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw std::domain_error("tensor with zero generator");
  return DiagonalForm::gen(a * b);
}

Int canonical_gen(const Rat& a) { return squarefree_part(a); }

int signature(const DiagonalForm& f) {
  int s = 0;
  for (const auto& e : f.entries()) s += sign_of(e);
  return s;
}

// ---- LocalClass ----------------------------------------------------------

namespace {
int shape_of(const Int& p) {
  if (p == 2) return 2;
  return mpz_fdiv_ui(p.get_mpz_t(), 4) == 1 ? 1 : 3;
}
}  // namespace

LocalClass::LocalClass(Int p, unsigned a, unsigned b)
    : p_(std::move(p)), shape_(shape_of(p_)), a_(a), b_(b) {}

LocalClass LocalClass::zero(const Int& p) {
  if (!is_prime(p)) throw std::domain_error("local class at a non-prime");
  return LocalClass(p, 0, 0);
}

LocalClass LocalClass::generator(const Int& p, const Int& b) {
  LocalClass c = zero(p);
  if (c.shape_ == 2) {
    if (mpz_even_p(b.get_mpz_t()))
      throw std::domain_error("generator is not a unit mod 2");
    c.a_ = 1;
  } else {
    bool sq = is_square_mod(b, p);  // throws when p | b
    if (c.shape_ == 1) {
      c.a_ = sq ? 1 : 0;
      c.b_ = sq ? 0 : 1;
    } else {
      c.a_ = sq ? 1 : 3;  // <nonsquare> = 3<1> in the cyclic order-4 group
    }
  }
  return c;
}

bool LocalClass::is_zero() const { return a_ == 0 && b_ == 0; }

unsigned LocalClass::order() const {
  switch (shape_) {
    case 2:
      return a_ ? 2 : 1;
    case 1:
      return is_zero() ? 1 : 2;
    default:
      if (a_ == 0) return 1;
      return a_ == 2 ? 2 : 4;
  }
}

LocalClass LocalClass::operator+(const LocalClass& o) const {
  if (p_ != o.p_) throw std::domain_error("adding classes at different primes");
  LocalClass c = *this;
  if (shape_ == 3)
    c.a_ = (a_ + o.a_) % 4;
  else {
    c.a_ = a_ ^ o.a_;
    c.b_ = b_ ^ o.b_;
  }
  return c;
}

LocalClass LocalClass::operator-() const {
  LocalClass c = *this;
  if (shape_ == 3) c.a_ = (4 - a_) % 4;
  return c;  // shapes 2 and 1 are elementary abelian
}

bool LocalClass::operator==(const LocalClass& o) const {
  return p_ == o.p_ && a_ == o.a_ && b_ == o.b_;
}

std::string LocalClass::str() const {
  if (is_zero()) return "0";
  switch (shape_) {
    case 2:
      return "<1>";
    case 1:
      if (a_ && b_) return "<1>+<n>";
      return a_ ? "<1>" : "<n>";
    default:
      if (a_ == 1) return "<1>";
      return std::to_string(a_) + "<1>";
  }
}

// ---- boundary maps -------------------------------------------------------

namespace {

// Unit part of numerator*denominator: the entry with all powers of p
// removed, as an integer representative of the same square class.
Int unit_part(const Rat& e, const Int& p, int* val_out) {
  Int nd = e.get_num() * e.get_den();
  int v = valuation(nd, p);
  Int pe;
  mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned>(v));
  if (val_out) *val_out = v;
  return nd / pe;
}

}  // namespace

LocalClass boundary_p(const DiagonalForm& f, const Int& p) {
  LocalClass acc = LocalClass::zero(p);  // validates primality
  for (const auto& e : f.entries()) {
    int v = 0;
    Int u = unit_part(e, p, &v);
    if (v % 2 != 0) acc = acc + LocalClass::generator(p, u);
  }
  return acc;
}

Int residue_product(const DiagonalForm& f, const Int& p) {
  Int prod = 1;
  bool any = false;
  for (const auto& e : f.entries()) {
    int v = 0;
    Int u = unit_part(e, p, &v);
    if (v % 2 != 0) {
      any = true;
      prod = prod * u % p;
    }
  }
  if (!any) return 0;
  return ((prod % p) + p) % p;
}

std::vector<Int> support_primes(const DiagonalForm& f) {
  std::set<Int> primes;
  for (const auto& e : f.entries()) {
    Factorization fac = factorize(squarefree_part(e));
    for (const auto& [p, exp] : fac.factors) primes.insert(p);
  }
  return {primes.begin(), primes.end()};
}

WittInvariant witt_invariant(const DiagonalForm& f) {
  WittInvariant inv;
  inv.sig = signature(f);
  for (const Int& p : support_primes(f)) {
    LocalClass c = boundary_p(f, p);
    if (!c.is_zero()) inv.locals.emplace(p, c);
  }
  return inv;
}

bool WittInvariant::operator==(const WittInvariant& o) const {
  return sig == o.sig && locals == o.locals;
}

std::string WittInvariant::str() const {
  std::string s = "sigma=" + std::to_string(sig);
  for (const auto& [p, c] : locals)
    s += ", d_" + p.get_str() + "=" + c.str();
  return s;
}

bool is_equal(const DiagonalForm& f, const DiagonalForm& g) {
  return witt_invariant(f) == witt_invariant(g);
}

bool is_zero_class(const DiagonalForm& f) {
  return witt_invariant(f) == WittInvariant{};
}

TorsionOrder torsion_order(const DiagonalForm& f) {
  WittInvariant inv = witt_invariant(f);
  if (inv.sig != 0) return {false, 0};
  unsigned l = 1;
  for (const auto& [p, c] : inv.locals) l = std::lcm(l, c.order());
  return {true, l};
}

std::string TorsionOrder::str() const {
  return is_finite ? std::to_string(value) : "infinite";
}

std::vector<Int> separating_primes(const DiagonalForm& f,
                                   const DiagonalForm& g) {
  std::set<Int> primes;
  for (const Int& p : support_primes(f)) primes.insert(p);
  for (const Int& p : support_primes(g)) primes.insert(p);
  std::vector<Int> out;
  for (const Int& p : primes)
    if (boundary_p(f, p) != boundary_p(g, p)) out.push_back(p);
  return out;
}

LocalWitness witness_at(const DiagonalForm& f, const DiagonalForm& g,
                        const Int& p) {
  return LocalWitness{p, boundary_p(f, p), boundary_p(g, p),
                      residue_product(f, p), residue_product(g, p)};
}

}  // namespace wittknot
