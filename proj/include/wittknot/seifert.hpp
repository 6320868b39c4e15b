#pragma once

#include <string>
#include <vector>

#include "wittknot/witt.hpp"

namespace wittknot {

using IntMatrix = std::vector<std::vector<Int>>;  // square, row major
using RatMatrix = std::vector<std::vector<Rat>>;

// Exact determinants.
Int det(const IntMatrix& m);
Rat det(const RatMatrix& m);

// A linking matrix V of a genus-g surface basis (dimension 2g). In strict
// mode det(V - V^T) = 1 is enforced; in lenient mode a violation is only
// recorded as a warning so partially symmetrized inputs can be explored.
class SeifertMatrix {
 public:
  static SeifertMatrix create(IntMatrix v, bool strict = true,
                              std::vector<std::string>* warnings = nullptr);

  const IntMatrix& V() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()); }

 private:
  explicit SeifertMatrix(IntMatrix v) : v_(std::move(v)) {}
  IntMatrix v_;
};

class SymmetricRationalMatrix {
 public:
  static SymmetricRationalMatrix create(RatMatrix q);  // checks symmetry
  static SymmetricRationalMatrix from_int(const IntMatrix& q);

  const RatMatrix& Q() const { return q_; }
  int dim() const { return static_cast<int>(q_.size()); }

 private:
  explicit SymmetricRationalMatrix(RatMatrix q) : q_(std::move(q)) {}
  RatMatrix q_;
};

// Q = V + V^T; throws "symmetrized form degenerate" when det Q == 0.
SymmetricRationalMatrix symmetrize(const SeifertMatrix& v);

// Congruence-diagonalize Q processing basis vectors strictly in input
// order, no row swaps. A zero pivot <f,f> = 0 is resolved by pairing f
// with the lowest-index remaining vector of nonzero product, splitting a
// hyperbolic plane off (both vectors removed, nothing emitted), and
// projecting the rest into the orthogonal complement. Output dimension is
// dim Q - 2*(number of splits); throws on degenerate input.
DiagonalForm gram_schmidt_diagonalize(const SymmetricRationalMatrix& q);

// gram_schmidt_diagonalize(symmetrize(V)).
DiagonalForm rational_witt_class(const SeifertMatrix& v);

// Signature / |determinant| of V + V^T. The 0x0 matrix has determinant 1.
int knot_signature(const SeifertMatrix& v);
Int knot_determinant(const SeifertMatrix& v);

// -V: negates the class and signature, preserves the determinant.
SeifertMatrix mirror(const SeifertMatrix& v);

// Block sum with [[0,1],[0,0]]: adds a hyperbolic plane to the
// symmetrization, preserving class, signature and determinant-up-to-sign.
SeifertMatrix stabilize(const SeifertMatrix& v);

}  // namespace wittknot
