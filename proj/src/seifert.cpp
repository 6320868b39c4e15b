#include "wittknot/seifert.hpp"

#include <stdexcept>

namespace wittknot {

namespace {

void check_square(std::size_t rows, const auto& m) {
  for (const auto& row : m)
    if (row.size() != rows) throw std::domain_error("matrix is not square");
}

}  // namespace

Int det(const IntMatrix& m) {
  check_square(m.size(), m);
  // Bareiss fraction-free elimination (exact over the integers).
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Rat det(const RatMatrix& m) {
  check_square(m.size(), m);
  const int n = static_cast<int>(m.size());
  if (n == 0) return Rat(1);
  RatMatrix a = m;
  Rat result = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Rat(0);
      std::swap(a[k], a[piv]);
      result = -result;
    }
    result *= a[k][k];
    for (int i = k + 1; i < n; ++i) {
      Rat factor = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return result;
}

SeifertMatrix SeifertMatrix::create(IntMatrix v, bool strict,
                                    std::vector<std::string>* warnings) {
  check_square(v.size(), v);
  if (v.size() % 2 != 0)
    throw std::domain_error("Seifert matrix dimension must be even");
  const int n = static_cast<int>(v.size());
  IntMatrix skew(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) skew[i][j] = v[i][j] - v[j][i];
  if (det(skew) != 1) {
    std::string msg = "det(V - V^T) != 1: not the linking data of a surface basis";
    if (strict) throw std::domain_error(msg);
    if (warnings) warnings->push_back(msg);
  }
  return SeifertMatrix(std::move(v));
}

SymmetricRationalMatrix SymmetricRationalMatrix::create(RatMatrix q) {
  check_square(q.size(), q);
  const int n = static_cast<int>(q.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (q[i][j] != q[j][i])
        throw std::domain_error("matrix is not symmetric");
  for (auto& row : q)
    for (auto& e : row) e.canonicalize();
  return SymmetricRationalMatrix(std::move(q));
}

SymmetricRationalMatrix SymmetricRationalMatrix::from_int(const IntMatrix& q) {
  RatMatrix r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (const auto& e : q[i]) r[i].emplace_back(e);
  return create(std::move(r));
}

SymmetricRationalMatrix symmetrize(const SeifertMatrix& v) {
  const int n = v.dim();
  RatMatrix q(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = Rat(v.V()[i][j] + v.V()[j][i]);
  auto sym = SymmetricRationalMatrix::create(std::move(q));
  if (n > 0 && det(sym.Q()) == 0)
    throw std::domain_error("symmetrized form degenerate");
  return sym;
}

DiagonalForm gram_schmidt_diagonalize(const SymmetricRationalMatrix& q) {
  const int n = q.dim();
  const RatMatrix& Q = q.Q();
  auto pair = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    Rat s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (x[i] != 0 && y[j] != 0) s += x[i] * Q[i][j] * y[j];
    return s;
  };

  // Basis vectors in input order, projected as pivots are chosen.
  std::vector<std::vector<Rat>> work;
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = 1;
    work.push_back(std::move(e));
  }

  std::vector<Rat> out;
  while (!work.empty()) {
    std::vector<Rat> x = std::move(work.front());
    work.erase(work.begin());
    Rat d = pair(x, x);
    if (d != 0) {
      out.push_back(d);
      for (auto& z : work) {
        Rat mu = pair(z, x) / d;
        if (mu == 0) continue;
        for (int i = 0; i < n; ++i) z[i] -= mu * x[i];
      }
      continue;
    }
    // Zero pivot: split a hyperbolic plane with the lowest-index partner
    // of nonzero product; the plane contributes nothing to the class.
    int partner = -1;
    for (std::size_t i = 0; i < work.size(); ++i)
      if (pair(work[i], x) != 0) {
        partner = static_cast<int>(i);
        break;
      }
    if (partner < 0) throw std::domain_error("degenerate form");
    std::vector<Rat> y = std::move(work[partner]);
    work.erase(work.begin() + partner);
    Rat b = pair(x, y);
    Rat c = pair(y, y);
    for (auto& z : work) {
      Rat mu = pair(z, x) / b;
      Rat lam = (pair(z, y) - mu * c) / b;
      for (int i = 0; i < n; ++i) z[i] -= lam * x[i] + mu * y[i];
    }
  }
  return DiagonalForm(std::move(out));
}

DiagonalForm rational_witt_class(const SeifertMatrix& v) {
  return gram_schmidt_diagonalize(symmetrize(v));
}

int knot_signature(const SeifertMatrix& v) {
  return signature(rational_witt_class(v));
}

Int knot_determinant(const SeifertMatrix& v) {
  if (v.dim() == 0) return 1;
  const int n = v.dim();
  IntMatrix q(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = v.V()[i][j] + v.V()[j][i];
  Int d = det(q);
  if (d == 0) throw std::domain_error("symmetrized form degenerate");
  return abs(d);
}

SeifertMatrix mirror(const SeifertMatrix& v) {
  IntMatrix m = v.V();
  for (auto& row : m)
    for (auto& e : row) e = -e;
  // Negation preserves det(V - V^T) for even dimensions, so strictness
  // carries over from the input.
  return SeifertMatrix::create(std::move(m), false);
}

SeifertMatrix stabilize(const SeifertMatrix& v) {
  const int n = v.dim();
  IntMatrix m(n + 2, std::vector<Int>(n + 2, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = v.V()[i][j];
  m[n][n + 1] = 1;  // the new block [[0,1],[0,0]] symmetrizes to a plane
  return SeifertMatrix::create(std::move(m), false);
}

}  // namespace wittknot
