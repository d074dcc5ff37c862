#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "pheis/fock.hpp"

namespace pheis {

// Mode conventions: the Heisenberg relation is [h(m), h(n)] = m delta_{m,-n} Id
// with h(0) = 0 (uncharged sector); normal ordering puts annihilation modes to
// the right.  This is the relation consistent with omega = 1/2 h(-1)^2 1 at
// central charge 1.

/// Heisenberg mode action.  h(-n) creates a part n, h(n) annihilates with
/// coefficient n * multiplicity, h(0) = 0.
FockState apply_h(int n, const FockState& b);

/// Virasoro mode L(n) = 1/2 sum_{i+j=n} :h(i)h(j):, the modes of
/// omega = 1/2 h(-1)^2 1 (central charge 1).  Exact.
FockState apply_L(int n, const FockState& b);

// Composite modes a(t)b, defined recursively from h-modes by the r = 0
// instance of the Jacobi identity:
//   (h(-n)w)(s) = sum_{i>=0} C(n+i-1,i) h(-n-i) w(s+i)
//                 - (-1)^n sum_{i>=1} C(n+i-1,i) w(s-n-i) h(i).
// ModeCalculator memoizes (monomial suffix, mode index, basis partition)
// triples so repeated use inside one computation stays cheap.
class ModeCalculator {
 public:
  /// a(t)b, exact; bilinear in a and b.
  FockState mode_product(const FockState& a, int t, const FockState& b);

  /// Mode of a basis monomial applied to a basis partition (unit coefficient).
  const FockState& monomial_mode(const Partition& a, int t, const Partition& b);

 private:
  std::map<std::tuple<Partition, int, Partition>, FockState> memo_;
};

FockState mode_product(const FockState& a, int t, const FockState& b);

/// Zero mode o(a) = a(wt(a) - 1) for L(0)-homogeneous a; extended by
/// linearity over homogeneous components otherwise.
FockState zero_mode_apply(const FockState& a, const FockState& b);

// Row-major matrix of exact rationals.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> entries;  // entries[i*cols + j]

  Rational& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * cols + j];
  }
  static RationalMatrix identity(int n);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
};

/// Matrix of o(a) on the degree-d slice in canonical basis order
/// (columns are images of basis vectors).  a must be L(0)-homogeneous.
RationalMatrix zero_mode_matrix(const FockState& a, int d);

/// LHS - RHS of the Jacobi identity at (r, s, t), computed exactly; the zero
/// state iff the identity holds there.
FockState jacobi_residual(const FockState& a, const FockState& b, const FockState& c,
                          int r, int s, int t);

}  // namespace pheis
