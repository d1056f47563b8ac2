#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace Eigen {

// Exact arbitrary-precision integer scalar for all matrix work.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace swc {

using Int = mpz_class;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// gcd with the convention gcd(a, 0) = |a|; always nonnegative.
inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Quotient of floor division (rounds toward -inf); b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Remainder of floor division: result has the sign of b's modulus, in [0, |b|).
inline Int floor_mod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Quotient of truncated division (rounds toward 0); b != 0.
inline Int trunc_div(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_zero(const IntVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

inline bool vec_eq(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

/// Lexicographic three-way compare; vectors must have equal length.
inline int vec_cmp(const IntVector& a, const IntVector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

inline bool mat_eq(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(IntMatrix m);

}  // namespace swc
