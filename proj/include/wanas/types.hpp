#ifndef WANAS_TYPES_HPP
#define WANAS_TYPES_HPP

#include <array>
#include <concepts>

#include <Eigen/Core>

#include "wanas/polynomial.hpp"
#include "wanas/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<wanas::Rational> : GenericNumTraits<wanas::Rational> {
  using Real = wanas::Rational;
  using NonInteger = wanas::Rational;
  using Literal = wanas::Rational;
  using Nested = wanas::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<wanas::Polynomial> : GenericNumTraits<wanas::Polynomial> {
  using Real = wanas::Polynomial;
  using NonInteger = wanas::Polynomial;
  using Literal = wanas::Polynomial;
  using Nested = wanas::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 64
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace wanas {

// Scalars usable by the tensor pipeline: exact rationals (numeric parameter
// points) and polynomials (symbolic in the group parameters).
template <class S>
concept ExactScalar = std::same_as<S, Rational> || std::same_as<S, Polynomial>;

template <class S>
using Vec3 = Eigen::Matrix<S, 3, 1>;

template <class S>
using Mat3 = Eigen::Matrix<S, 3, 3>;

/// T[i][j] is a vector: rank-3 component table over the fixed basis.
template <class S>
using Rank3 = std::array<std::array<Vec3<S>, 3>, 3>;

/// K[i][j][k] is a vector: rank-4 component table.
template <class S>
using Rank4 = std::array<Rank3<S>, 3>;

template <ExactScalar S>
Vec3<S> zero_vec() {
  return Vec3<S>::Constant(S(0));
}

template <ExactScalar S>
Mat3<S> zero_mat() {
  return Mat3<S>::Constant(S(0));
}

template <ExactScalar S>
Mat3<S> identity_mat() {
  Mat3<S> m = zero_mat<S>();
  for (int i = 0; i < 3; ++i) m(i, i) = S(1);
  return m;
}

template <ExactScalar S>
Rank3<S> zero_rank3() {
  Rank3<S> t;
  for (auto& row : t) row.fill(zero_vec<S>());
  return t;
}

template <ExactScalar S>
Rank4<S> zero_rank4() {
  Rank4<S> t;
  t.fill(zero_rank3<S>());
  return t;
}

/// Basis vector e_{i+1}.
template <ExactScalar S>
Vec3<S> basis_vec(int i) {
  Vec3<S> v = zero_vec<S>();
  v(i) = S(1);
  return v;
}

template <ExactScalar S>
bool all_zero(const Vec3<S>& v) {
  return v(0) == S(0) && v(1) == S(0) && v(2) == S(0);
}

template <ExactScalar S>
bool all_zero(const Mat3<S>& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(m(i, j) == S(0))) return false;
  return true;
}

/// Entrywise map between scalar types (e.g. evaluation of a symbolic matrix).
template <class To, class From, class F>
Mat3<To> map_entries(const Mat3<From>& m, F&& f) {
  Mat3<To> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = f(m(i, j));
  return out;
}

template <class To, class From, class F>
Vec3<To> map_entries(const Vec3<From>& v, F&& f) {
  Vec3<To> out;
  for (int i = 0; i < 3; ++i) out(i) = f(v(i));
  return out;
}

}  // namespace wanas

#endif  // WANAS_TYPES_HPP
