#ifndef WANAS_GEOMETRY_HPP
#define WANAS_GEOMETRY_HPP

#include "wanas/lie_algebra.hpp"
#include "wanas/types.hpp"

namespace wanas {

// Component conventions (fixed basis e1, e2, e3; indices 0..2 in code):
//   ConnectionCoeffs     g[i][j]    = coordinates of nabla_{e_i} e_j
//   TorsionComponents    t[i][j]    = coordinates of T(e_i, e_j)
//   CurvatureComponents  r[i][j][k] = coordinates of R(e_i, e_j) e_k
//   TrilinearComponents  same layout as curvature (A and W tensors)
//   BilinearForm         s(i, k)    = form(e_i, e_k)
//   Operator3            m(i, .)    = coordinates of the image of e_i
//
// Operator3 stores images as ROWS, the transpose of the usual column
// convention, so that printed matrices read like the basis-column displays:
// applying m to v gives (m v)_l = sum_i v_i m(i, l).
template <class S>
using ConnectionCoeffs = Rank3<S>;
template <class S>
using TorsionComponents = Rank3<S>;
template <class S>
using CurvatureComponents = Rank4<S>;
template <class S>
using TrilinearComponents = Rank4<S>;
template <class S>
using BilinearForm = Mat3<S>;
template <class S>
using Operator3 = Mat3<S>;

/// Product structure J, as an operator in the row convention.
struct ProductStructure {
  Mat3<Rational> j = diagonal(1, 1, -1);

  static ProductStructure standard() { return {}; }
  static Mat3<Rational> diagonal(long a, long b, long c) {
    Mat3<Rational> m = zero_mat<Rational>();
    m(0, 0) = Rational(a);
    m(1, 1) = Rational(b);
    m(2, 2) = Rational(c);
    return m;
  }
};

template <ExactScalar S>
Operator3<S> lift(const Mat3<Rational>& m) {
  return map_entries<S>(m, [](const Rational& r) { return S(r); });
}

/// Operator applied to a vector in the row convention.
template <ExactScalar S>
Vec3<S> apply(const Operator3<S>& m, const Vec3<S>& v) {
  Vec3<S> out = zero_vec<S>();
  for (int i = 0; i < 3; ++i) {
    if (v(i).is_zero()) continue;
    for (int l = 0; l < 3; ++l) out(l) += v(i) * m(i, l);
  }
  return out;
}

/// nabla_{e_i} v for a left-invariant connection.
template <ExactScalar S>
Vec3<S> covariant(const ConnectionCoeffs<S>& conn, int i, const Vec3<S>& v) {
  Vec3<S> out = zero_vec<S>();
  for (int m = 0; m < 3; ++m) {
    if (!v(m).is_zero()) out += conn[i][m] * v(m);
  }
  return out;
}

/// nabla_x v for an arbitrary left-invariant direction x.
template <ExactScalar S>
Vec3<S> covariant(const ConnectionCoeffs<S>& conn, const Vec3<S>& x, const Vec3<S>& v) {
  Vec3<S> out = zero_vec<S>();
  for (int i = 0; i < 3; ++i) {
    if (!x(i).is_zero()) out += covariant(conn, i, v) * x(i);
  }
  return out;
}

/// Levi-Civita connection from the Koszul formula
///   2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j).
template <ExactScalar S>
ConnectionCoeffs<S> levi_civita(const LieAlgebra<S>& spec) {
  const auto& eps = spec.signature.eps;
  const auto& c = spec.constants;
  const S half(Rational(1, 2));
  ConnectionCoeffs<S> conn = zero_rank3<S>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        // g(e_k, e_k) = eps[k], so the coordinate is the inner product times eps[k].
        S lowered = c(i, j)(k) * S(Rational(eps[k])) - c(j, k)(i) * S(Rational(eps[i])) +
                    c(k, i)(j) * S(Rational(eps[j]));
        conn[i][j](k) = lowered * half * S(Rational(eps[k]));
      }
  return conn;
}

/// (nabla_{e_i} J) e_j = nabla_{e_i}(J e_j) - J(nabla_{e_i} e_j).
template <ExactScalar S>
Rank3<S> nabla_j(const ConnectionCoeffs<S>& conn, const ProductStructure& ps) {
  const Operator3<S> j = lift<S>(ps.j);
  Rank3<S> out = zero_rank3<S>();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      const Vec3<S> je = j.row(k).transpose();
      out[i][k] = covariant(conn, i, je) - apply(j, conn[i][k]);
    }
  return out;
}

/// nabla0_X Y = nabla_X Y - 1/2 (nabla_X J) J Y.
template <ExactScalar S>
ConnectionCoeffs<S> canonical_connection(const LieAlgebra<S>& spec, const ProductStructure& ps) {
  const ConnectionCoeffs<S> lc = levi_civita(spec);
  const Rank3<S> nj = nabla_j(lc, ps);
  const Operator3<S> j = lift<S>(ps.j);
  const S half(Rational(1, 2));
  ConnectionCoeffs<S> out = lc;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      Vec3<S> correction = zero_vec<S>();
      for (int m = 0; m < 3; ++m) {
        if (!j(k, m).is_zero()) correction += nj[i][m] * j(k, m);
      }
      out[i][k] -= correction * half;
    }
  return out;
}

template <ExactScalar S>
TorsionComponents<S> torsion(const ConnectionCoeffs<S>& conn, const LieAlgebra<S>& spec) {
  TorsionComponents<S> t = zero_rank3<S>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = conn[i][j] - conn[j][i] - spec.constants(i, j);
  return t;
}

/// R(e_i,e_j)e_k = nabla_i nabla_j e_k - nabla_j nabla_i e_k - nabla_{[e_i,e_j]} e_k.
template <ExactScalar S>
CurvatureComponents<S> curvature(const ConnectionCoeffs<S>& conn, const LieAlgebra<S>& spec) {
  CurvatureComponents<S> r = zero_rank4<S>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (int k = 0; k < 3; ++k) {
        r[i][j][k] = covariant(conn, i, conn[j][k]) - covariant(conn, j, conn[i][k]) -
                     covariant(conn, Vec3<S>(spec.constants(i, j)), basis_vec<S>(k));
      }
    }
  return r;
}

/// A(e_i,e_j)e_k = T(T(e_i,e_j), e_k).
template <ExactScalar S>
TrilinearComponents<S> a_tensor(const TorsionComponents<S>& t) {
  TrilinearComponents<S> a = zero_rank4<S>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) {
          if (!t[i][j](m).is_zero()) a[i][j][k] += t[m][k] * t[i][j](m);
        }
  return a;
}

template <ExactScalar S>
TrilinearComponents<S> wanas_tensor(const CurvatureComponents<S>& r,
                                    const TrilinearComponents<S>& a) {
  TrilinearComponents<S> w = zero_rank4<S>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) w[i][j][k] = r[i][j][k] - a[i][j][k];
  return w;
}

/// s(e_i, e_k) = -sum_j eps_j g(K(e_i, e_j) e_k, e_j), evaluated literally
/// through the metric.
template <ExactScalar S>
BilinearForm<S> contract(const TrilinearComponents<S>& k, const MetricSignature& sig) {
  BilinearForm<S> s = zero_mat<S>();
  for (int i = 0; i < 3; ++i)
    for (int l = 0; l < 3; ++l)
      for (int j = 0; j < 3; ++j) {
        const S g = sig.inner(k[i][j][l], basis_vec<S>(j));
        s(i, l) -= g * S(Rational(sig.eps[j]));
      }
  return s;
}

/// Same contraction as contract(), valid for any diagonal signature since
/// eps_j^2 = 1: s(e_i, e_k) = -sum_j K[i][j][k][j].
template <ExactScalar S>
BilinearForm<S> contract_shortcut(const TrilinearComponents<S>& k) {
  BilinearForm<S> s = zero_mat<S>();
  for (int i = 0; i < 3; ++i)
    for (int l = 0; l < 3; ++l)
      for (int j = 0; j < 3; ++j) s(i, l) -= k[i][j][l](j);
  return s;
}

/// Raises the second index: m(i, j) = s(i, j) eps_j.
template <ExactScalar S>
Operator3<S> operator_from_form(const BilinearForm<S>& s, const MetricSignature& sig) {
  Operator3<S> m = s;
  for (int j = 0; j < 3; ++j) {
    if (sig.eps[j] < 0) m.col(j) = -s.col(j);
  }
  return m;
}

/// Lowers the second index: s(i, j) = m(i, j) eps_j.
template <ExactScalar S>
BilinearForm<S> form_from_operator(const Operator3<S>& m, const MetricSignature& sig) {
  return operator_from_form(m, sig);  // eps_j = 1/eps_j
}

/// Symmetrizes the associated bilinear form, then raises back. With an
/// indefinite signature this differs from (m + m^T) / 2.
template <ExactScalar S>
Operator3<S> symmetrize_operator(const Operator3<S>& m, const MetricSignature& sig) {
  const BilinearForm<S> s = form_from_operator(m, sig);
  BilinearForm<S> sym = zero_mat<S>();
  const S half(Rational(1, 2));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sym(i, j) = (s(i, j) + s(j, i)) * half;
  return operator_from_form(sym, sig);
}

template <ExactScalar S>
Operator3<S> wan_operator(const Operator3<S>& ric, const Operator3<S>& abar) {
  return ric - abar;
}

/// Everything the pipeline derives from one algebra.
template <ExactScalar S>
struct TensorBundle {
  ConnectionCoeffs<S> connection;
  TorsionComponents<S> torsion;
  CurvatureComponents<S> curvature;
  TrilinearComponents<S> a_tensor;
  TrilinearComponents<S> wanas;
  BilinearForm<S> rho;  // Ricci form
  BilinearForm<S> a_form;
  BilinearForm<S> w_form;
  Operator3<S> ric;
  Operator3<S> abar;
  Operator3<S> wan;
  Operator3<S> wan_tilde;
};

template <ExactScalar S>
TensorBundle<S> compute_all(const LieAlgebra<S>& spec,
                            const ProductStructure& ps = ProductStructure::standard()) {
  TensorBundle<S> b;
  const MetricSignature& sig = spec.signature;
  b.connection = canonical_connection(spec, ps);
  b.torsion = torsion(b.connection, spec);
  b.curvature = curvature(b.connection, spec);
  b.a_tensor = a_tensor(b.torsion);
  b.wanas = wanas_tensor(b.curvature, b.a_tensor);
  b.rho = contract(b.curvature, sig);
  b.a_form = contract(b.a_tensor, sig);
  b.w_form = contract(b.wanas, sig);
  b.ric = operator_from_form(b.rho, sig);
  b.abar = operator_from_form(b.a_form, sig);
  b.wan = wan_operator(b.ric, b.abar);
  b.wan_tilde = symmetrize_operator(b.wan, sig);
  return b;
}

}  // namespace wanas

#endif  // WANAS_GEOMETRY_HPP
