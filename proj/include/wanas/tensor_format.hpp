#ifndef WANAS_TENSOR_FORMAT_HPP
#define WANAS_TENSOR_FORMAT_HPP

#include <string>

#include <json.hpp>

#include "wanas/geometry.hpp"

namespace wanas {

// Text and JSON renderings of component tables. Entries are canonical
// polynomial strings; numeric tables are printed as constant polynomials.

/// "beta*e1 + (alpha - gamma)*e2 - e3", or "0".
std::string format_vector(const Vec3<Polynomial>& v);

/// One line per nonzero nabla_{e_i} e_j; "all components vanish" if none.
std::string format_connection(const ConnectionCoeffs<Polynomial>& conn);
/// One line per pair i < j: "T(e1,e2) = beta*e3".
std::string format_torsion(const TorsionComponents<Polynomial>& t);
/// One line per i < j and k: "A(e1,e2)e1 = ...".
std::string format_trilinear(const TrilinearComponents<Polynomial>& k, std::string_view name);
/// Column-aligned 3x3 matrix, rows = images of e1, e2, e3.
std::string format_matrix(const Mat3<Polynomial>& m);

nlohmann::json vector_json(const Vec3<Polynomial>& v);
/// json[i][j] = coordinates of the (i, j) entry.
nlohmann::json rank3_json(const Rank3<Polynomial>& t);
/// json[i][j][k] = coordinates of the (i, j, k) entry.
nlohmann::json rank4_json(const Rank4<Polynomial>& t);
nlohmann::json matrix_json(const Mat3<Polynomial>& m);

template <ExactScalar S>
Vec3<Polynomial> to_poly(const Vec3<S>& v) {
  return map_entries<Polynomial>(v, [](const S& x) { return Polynomial(x); });
}

template <ExactScalar S>
Mat3<Polynomial> to_poly(const Mat3<S>& m) {
  return map_entries<Polynomial>(m, [](const S& x) { return Polynomial(x); });
}

template <ExactScalar S>
Rank3<Polynomial> to_poly(const Rank3<S>& t) {
  Rank3<Polynomial> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = to_poly(t[i][j]);
  return out;
}

template <ExactScalar S>
Rank4<Polynomial> to_poly(const Rank4<S>& t) {
  Rank4<Polynomial> out;
  for (int i = 0; i < 3; ++i) out[i] = to_poly(t[i]);
  return out;
}

}  // namespace wanas

#endif  // WANAS_TENSOR_FORMAT_HPP
