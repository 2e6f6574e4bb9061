#include "wanas/tensor_format.hpp"

#include <algorithm>
#include <sstream>

namespace wanas {

namespace {

std::string basis(int i) { return "e" + std::to_string(i + 1); }

// Coefficient rendered in front of a basis vector; sign pulled out.
std::pair<bool, std::string> signed_coefficient(const Polynomial& p) {
  if (p.terms().size() == 1) {
    const auto& [mono, coeff] = *p.terms().begin();
    const bool negative = coeff.sign() < 0;
    const Polynomial magnitude(mono, coeff.abs());
    if (magnitude == Polynomial(1)) return {negative, ""};
    return {negative, magnitude.str() + "*"};
  }
  return {false, "(" + p.str() + ")*"};
}

}  // namespace

std::string format_vector(const Vec3<Polynomial>& v) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (v(i).is_zero()) continue;
    auto [negative, coeff] = signed_coefficient(v(i));
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff + basis(i);
  }
  return out.empty() ? "0" : out;
}

std::string format_connection(const ConnectionCoeffs<Polynomial>& conn) {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (all_zero(conn[i][j])) continue;
      os << "nabla0_{" << basis(i) << "} " << basis(j) << " = " << format_vector(conn[i][j])
         << '\n';
    }
  const std::string text = os.str();
  return text.empty() ? "all components vanish\n" : text;
}

std::string format_torsion(const TorsionComponents<Polynomial>& t) {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      os << "T0(" << basis(i) << "," << basis(j) << ") = " << format_vector(t[i][j]) << '\n';
  return os.str();
}

std::string format_trilinear(const TrilinearComponents<Polynomial>& k, std::string_view name) {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int l = 0; l < 3; ++l)
        os << name << "(" << basis(i) << "," << basis(j) << ")" << basis(l) << " = "
           << format_vector(k[i][j][l]) << '\n';
  return os.str();
}

std::string format_matrix(const Mat3<Polynomial>& m) {
  std::array<std::array<std::string, 3>, 3> cells;
  std::array<std::size_t, 3> width{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cells[i][j] = m(i, j).str();
      width[j] = std::max(width[j], cells[i][j].size());
    }
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    os << "[ ";
    for (int j = 0; j < 3; ++j) {
      os << cells[i][j] << std::string(width[j] - cells[i][j].size(), ' ');
      os << (j < 2 ? " | " : " ]\n");
    }
  }
  return os.str();
}

nlohmann::json vector_json(const Vec3<Polynomial>& v) {
  return nlohmann::json::array({v(0).str(), v(1).str(), v(2).str()});
}

nlohmann::json rank3_json(const Rank3<Polynomial>& t) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 3; ++j) row.push_back(vector_json(t[i][j]));
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::json rank4_json(const Rank4<Polynomial>& t) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) out.push_back(rank3_json(t[i]));
  return out;
}

nlohmann::json matrix_json(const Mat3<Polynomial>& m) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < 3; ++i)
    out.push_back(nlohmann::json::array({m(i, 0).str(), m(i, 1).str(), m(i, 2).str()}));
  return out;
}

}  // namespace wanas
