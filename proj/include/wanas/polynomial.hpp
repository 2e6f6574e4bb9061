#ifndef WANAS_POLYNOMIAL_HPP
#define WANAS_POLYNOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wanas/rational.hpp"

namespace wanas {

/// The closed variable universe. The declaration order is the variable order
/// used for graded-lex comparison: alpha < beta < gamma < delta < eta < c.
enum class Var : std::uint8_t { alpha, beta, gamma, delta, eta, c };

inline constexpr std::size_t kVarCount = 6;
inline constexpr std::array<Var, kVarCount> kAllVars = {
    Var::alpha, Var::beta, Var::gamma, Var::delta, Var::eta, Var::c};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Exponent vector over the variable universe. Absent variables have
/// exponent zero, so there is nothing like a stored zero exponent.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Var v, unsigned exponent = 1);

  unsigned exponent(Var v) const { return exps_[static_cast<std::size_t>(v)]; }
  unsigned degree() const;
  bool is_constant() const { return degree() == 0; }
  bool divides(const Monomial& other) const;

  /// Requires divides(*this); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;

  /// Graded lexicographic order: total degree first, then exponents compared
  /// variable by variable in Var order (a larger alpha exponent is larger).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::string str() const;

 private:
  std::array<std::uint8_t, kVarCount> exps_{};
};

using Assignment = std::map<Var, Rational>;
class Polynomial;
using Substitution = std::map<Var, Polynomial>;

/// Sparse multivariate polynomial over exact rationals.
///
/// Canonical form: no zero coefficient is ever stored, so the zero polynomial
/// has no terms and equality of term maps is equality of polynomials.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(long constant);                // NOLINT: promotes literals
  Polynomial(const Rational& constant);     // NOLINT
  Polynomial(Var v);                        // NOLINT
  Polynomial(const Monomial& m, const Rational& coefficient);

  /// Parses the canonical wire format (and general arithmetic expressions).
  static Polynomial parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant term (zero when absent).
  Rational constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(Var v) const;
  bool contains(Var v) const { return degree_in(v) > 0; }
  std::vector<Var> variables() const;

  /// Coefficient of v^k, as a polynomial in the remaining variables.
  Polynomial coefficient_of(Var v, unsigned k) const;

  Rational evaluate(const Assignment& assignment) const;
  Polynomial substitute(const Substitution& images) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(const Polynomial& a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial pow(unsigned exponent) const;

  /// Canonical rendering: terms in descending graded-lex order, e.g.
  /// "-3/2*alpha^2*beta + c".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& coefficient);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Rational poly_eval(const Polynomial& p, const Assignment& assignment);
Polynomial poly_substitute(const Polynomial& p, const Substitution& partial);

/// Reduces p modulo a relation of the form `lead - rest`, where exactly one
/// term of the relation contains `leading`; every term of p divisible by that
/// leading monomial is rewritten until none remains. At most two terms are
/// accepted (binomial or monomial relation), and `rest` must have lower degree
/// in `leading` than the leading term. Throws UnsupportedRelation otherwise.
Polynomial poly_reduce(const Polynomial& p, const Polynomial& relation, Var leading);

/// The variable poly_reduce should use for `relation`: the first variable (in
/// Var order) occurring in exactly one of its terms, if the relation is
/// supported at all.
std::optional<Var> reduction_variable(const Polynomial& relation);

/// Applies `images` repeatedly until no substituted variable remains, so
/// chained families such as {delta: -alpha, alpha: beta} resolve fully.
Polynomial substitute_to_fixpoint(const Polynomial& p, const Substitution& images);

}  // namespace wanas

#endif  // WANAS_POLYNOMIAL_HPP
