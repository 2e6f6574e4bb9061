#ifndef WANAS_SOLITON_HPP
#define WANAS_SOLITON_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wanas/geometry.hpp"

namespace wanas {

/// First kind tests Wan, second kind tests its form symmetrization.
enum class SolitonKind { First, Second };

std::string_view kind_name(SolitonKind kind);  // "first" / "second"
std::optional<SolitonKind> kind_from_name(std::string_view name);

template <ExactScalar S>
Operator3<S> wan_of_kind(const TensorBundle<S>& b, SolitonKind kind) {
  return kind == SolitonKind::First ? b.wan : b.wan_tilde;
}

/// Basis pairs (i < j) in the order (1,2), (1,3), (2,3).
inline constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

/// res[p] = D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] for the p-th pair.
template <ExactScalar S>
using DerivationResidual = std::array<Vec3<S>, 3>;

template <ExactScalar S>
DerivationResidual<S> derivation_residual(const Operator3<S>& d, const LieAlgebra<S>& spec) {
  DerivationResidual<S> res;
  for (std::size_t p = 0; p < kPairs.size(); ++p) {
    const auto [i, j] = kPairs[p];
    const Vec3<S> di = d.row(i).transpose();
    const Vec3<S> dj = d.row(j).transpose();
    res[p] = apply(d, Vec3<S>(spec.constants(i, j))) - bracket(spec, di, basis_vec<S>(j)) -
             bracket(spec, basis_vec<S>(i), dj);
  }
  return res;
}

template <ExactScalar S>
bool is_derivation(const Operator3<S>& d, const LieAlgebra<S>& spec) {
  for (const auto& v : derivation_residual(d, spec))
    if (!all_zero(v)) return false;
  return true;
}

/// One residual coordinate of D = W - c Id, written as constant + slope * c = 0.
/// Since the residual of Id is -[e_i, e_j], the slope is the structure constant.
struct AffineEquation {
  int pair = 0;        // index into kPairs
  int coordinate = 0;  // basis coordinate of the residual vector
  Rational constant;
  Rational slope;

  /// "(1,2)[e3]: 2*c + 4 = 0"
  std::string str() const;
  friend bool operator==(const AffineEquation&, const AffineEquation&) = default;
};

struct SolitonVerdict {
  enum class Outcome { NoSoliton, Soliton, SolitonAnyC };
  Outcome outcome = Outcome::NoSoliton;
  /// Set only for Soliton.
  std::optional<Rational> c;
  /// Soliton: the derivation. SolitonAnyC: the operator W itself, so that the
  /// admissible derivations are W - c Id. NoSoliton: unused (zero).
  Operator3<Rational> d = zero_mat<Rational>();
  /// NoSoliton only: one equation with zero slope and nonzero constant, or
  /// two equations forcing different values of c.
  std::vector<AffineEquation> witness;

  static SolitonVerdict none(std::vector<AffineEquation> witness);
  static SolitonVerdict unique(Rational c, Operator3<Rational> d);
  static SolitonVerdict any_c(Operator3<Rational> w);

  /// Exact equality of outcome, c and D; witnesses are not compared.
  bool agrees_with(const SolitonVerdict& other) const;
};

std::string_view outcome_name(SolitonVerdict::Outcome outcome);

/// The nine residual equations of W - c Id on a numeric algebra.
std::vector<AffineEquation> affine_system(const NumericLieAlgebra& spec,
                                          const Operator3<Rational>& w);

/// Decides whether W = c Id + D has a solution with D a derivation.
///
/// D is forced to be W - c Id, so this is a one-unknown affine system over Q.
/// Any real solution of an affine system with rational coefficients is
/// rational, so searching for rational c loses nothing.
SolitonVerdict soliton_decide(const NumericLieAlgebra& spec, SolitonKind kind,
                              const Operator3<Rational>& w);

/// Re-substitution check: W = c Id + D and D is a derivation (Soliton), or
/// the residual system vanishes identically (SolitonAnyC), or the witness
/// really is contradictory (NoSoliton).
bool verdict_sound(const NumericLieAlgebra& spec, const Operator3<Rational>& w,
                   const SolitonVerdict& verdict);

/// The nine symbolic residual polynomials of Wan - c Id (or the second-kind
/// operator), affine in the variable c, before any elimination.
std::vector<Polynomial> residual_system(const LieAlgebraSpec& spec, SolitonKind kind);

struct ClaimCheck {
  bool pass = true;
  std::vector<std::string> failures;  // one line per nonzero identity
};

/// Checks a claimed (c, D) on a family of algebras, symbolically: both
/// W - c Id - D and the derivation residual of D must reduce to zero modulo
/// the family's equation constraints.
ClaimCheck check_claimed_solution(const LieAlgebraSpec& family, SolitonKind kind,
                                  const Polynomial& c, const Operator3<Polynomial>& d);

nlohmann::json to_json(const SolitonVerdict& verdict);
std::string to_text(const SolitonVerdict& verdict);

}  // namespace wanas

#endif  // WANAS_SOLITON_HPP
