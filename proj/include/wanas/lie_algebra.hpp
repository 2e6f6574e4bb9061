#ifndef WANAS_LIE_ALGEBRA_HPP
#define WANAS_LIE_ALGEBRA_HPP

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "wanas/errors.hpp"
#include "wanas/expression.hpp"
#include "wanas/types.hpp"

namespace wanas {

/// Diagonal metric g(e_i, e_j) = eps[i] * delta_ij on the fixed basis
/// (e1, e2, e3). Every catalog algebra uses (+1, +1, -1): e3 is timelike.
struct MetricSignature {
  std::array<int, 3> eps{1, 1, -1};

  static MetricSignature lorentzian() { return {}; }

  template <ExactScalar S>
  S inner(const Vec3<S>& x, const Vec3<S>& y) const {
    S total(0);
    for (int i = 0; i < 3; ++i) total += x(i) * y(i) * Rational(eps[i]);
    return total;
  }

  friend bool operator==(const MetricSignature&, const MetricSignature&) = default;
};

/// Structure constants: operator()(i, j) is the coordinate vector of
/// [e_{i+1}, e_{j+1}]. Antisymmetry holds by construction.
template <ExactScalar S>
class StructureConstants {
 public:
  StructureConstants() : c_(zero_rank3<S>()) {}

  static StructureConstants from_brackets(const Vec3<S>& e12, const Vec3<S>& e13,
                                          const Vec3<S>& e23) {
    StructureConstants sc;
    sc.c_[0][1] = e12;
    sc.c_[1][0] = -e12;
    sc.c_[0][2] = e13;
    sc.c_[2][0] = -e13;
    sc.c_[1][2] = e23;
    sc.c_[2][1] = -e23;
    return sc;
  }

  /// Throws Error unless c[i][j] = -c[j][i] for all i, j.
  static StructureConstants from_table(const Rank3<S>& table) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!(table[i][j] == Vec3<S>(-table[j][i]))) {
          throw Error("structure constants are not antisymmetric");
        }
    StructureConstants sc;
    sc.c_ = table;
    return sc;
  }

  const Vec3<S>& operator()(int i, int j) const { return c_[i][j]; }
  const Rank3<S>& table() const { return c_; }

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!(a.c_[i][j] == b.c_[i][j])) return false;
    return true;
  }

 private:
  Rank3<S> c_;
};

struct Constraint {
  enum class Kind { Equation, NonVanishing };
  Kind kind = Kind::Equation;
  Polynomial poly;

  static Constraint equation(Polynomial p) { return {Kind::Equation, std::move(p)}; }
  static Constraint non_vanishing(Polynomial p) { return {Kind::NonVanishing, std::move(p)}; }

  bool holds_at(const Rational& value) const {
    return kind == Kind::Equation ? value.is_zero() : !value.is_zero();
  }
  /// "alpha*gamma + beta*delta = 0" or "alpha + delta != 0".
  std::string str() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// A three-dimensional metric Lie algebra. With S = Polynomial the constants
/// depend on the group parameters and `constraints` cut out the admissible
/// parameter set; with S = Rational the algebra is a single numeric instance
/// and carries no constraints.
template <ExactScalar S>
struct LieAlgebra {
  StructureConstants<S> constants;
  MetricSignature signature;
  std::vector<Constraint> constraints;
};

using LieAlgebraSpec = LieAlgebra<Polynomial>;
using NumericLieAlgebra = LieAlgebra<Rational>;

/// Exact values for the group parameters. The soliton constant c is never
/// part of an assignment.
class ParameterAssignment {
 public:
  ParameterAssignment() = default;
  explicit ParameterAssignment(Assignment values);

  const Assignment& values() const { return values_; }
  /// "alpha=1, beta=-1/2"
  std::string str() const;

  friend bool operator==(const ParameterAssignment&, const ParameterAssignment&) = default;
  friend bool operator<(const ParameterAssignment& a, const ParameterAssignment& b) {
    return a.values_ < b.values_;
  }

 private:
  Assignment values_;
};

template <ExactScalar S>
Vec3<S> bracket(const LieAlgebra<S>& spec, const Vec3<S>& x, const Vec3<S>& y) {
  Vec3<S> out = zero_vec<S>();
  for (int i = 0; i < 3; ++i) {
    if (x(i) == S(0)) continue;
    for (int j = 0; j < 3; ++j) {
      if (i == j || y(j) == S(0)) continue;
      const S w = x(i) * y(j);
      for (int k = 0; k < 3; ++k) out(k) += w * spec.constants(i, j)(k);
    }
  }
  return out;
}

/// [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]].
template <ExactScalar S>
Vec3<S> jacobi_residual(const LieAlgebra<S>& spec) {
  const Vec3<S> e1 = basis_vec<S>(0), e2 = basis_vec<S>(1), e3 = basis_vec<S>(2);
  Vec3<S> r = bracket(spec, e1, bracket(spec, e2, e3));
  r += bracket(spec, e2, bracket(spec, e3, e1));
  r += bracket(spec, e3, bracket(spec, e1, e2));
  return r;
}

/// Variables occurring in the structure constants or constraints.
std::vector<Var> parameters(const LieAlgebraSpec& spec);

/// Reduces p by every Equation constraint of binomial (or monomial) form, in
/// list order, using reduction_variable() for each.
Polynomial reduce_modulo_constraints(const Polynomial& p,
                                     const std::vector<Constraint>& constraints);

struct Violation {
  Constraint constraint;
  Rational value;  // the constraint polynomial evaluated at the point
  std::string str() const;
};

/// Empty result means the point is admissible. Throws MissingVariable if a
/// parameter of the spec has no value.
std::vector<Violation> validate_assignment(const LieAlgebraSpec& spec,
                                           const ParameterAssignment& point);

/// Numeric instance at an admissible point; throws InvalidAssignment listing
/// the violations otherwise.
NumericLieAlgebra evaluate_spec(const LieAlgebraSpec& spec, const ParameterAssignment& point);

struct SamplingOptions {
  std::vector<Rational> ladder;
  /// Parameters that do not get 0 added to their ladder.
  std::set<Var> exclude_zero;
};

/// The fixed rational ladder {-2, -1, -1/2, 1/2, 1, 2, 3}.
std::vector<Rational> default_ladder();

/// Deterministic sample of admissible points, sorted and duplicate-free.
///
/// Every parameter ranges over the ladder (plus 0), eta over {1, -1}, and the
/// product is filtered by validate_assignment. In addition, for each Equation
/// constraint linear in some parameter, the last such parameter is solved for
/// from every ladder choice of the others whenever its coefficient is nonzero,
/// which reaches admissible points off the ladder.
std::vector<ParameterAssignment> sample_points(const LieAlgebraSpec& spec,
                                               const SamplingOptions& options);

/// Jacobi holds on the constraint variety: every residual component reduces
/// to zero modulo the constraints, or else vanishes at every sampled point.
bool jacobi_holds(const LieAlgebraSpec& spec);

// JSON form used by `--spec-file`:
// {"brackets": {"12": [p, p, p], "13": [...], "23": [...]},
//  "signature": [1, 1, -1],
//  "constraints": [{"kind": "equation" | "nonvanishing", "poly": "..."}]}
LieAlgebraSpec spec_from_json(const nlohmann::json& j, const SymbolTable* symbols = nullptr);
nlohmann::json spec_to_json(const LieAlgebraSpec& spec);

}  // namespace wanas

#endif  // WANAS_LIE_ALGEBRA_HPP
