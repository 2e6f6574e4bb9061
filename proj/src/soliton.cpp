#include "wanas/soliton.hpp"

#include <sstream>

#include "wanas/tensor_format.hpp"

namespace wanas {

std::string_view kind_name(SolitonKind kind) {
  return kind == SolitonKind::First ? "first" : "second";
}

std::optional<SolitonKind> kind_from_name(std::string_view name) {
  if (name == "first" || name == "1") return SolitonKind::First;
  if (name == "second" || name == "2") return SolitonKind::Second;
  return std::nullopt;
}

std::string AffineEquation::str() const {
  const auto [i, j] = kPairs[pair];
  Polynomial lhs = Polynomial(Var::c) * slope + Polynomial(constant);
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")[e" +
         std::to_string(coordinate + 1) + "]: " + lhs.str() + " = 0";
}

SolitonVerdict SolitonVerdict::none(std::vector<AffineEquation> witness) {
  SolitonVerdict v;
  v.outcome = Outcome::NoSoliton;
  v.witness = std::move(witness);
  return v;
}

SolitonVerdict SolitonVerdict::unique(Rational c, Operator3<Rational> d) {
  SolitonVerdict v;
  v.outcome = Outcome::Soliton;
  v.c = std::move(c);
  v.d = std::move(d);
  return v;
}

SolitonVerdict SolitonVerdict::any_c(Operator3<Rational> w) {
  SolitonVerdict v;
  v.outcome = Outcome::SolitonAnyC;
  v.d = std::move(w);
  return v;
}

bool SolitonVerdict::agrees_with(const SolitonVerdict& other) const {
  if (outcome != other.outcome) return false;
  if (outcome == Outcome::NoSoliton) return true;
  return c == other.c && d == other.d;
}

std::string_view outcome_name(SolitonVerdict::Outcome outcome) {
  switch (outcome) {
    case SolitonVerdict::Outcome::NoSoliton:
      return "no_soliton";
    case SolitonVerdict::Outcome::Soliton:
      return "soliton";
    case SolitonVerdict::Outcome::SolitonAnyC:
      return "soliton_any_c";
  }
  return "?";
}

std::vector<AffineEquation> affine_system(const NumericLieAlgebra& spec,
                                          const Operator3<Rational>& w) {
  const DerivationResidual<Rational> base = derivation_residual(w, spec);
  std::vector<AffineEquation> eqs;
  for (int p = 0; p < 3; ++p) {
    const auto [i, j] = kPairs[p];
    for (int k = 0; k < 3; ++k) eqs.push_back({p, k, base[p](k), spec.constants(i, j)(k)});
  }
  return eqs;
}

SolitonVerdict soliton_decide(const NumericLieAlgebra& spec, [[maybe_unused]] SolitonKind kind,
                              const Operator3<Rational>& w) {
  const auto eqs = affine_system(spec, w);
  const AffineEquation* pinned = nullptr;
  Rational c;
  for (const auto& eq : eqs) {
    if (eq.slope.is_zero()) {
      if (!eq.constant.is_zero()) return SolitonVerdict::none({eq});
      continue;
    }
    const Rational value = -eq.constant / eq.slope;
    if (!pinned) {
      pinned = &eq;
      c = value;
    } else if (value != c) {
      return SolitonVerdict::none({*pinned, eq});
    }
  }
  if (!pinned) return SolitonVerdict::any_c(w);
  return SolitonVerdict::unique(c, w - identity_mat<Rational>() * c);
}

bool verdict_sound(const NumericLieAlgebra& spec, const Operator3<Rational>& w,
                   const SolitonVerdict& verdict) {
  switch (verdict.outcome) {
    case SolitonVerdict::Outcome::Soliton:
      return verdict.c && w == identity_mat<Rational>() * *verdict.c + verdict.d &&
             is_derivation(verdict.d, spec);
    case SolitonVerdict::Outcome::SolitonAnyC:
      for (const auto& eq : affine_system(spec, w))
        if (!eq.constant.is_zero() || !eq.slope.is_zero()) return false;
      return verdict.d == w;
    case SolitonVerdict::Outcome::NoSoliton: {
      const auto& ws = verdict.witness;
      if (ws.size() == 1) return ws[0].slope.is_zero() && !ws[0].constant.is_zero();
      if (ws.size() == 2 && !ws[0].slope.is_zero() && !ws[1].slope.is_zero()) {
        return ws[0].constant / ws[0].slope != ws[1].constant / ws[1].slope;
      }
      return false;
    }
  }
  return false;
}

std::vector<Polynomial> residual_system(const LieAlgebraSpec& spec, SolitonKind kind) {
  const Operator3<Polynomial> w = wan_of_kind(compute_all(spec), kind);
  const Operator3<Polynomial> d = w - identity_mat<Polynomial>() * Polynomial(Var::c);
  std::vector<Polynomial> out;
  for (const auto& v : derivation_residual(d, spec))
    for (int k = 0; k < 3; ++k) out.push_back(v(k));
  return out;
}

ClaimCheck check_claimed_solution(const LieAlgebraSpec& family, SolitonKind kind,
                                  const Polynomial& c, const Operator3<Polynomial>& d) {
  ClaimCheck result;
  auto reduce = [&](const Polynomial& p) {
    return reduce_modulo_constraints(p, family.constraints);
  };
  const Operator3<Polynomial> w = wan_of_kind(compute_all(family), kind);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Polynomial diff = w(i, j) - d(i, j);
      if (i == j) diff -= c;
      diff = reduce(diff);
      if (!diff.is_zero()) {
        result.failures.push_back("W(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") - c*Id - D = " + diff.str());
      }
    }
  const auto res = derivation_residual(d, family);
  for (int p = 0; p < 3; ++p)
    for (int k = 0; k < 3; ++k) {
      const Polynomial r = reduce(res[p](k));
      if (!r.is_zero()) {
        const auto [i, j] = kPairs[p];
        result.failures.push_back("derivation residual (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")[e" + std::to_string(k + 1) +
                                  "] = " + r.str());
      }
    }
  result.pass = result.failures.empty();
  return result;
}

nlohmann::json to_json(const SolitonVerdict& verdict) {
  nlohmann::json j;
  j["outcome"] = outcome_name(verdict.outcome);
  j["c"] = verdict.c ? nlohmann::json(verdict.c->str()) : nlohmann::json(nullptr);
  switch (verdict.outcome) {
    case SolitonVerdict::Outcome::Soliton:
      j["D"] = matrix_json(to_poly(verdict.d));
      break;
    case SolitonVerdict::Outcome::SolitonAnyC:
      j["D"] = matrix_json(to_poly(verdict.d) -
                           identity_mat<Polynomial>() * Polynomial(Var::c));
      break;
    case SolitonVerdict::Outcome::NoSoliton:
      j["D"] = nullptr;
      break;
  }
  j["witness"] = nlohmann::json::array();
  for (const auto& eq : verdict.witness) j["witness"].push_back(eq.str());
  return j;
}

std::string to_text(const SolitonVerdict& verdict) {
  std::ostringstream os;
  switch (verdict.outcome) {
    case SolitonVerdict::Outcome::Soliton:
      os << "Soliton c=" << verdict.c->str() << "\nD =\n" << format_matrix(to_poly(verdict.d));
      break;
    case SolitonVerdict::Outcome::SolitonAnyC:
      os << "SolitonAnyC (every c works)\nD(c) =\n"
         << format_matrix(to_poly(verdict.d) - identity_mat<Polynomial>() * Polynomial(Var::c));
      break;
    case SolitonVerdict::Outcome::NoSoliton:
      os << "NoSoliton\ncontradictory equations in c:\n";
      for (const auto& eq : verdict.witness) os << "  " << eq.str() << '\n';
      break;
  }
  return os.str();
}

}  // namespace wanas
