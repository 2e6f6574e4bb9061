#include "wanas/lie_algebra.hpp"

#include <algorithm>
#include <functional>

namespace wanas {

std::string Constraint::str() const {
  return poly.str() + (kind == Kind::Equation ? " = 0" : " != 0");
}

ParameterAssignment::ParameterAssignment(Assignment values) : values_(std::move(values)) {
  if (values_.count(Var::c)) {
    throw InvalidAssignment("the soliton constant c cannot be assigned as a parameter");
  }
}

std::string ParameterAssignment::str() const {
  std::string out;
  for (const auto& [v, value] : values_) {
    if (!out.empty()) out += ", ";
    out += std::string(var_name(v)) + "=" + value.str();
  }
  return out;
}

std::string Violation::str() const {
  return constraint.str() + " violated (value " + value.str() + ")";
}

std::vector<Var> parameters(const LieAlgebraSpec& spec) {
  std::set<Var> vars;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (Var v : spec.constants(i, j)(k).variables()) vars.insert(v);
  for (const auto& c : spec.constraints)
    for (Var v : c.poly.variables()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

Polynomial reduce_modulo_constraints(const Polynomial& p,
                                     const std::vector<Constraint>& constraints) {
  Polynomial out = p;
  for (const auto& c : constraints) {
    if (c.kind != Constraint::Kind::Equation) continue;
    if (auto lead = reduction_variable(c.poly)) out = poly_reduce(out, c.poly, *lead);
  }
  return out;
}

std::vector<Violation> validate_assignment(const LieAlgebraSpec& spec,
                                           const ParameterAssignment& point) {
  const Assignment& values = point.values();
  for (Var v : parameters(spec)) {
    if (!values.count(v)) throw MissingVariable(std::string(var_name(v)));
  }
  std::vector<Violation> violations;
  for (const auto& c : spec.constraints) {
    const Rational value = c.poly.evaluate(values);
    if (!c.holds_at(value)) violations.push_back({c, value});
  }
  // eta is a sign wherever it occurs, whether or not the spec says so.
  if (auto it = values.find(Var::eta); it != values.end()) {
    const Rational& eta = it->second;
    if (eta != Rational(1) && eta != Rational(-1)) {
      const Polynomial sq = Polynomial(Var::eta).pow(2) - Polynomial(1);
      violations.push_back({Constraint::equation(sq), eta * eta - Rational(1)});
    }
  }
  return violations;
}

NumericLieAlgebra evaluate_spec(const LieAlgebraSpec& spec, const ParameterAssignment& point) {
  const auto violations = validate_assignment(spec, point);
  if (!violations.empty()) {
    std::string msg = "invalid parameter point (" + point.str() + "):";
    for (const auto& v : violations) msg += "\n  " + v.str();
    throw InvalidAssignment(msg);
  }
  Rank3<Rational> table = zero_rank3<Rational>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) table[i][j](k) = spec.constants(i, j)(k).evaluate(point.values());
  return NumericLieAlgebra{StructureConstants<Rational>::from_table(table), spec.signature, {}};
}

std::vector<Rational> default_ladder() {
  return {Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 2),
          Rational(1),  Rational(2),  Rational(3)};
}

std::vector<ParameterAssignment> sample_points(const LieAlgebraSpec& spec,
                                               const SamplingOptions& options) {
  const std::vector<Var> params = parameters(spec);
  auto values_for = [&](Var v) {
    if (v == Var::eta) return std::vector<Rational>{Rational(-1), Rational(1)};
    std::vector<Rational> vals = options.ladder;
    if (!options.exclude_zero.count(v)) vals.push_back(Rational(0));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
  };

  std::set<ParameterAssignment> points;
  auto admit = [&](const Assignment& a) {
    ParameterAssignment p(a);
    if (validate_assignment(spec, p).empty()) points.insert(std::move(p));
  };

  // Cartesian product over `vars`, calling `visit` on each complete tuple.
  std::function<void(const std::vector<Var>&, std::size_t, Assignment&,
                     const std::function<void(Assignment&)>&)>
      product = [&](const std::vector<Var>& vars, std::size_t pos, Assignment& a,
                    const std::function<void(Assignment&)>& visit) {
        if (pos == vars.size()) {
          visit(a);
          return;
        }
        for (const Rational& value : values_for(vars[pos])) {
          a[vars[pos]] = value;
          product(vars, pos + 1, a, visit);
        }
        a.erase(vars[pos]);
      };

  Assignment scratch;
  product(params, 0, scratch, [&](Assignment& a) { admit(a); });

  for (const auto& c : spec.constraints) {
    if (c.kind != Constraint::Kind::Equation) continue;
    std::optional<Var> solve_for;
    for (Var v : c.poly.variables()) {
      if (v != Var::eta && c.poly.degree_in(v) == 1) solve_for = v;
    }
    if (!solve_for) continue;
    const Polynomial slope = c.poly.coefficient_of(*solve_for, 1);
    const Polynomial offset = c.poly.coefficient_of(*solve_for, 0);
    std::vector<Var> others;
    for (Var v : params) {
      if (v != *solve_for) others.push_back(v);
    }
    product(others, 0, scratch, [&](Assignment& a) {
      const Rational s = slope.evaluate(a);
      if (s.is_zero()) return;
      Assignment full = a;
      full[*solve_for] = -offset.evaluate(a) / s;
      admit(full);
    });
  }
  return {points.begin(), points.end()};
}

bool jacobi_holds(const LieAlgebraSpec& spec) {
  const Vec3<Polynomial> residual = jacobi_residual(spec);
  bool reduced_to_zero = true;
  for (int k = 0; k < 3; ++k) {
    reduced_to_zero = reduced_to_zero &&
                      reduce_modulo_constraints(residual(k), spec.constraints).is_zero();
  }
  if (reduced_to_zero) return true;
  const auto points = sample_points(spec, {default_ladder(), {}});
  if (points.empty()) return false;
  for (const auto& p : points) {
    for (int k = 0; k < 3; ++k) {
      if (!residual(k).evaluate(p.values()).is_zero()) return false;
    }
  }
  return true;
}

// -------------------------------------------------------------------- JSON

namespace {

Vec3<Polynomial> vec_from_json(const nlohmann::json& j, const SymbolTable* symbols) {
  if (!j.is_array() || j.size() != 3) throw ParseError("bracket must be a 3-element array");
  Vec3<Polynomial> v;
  for (int k = 0; k < 3; ++k) {
    v(k) = parse_expression(j.at(k).get<std::string>(), symbols ? *symbols : SymbolTable{});
  }
  return v;
}

nlohmann::json vec_to_json(const Vec3<Polynomial>& v) {
  return nlohmann::json::array({v(0).str(), v(1).str(), v(2).str()});
}

}  // namespace

LieAlgebraSpec spec_from_json(const nlohmann::json& j, const SymbolTable* symbols) {
  const auto& br = j.at("brackets");
  LieAlgebraSpec spec;
  spec.constants = StructureConstants<Polynomial>::from_brackets(
      vec_from_json(br.at("12"), symbols), vec_from_json(br.at("13"), symbols),
      vec_from_json(br.at("23"), symbols));
  if (j.contains("signature")) {
    const auto& sig = j.at("signature");
    if (!sig.is_array() || sig.size() != 3) throw ParseError("signature must have 3 entries");
    for (int i = 0; i < 3; ++i) {
      const int e = sig.at(i).get<int>();
      if (e != 1 && e != -1) throw ParseError("signature entries must be +1 or -1");
      spec.signature.eps[i] = e;
    }
  }
  if (j.contains("constraints")) {
    for (const auto& c : j.at("constraints")) {
      const std::string kind = c.at("kind").get<std::string>();
      Polynomial p = parse_expression(c.at("poly").get<std::string>(),
                                      symbols ? *symbols : SymbolTable{});
      if (p.contains(Var::c)) throw ParseError("constraints cannot mention c");
      if (kind == "equation") {
        spec.constraints.push_back(Constraint::equation(std::move(p)));
      } else if (kind == "nonvanishing") {
        spec.constraints.push_back(Constraint::non_vanishing(std::move(p)));
      } else {
        throw ParseError("unknown constraint kind '" + kind + "'");
      }
    }
  }
  return spec;
}

nlohmann::json spec_to_json(const LieAlgebraSpec& spec) {
  nlohmann::json j;
  j["brackets"] = {{"12", vec_to_json(spec.constants(0, 1))},
                   {"13", vec_to_json(spec.constants(0, 2))},
                   {"23", vec_to_json(spec.constants(1, 2))}};
  j["signature"] = spec.signature.eps;
  j["constraints"] = nlohmann::json::array();
  for (const auto& c : spec.constraints) {
    j["constraints"].push_back(
        {{"kind", c.kind == Constraint::Kind::Equation ? "equation" : "nonvanishing"},
         {"poly", c.poly.str()}});
  }
  return j;
}

}  // namespace wanas
