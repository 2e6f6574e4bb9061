#include "wanas/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "wanas/errors.hpp"
#include "wanas/expression.hpp"

namespace wanas {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames = {
    "alpha", "beta", "gamma", "delta", "eta", "c"};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

}  // namespace

std::string_view var_name(Var v) { return kNames[idx(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (Var v : kAllVars) {
    if (kNames[idx(v)] == name) return v;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, unsigned exponent) {
  Monomial m;
  m.exps_[idx(v)] = static_cast<std::uint8_t>(exponent);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    q.exps_[i] = static_cast<std::uint8_t>(other.exps_[i] - exps_[i]);
  }
  return q;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::string Monomial::str() const {
  std::string out;
  for (Var v : kAllVars) {
    const unsigned e = exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(Var v) { terms_.emplace(Monomial::of(v), Rational(1)); }

Polynomial::Polynomial(const Monomial& m, const Rational& coefficient) {
  if (!coefficient.is_zero()) terms_.emplace(m, coefficient);
}

Polynomial Polynomial::parse(std::string_view text) { return parse_expression(text); }

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // Graded order: the last key has the largest total degree.
  return static_cast<int>(terms_.rbegin()->first.degree());
}

int Polynomial::degree_in(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, coeff] : terms_) d = std::max(d, static_cast<int>(m.exponent(v)));
  return d;
}

std::vector<Var> Polynomial::variables() const {
  std::vector<Var> vars;
  for (Var v : kAllVars) {
    if (contains(v)) vars.push_back(v);
  }
  return vars;
}

Polynomial Polynomial::coefficient_of(Var v, unsigned k) const {
  Polynomial out;
  const Monomial vk = Monomial::of(v, k);
  for (const auto& [m, coeff] : terms_) {
    if (m.exponent(v) != k) continue;
    out.add_term(vk.quotient_of(m), coeff);
  }
  return out;
}

Rational Polynomial::evaluate(const Assignment& assignment) const {
  // Powers are cached per variable; degrees are tiny but terms repeat them.
  std::array<std::vector<Rational>, kVarCount> powers;
  for (Var v : kAllVars) {
    const int d = degree_in(v);
    if (d <= 0) continue;
    auto it = assignment.find(v);
    if (it == assignment.end()) throw MissingVariable(std::string(var_name(v)));
    auto& pw = powers[idx(v)];
    pw.push_back(Rational(1));
    for (int e = 1; e <= d; ++e) pw.push_back(pw.back() * it->second);
  }
  Rational total;
  for (const auto& [m, coeff] : terms_) {
    Rational t = coeff;
    for (Var v : kAllVars) {
      const unsigned e = m.exponent(v);
      if (e > 0) t *= powers[idx(v)][e];
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(const Substitution& images) const {
  if (images.empty()) return *this;
  std::map<std::pair<Var, unsigned>, Polynomial> cache;
  auto image_power = [&](Var v, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, images.at(v).pow(e)).first;
    return it->second;
  };
  Polynomial out;
  for (const auto& [m, coeff] : terms_) {
    Monomial kept;
    std::vector<std::pair<Var, unsigned>> replaced;
    for (Var v : kAllVars) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      if (images.count(v)) {
        replaced.emplace_back(v, e);
      } else {
        kept = kept * Monomial::of(v, e);
      }
    }
    Polynomial term(kept, coeff);
    for (const auto& [v, e] : replaced) term *= image_power(v, e);
    out += term;
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, coeff] : other.terms_) add_term(m, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, coeff] : other.terms_) add_term(m, -coeff);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& [m, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, coeff] = *it;
    const bool negative = coeff.sign() < 0;
    const Rational mag = coeff.abs();
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_constant()) {
      out += mag.str();
    } else {
      if (!mag.is_one()) out += mag.str() + "*";
      out += m.str();
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

// ------------------------------------------------------------ free functions

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Rational poly_eval(const Polynomial& p, const Assignment& assignment) {
  return p.evaluate(assignment);
}
Polynomial poly_substitute(const Polynomial& p, const Substitution& partial) {
  return p.substitute(partial);
}

std::optional<Var> reduction_variable(const Polynomial& relation) {
  const auto& terms = relation.terms();
  if (terms.empty() || terms.size() > 2 || relation.is_constant()) return std::nullopt;
  for (Var v : kAllVars) {
    int holders = 0;
    for (const auto& [m, coeff] : terms) holders += m.exponent(v) > 0 ? 1 : 0;
    if (holders == 1) return v;
  }
  return std::nullopt;
}

Polynomial poly_reduce(const Polynomial& p, const Polynomial& relation, Var leading) {
  const auto& terms = relation.terms();
  if (terms.empty() || terms.size() > 2) {
    throw UnsupportedRelation("relation must have one or two terms: " + relation.str());
  }
  const Monomial* lead = nullptr;
  Rational lead_coeff;
  Polynomial rest;
  for (const auto& [m, coeff] : terms) {
    if (m.exponent(leading) > 0) {
      if (lead != nullptr) {
        throw UnsupportedRelation("variable '" + std::string(var_name(leading)) +
                                  "' occurs in both terms of " + relation.str());
      }
      lead = &m;
      lead_coeff = coeff;
    } else {
      rest = Polynomial(m, coeff);
    }
  }
  if (lead == nullptr) {
    throw UnsupportedRelation("variable '" + std::string(var_name(leading)) +
                              "' does not occur in " + relation.str());
  }
  // lead_coeff * L + rest = 0, so L -> -rest / lead_coeff.
  const Polynomial replacement = -rest * lead_coeff.inverse();

  Polynomial current = p;
  for (;;) {
    Polynomial next;
    bool changed = false;
    for (const auto& [m, coeff] : current.terms()) {
      if (lead->divides(m)) {
        next += Polynomial(lead->quotient_of(m), coeff) * replacement;
        changed = true;
      } else {
        next += Polynomial(m, coeff);
      }
    }
    current = std::move(next);
    if (!changed) return current;
  }
}

Polynomial substitute_to_fixpoint(const Polynomial& p, const Substitution& images) {
  Polynomial current = p;
  // Each pass removes one level of chaining; the universe has six variables.
  for (std::size_t pass = 0; pass <= kVarCount; ++pass) {
    bool pending = false;
    for (const auto& [v, image] : images) pending = pending || current.contains(v);
    if (!pending) return current;
    current = current.substitute(images);
  }
  throw Error("cyclic substitution while expanding " + p.str());
}

}  // namespace wanas
