#ifndef WANAS_TESTS_SUPPORT_HPP
#define WANAS_TESTS_SUPPORT_HPP

#include <random>
#include <string>

#include "wanas/catalog.hpp"
#include "wanas/expression.hpp"

namespace wanas::testing {

inline Polynomial P(const std::string& text) { return parse_expression(text); }

inline ParameterAssignment at(const std::string& text) {
  return ParameterAssignment(parse_assignment(text));
}

inline Mat3<Polynomial> mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  Mat3<Polynomial> m;
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const char* e : row) m(i, j++) = P(e);
    ++i;
  }
  return m;
}

inline Mat3<Rational> rmat(std::initializer_list<std::initializer_list<long>> rows) {
  Mat3<Rational> m;
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long e : row) m(i, j++) = Rational(e);
    ++i;
  }
  return m;
}

inline LieAlgebraSpec abelian_spec() {
  LieAlgebraSpec spec;
  spec.signature = MetricSignature::lorentzian();
  return spec;
}

class RandomPolys {
 public:
  explicit RandomPolys(unsigned seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    return Rational(num(rng_), den(rng_));
  }

  Polynomial poly(int max_terms = 4, unsigned max_exp = 2) {
    std::uniform_int_distribution<int> terms(0, max_terms), var(0, 4);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    Polynomial p;
    const int n = terms(rng_);
    for (int t = 0; t < n; ++t) {
      Monomial m;
      for (int k = 0; k < 2; ++k) m = m * Monomial::of(static_cast<Var>(var(rng_)), exp(rng_));
      p += Polynomial(m, rational());
    }
    return p;
  }

  Assignment point() {
    Assignment a;
    for (Var v : {Var::alpha, Var::beta, Var::gamma, Var::delta, Var::eta}) a[v] = rational();
    return a;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace wanas::testing

#endif  // WANAS_TESTS_SUPPORT_HPP
