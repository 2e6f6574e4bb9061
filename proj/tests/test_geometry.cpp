#include <gtest/gtest.h>

#include "support.hpp"
#include "wanas/tensor_format.hpp"

namespace wanas {
namespace {

using testing::at;
using testing::P;

const TensorBundle<Polynomial>& bundle(GroupId id) {
  static std::map<GroupId, TensorBundle<Polynomial>> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, compute_all(get_group(id).spec)).first;
  return it->second;
}

Polynomial eta_reduced(const Polynomial& p) {
  return poly_reduce(p, P("eta^2 - 1"), Var::eta);
}

NumericLieAlgebra random_table(testing::RandomPolys& gen) {
  NumericLieAlgebra alg;
  alg.signature = MetricSignature::lorentzian();
  Vec3<Rational> b[3];
  for (auto& v : b) v = Vec3<Rational>(gen.rational(), gen.rational(), gen.rational());
  alg.constants = StructureConstants<Rational>::from_brackets(b[0], b[1], b[2]);
  return alg;
}

TrilinearComponents<Rational> random_trilinear(testing::RandomPolys& gen) {
  TrilinearComponents<Rational> k = zero_rank4<Rational>();
  for (auto& a : k)
    for (auto& b : a)
      for (auto& v : b) v = Vec3<Rational>(gen.rational(), gen.rational(), gen.rational());
  return k;
}

template <ExactScalar S>
bool metric_compatible(const ConnectionCoeffs<S>& conn, const MetricSignature& sig) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const S lhs = conn[i][j](k) * S(Rational(sig.eps[k])) +
                      conn[i][k](j) * S(Rational(sig.eps[j]));
        if (!(lhs == S(0))) return false;
      }
  return true;
}

TEST(LeviCivita, AbelianIsFlat) {
  const auto lc = levi_civita(testing::abelian_spec());
  for (const auto& row : lc)
    for (const auto& v : row) EXPECT_TRUE(all_zero(v));
}

TEST(LeviCivita, TorsionFreeAndMetricOnCatalog) {
  for (GroupId id : kAllGroups) {
    const auto& spec = get_group(id).spec;
    const auto lc = levi_civita(spec);
    EXPECT_TRUE(metric_compatible(lc, spec.signature)) << group_name(id);
    for (const auto& row : torsion(lc, spec))
      for (const auto& v : row) EXPECT_TRUE(all_zero(v)) << group_name(id);
  }
}

TEST(LeviCivita, TorsionFreeAndMetricOnRandomTables) {
  testing::RandomPolys gen(11);
  for (int n = 0; n < 200; ++n) {
    const NumericLieAlgebra alg = random_table(gen);
    const auto lc = levi_civita(alg);
    ASSERT_TRUE(metric_compatible(lc, alg.signature));
    for (const auto& row : torsion(lc, alg))
      for (const auto& v : row) ASSERT_TRUE(all_zero(v));
  }
}

TEST(NablaJ, VanishesForBlockDiagonalConnections) {
  ConnectionCoeffs<Polynomial> conn = zero_rank3<Polynomial>();
  conn[0][1] = Vec3<Polynomial>(P("alpha"), P("beta"), Polynomial());
  conn[2][2] = Vec3<Polynomial>(Polynomial(), Polynomial(), P("gamma"));
  conn[1][0] = Vec3<Polynomial>(P("delta"), Polynomial(), Polynomial());
  for (const auto& row : nabla_j(conn, ProductStructure::standard()))
    for (const auto& v : row) EXPECT_TRUE(all_zero(v));
  const auto flat = levi_civita(testing::abelian_spec());
  for (const auto& row : nabla_j(flat, ProductStructure::standard()))
    for (const auto& v : row) EXPECT_TRUE(all_zero(v));
}

TEST(CanonicalConnection, PreservesMetricAndProductStructure) {
  for (GroupId id : kAllGroups) {
    const auto& spec = get_group(id).spec;
    const auto& conn = bundle(id).connection;
    EXPECT_TRUE(metric_compatible(conn, spec.signature)) << group_name(id);
    for (const auto& row : nabla_j(conn, ProductStructure::standard()))
      for (const auto& v : row) EXPECT_TRUE(all_zero(v)) << group_name(id);
  }
}

TEST(CanonicalConnection, CatalogEntries) {
  const auto& g1 = bundle(GroupId::G1).connection;
  EXPECT_EQ(g1[0][0], Vec3<Polynomial>(Polynomial(), P("-alpha"), Polynomial()));
  EXPECT_EQ(g1[2][0], Vec3<Polynomial>(Polynomial(), P("beta/2"), Polynomial()));
  const auto& g5 = bundle(GroupId::G5).connection;
  EXPECT_EQ(g5[2][0], Vec3<Polynomial>(Polynomial(), P("-(beta - gamma)/2"), Polynomial()));
  const auto flat = canonical_connection(testing::abelian_spec(), ProductStructure::standard());
  for (const auto& row : flat)
    for (const auto& v : row) EXPECT_TRUE(all_zero(v));
}

TEST(Torsion, CatalogEntryAndAbelian) {
  EXPECT_EQ(bundle(GroupId::G1).torsion[0][2],
            Vec3<Polynomial>(P("alpha"), P("beta/2"), Polynomial()));
  const auto spec = testing::abelian_spec();
  const auto b = compute_all(spec);
  for (const auto& row : b.torsion)
    for (const auto& v : row) EXPECT_TRUE(all_zero(v));
  EXPECT_TRUE(all_zero(b.wan));
  for (const auto& a : b.wanas)
    for (const auto& row : a)
      for (const auto& v : row) EXPECT_TRUE(all_zero(v));
}

TEST(Curvature, AntisymmetricInFirstTwoSlots) {
  for (GroupId id : kAllGroups) {
    const auto& b = bundle(id);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
          EXPECT_TRUE(all_zero(Vec3<Polynomial>(b.curvature[i][j][l] + b.curvature[j][i][l])));
          EXPECT_TRUE(all_zero(Vec3<Polynomial>(b.wanas[i][j][l] + b.wanas[j][i][l])));
          EXPECT_TRUE(all_zero(Vec3<Polynomial>(b.a_tensor[i][j][l] + b.a_tensor[j][i][l])));
        }
  }
}

TEST(Contraction, ShortcutAgreesWithLiteralSum) {
  const MetricSignature sig = MetricSignature::lorentzian();
  for (GroupId id : kAllGroups) {
    const auto& b = bundle(id);
    EXPECT_EQ(contract(b.curvature, sig), contract_shortcut(b.curvature)) << group_name(id);
    EXPECT_EQ(contract(b.a_tensor, sig), contract_shortcut(b.a_tensor)) << group_name(id);
    EXPECT_EQ(contract(b.wanas, sig), contract_shortcut(b.wanas)) << group_name(id);
  }
  testing::RandomPolys gen(5);
  for (int n = 0; n < 1000; ++n) {
    const auto k = random_trilinear(gen);
    ASSERT_EQ(contract(k, sig), contract_shortcut(k));
  }
  EXPECT_TRUE(all_zero(contract(zero_rank4<Polynomial>(), sig)));
}

TEST(Contraction, CatalogEntries) {
  const auto& g1 = bundle(GroupId::G1);
  EXPECT_EQ(g1.rho(0, 0), P("-(alpha^2 + beta^2/2)"));
  EXPECT_EQ(g1.abar(2, 0), P("alpha*beta/2"));
  EXPECT_EQ(g1.ric(2, 0), P("alpha*beta/2"));
  EXPECT_EQ(g1.ric(2, 1), P("alpha^2"));
  EXPECT_EQ(g1.ric(2, 2), Polynomial());
  EXPECT_EQ(bundle(GroupId::G7).wan(0, 2), P("-(alpha*beta + gamma*delta/2)"));
}

TEST(OperatorForm, RoundTripAndSignatureRaise) {
  const MetricSignature sig = MetricSignature::lorentzian();
  EXPECT_EQ(operator_from_form(identity_mat<Rational>(), sig),
            testing::rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
  testing::RandomPolys gen(17);
  for (int n = 0; n < 1000; ++n) {
    BilinearForm<Polynomial> s;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s(i, j) = gen.poly(2, 1);
    ASSERT_EQ(form_from_operator(operator_from_form(s, sig), sig), s);
    ASSERT_EQ(operator_from_form(form_from_operator(s, sig), sig), s);
  }
}

TEST(Symmetrize, FormIsSymmetric) {
  const MetricSignature sig = MetricSignature::lorentzian();
  testing::RandomPolys gen(23);
  for (int n = 0; n < 1000; ++n) {
    Operator3<Polynomial> m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = gen.poly(2, 1);
    const BilinearForm<Polynomial> s = form_from_operator(symmetrize_operator(m, sig), sig);
    ASSERT_EQ(s, BilinearForm<Polynomial>(s.transpose()));
  }
  const Operator3<Polynomial> d =
      testing::mat({{"alpha", "0", "0"}, {"0", "beta", "0"}, {"0", "0", "c"}});
  EXPECT_EQ(symmetrize_operator(d, sig), d);
}

TEST(Symmetrize, CatalogEntries) {
  const auto& g1 = bundle(GroupId::G1);
  EXPECT_EQ(g1.wan_tilde(0, 2), P("alpha*beta/4"));
  EXPECT_EQ(g1.wan_tilde(2, 0), P("-alpha*beta/4"));
  EXPECT_EQ(bundle(GroupId::G6).wan_tilde(1, 2), P("gamma*alpha/2 + delta*(beta - gamma)/4"));
}

TEST(WanOperator, CatalogEntries) {
  const auto& g5 = bundle(GroupId::G5);
  EXPECT_TRUE(all_zero(g5.ric));
  const Polynomial q = P("alpha^2 + (beta + gamma)^2/2 + delta^2");
  EXPECT_EQ(g5.abar, testing::mat({{"0", "0", "0"},
                                   {"0", "0", "0"},
                                   {"0", "0", "-(alpha^2 + (beta + gamma)^2/2 + delta^2)"}}));
  EXPECT_EQ(g5.wan, wan_operator(g5.ric, g5.abar));
  EXPECT_EQ(g5.wan(2, 2), q);

  const SymbolTable& b = get_group(GroupId::G4).shorthands;
  const Polynomial expected = parse_expression("(b3 - 2*b1)*(2*eta - beta) - 2", b);
  EXPECT_EQ(eta_reduced(bundle(GroupId::G4).wan(0, 0) - expected), Polynomial());
  EXPECT_TRUE(all_zero(wan_operator(zero_mat<Polynomial>(), zero_mat<Polynomial>())));
}

// The numeric route (evaluate the algebra, then compute) and the symbolic
// route (compute, then evaluate the polynomials) must agree everywhere.
TEST(DualRoute, NumericAgreesWithSymbolic) {
  for (GroupId id : kAllGroups) {
    const auto& spec = get_group(id).spec;
    const auto& sym = bundle(id);
    const auto points = sample_points(spec, {default_ladder(), {}});
    for (std::size_t n = 0; n < points.size(); n += 7) {
      const Assignment& a = points[n].values();
      const auto num = compute_all(evaluate_spec(spec, points[n]));
      auto ev = [&](const Polynomial& p) { return p.evaluate(a); };
      ASSERT_EQ(map_entries<Rational>(sym.wan, ev), num.wan) << points[n].str();
      ASSERT_EQ(map_entries<Rational>(sym.wan_tilde, ev), num.wan_tilde) << points[n].str();
      ASSERT_EQ(map_entries<Rational>(sym.ric, ev), num.ric) << points[n].str();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          ASSERT_EQ(map_entries<Rational>(sym.connection[i][j], ev), num.connection[i][j]);
          ASSERT_EQ(map_entries<Rational>(sym.torsion[i][j], ev), num.torsion[i][j]);
        }
    }
  }
}

TEST(Format, ConnectionAndMatrix) {
  const std::string text = format_connection(bundle(GroupId::G7).connection);
  EXPECT_NE(text.find("nabla0_{e1} e1 = alpha*e2"), std::string::npos) << text;
  EXPECT_EQ(format_connection(zero_rank3<Polynomial>()), "all components vanish\n");
  EXPECT_EQ(format_vector(Vec3<Polynomial>(P("beta"), P("alpha - gamma"), P("-1"))),
            "beta*e1 + (alpha - gamma)*e2 - e3");
  EXPECT_EQ(format_matrix(identity_mat<Polynomial>()),
            "[ 1 | 0 | 0 ]\n[ 0 | 1 | 0 ]\n[ 0 | 0 | 1 ]\n");
}

}  // namespace
}  // namespace wanas
