#include <gtest/gtest.h>

#include "kodeg/euler.hpp"
#include "kodeg/expr.hpp"

using namespace kodeg;

namespace {

KOElem E(const std::string& s) { return eval_ko(s); }
constexpr std::uint64_t kTop4 = 0xf;

}  // namespace

TEST(EulerRtilde, ClosedForms) {
  EXPECT_EQ(euler_rtilde(0), KOElem::one());
  EXPECT_EQ(euler_rtilde(1), E("-[C0]_2"));
  EXPECT_EQ(euler_rtilde(2), E("[Rt]_4 - [R]_4"));
  EXPECT_EQ(euler_rtilde(4), E("8[R] - 8[Rt]"));
}

TEST(EulerRtilde, ComplexificationIsPowerOfDifference) {
  CplxRepElem step = cplx_C(3) - cplx_C(1), acc = cplx_C(0);
  for (int m = 1; m <= 8; ++m) {
    acc = tensor_complex(acc, step);
    EXPECT_EQ(ko_complexify(euler_rtilde(m)).value, acc) << "m=" << m;
    EXPECT_EQ(rtilde_complex_expansion(m), acc);
  }
}

TEST(EulerRtilde, MultiplicativeInTheExponent) {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) EXPECT_EQ(ko_mul(euler_rtilde(a), euler_rtilde(b)), euler_rtilde(a + b));
}

TEST(EulerH1, SmallPowers) {
  EXPECT_EQ(euler_h1_power_any(1), E("[R]_4 - [H1]_4"));
  EXPECT_EQ(euler_h1_power(0), E("[R]"));
  EXPECT_EQ(euler_h1_power(2), E("5[R] + [Rt] - 2[H1] + [D2]"));
  EXPECT_THROW(euler_h1_power(3), std::domain_error);
}

TEST(EulerH1, ClosedFormMatchesRingPowers) {
  for (int m = 1; m <= 4; ++m) {
    EXPECT_EQ(euler_h1_power(2 * m), euler_h1_power_ring(2 * m)) << "m=" << m;
    EXPECT_EQ(h1_power_a(m) - h1_power_b(m), Int{1} << (2 * m));
    EXPECT_EQ(h1_power_a(m) + h1_power_b(m), binomial(4 * m, 2 * m));
  }
  for (int p = 1; p <= 7; p += 2) EXPECT_EQ(euler_h1_power_any(p), euler_h1_power_ring(p));
}

TEST(EulerH1, TraceOfJAndVirtualDimension) {
  for (int m = 1; m <= 6; ++m) {
    CharTable ch = character(ko_complexify(euler_h1_power(2 * m)).value);
    Int trj = 0, dimension = 0;
    for (const auto& [e, g] : ch.coset[1].terms()) trj += g.re;
    for (const auto& [e, g] : ch.coset[0].terms()) dimension += g.re;
    EXPECT_EQ(trj, Int{1} << (2 * m));
    EXPECT_EQ(dimension, 0);
  }
}

TEST(TorusCell, Products) {
  EXPECT_EQ(torus_cell_product({2, 0b011}, {0, 0b110}), (TorusCell{3, 0b111}));
  EXPECT_EQ(torus_cell_product({0, 0}, {5, 0b1010}), (TorusCell{5, 0b1010}));
  EXPECT_EQ(torus_cell_product({1, 1}, {1, 1}), (TorusCell{3, 1}));
  EXPECT_EQ(to_string(TorusCell{3, 0b101}), "e(Rt^3)b(Rt^{1,3})");
}

TEST(KeyRelation, BothSignsHold) {
  EXPECT_TRUE(keyrelation_check(1).holds);
  EXPECT_TRUE(keyrelation_check(-1).holds);
  EXPECT_TRUE(keyrelation_check());
}

TEST(KeyRelation, PerturbedClassFails) {
  KeyRelationResult r = keyrelation_check(1, E("[Rt]"));
  EXPECT_FALSE(r.holds);
  EXPECT_NE(r.lhs, r.rhs);
  EXPECT_FALSE(keyrelation_check(-1, E("[Rt]")).holds);
}

TEST(Divis, AlphaExamples) {
  DivisAlpha a = divis_alpha(2, 0, 0, {1, 0});
  EXPECT_EQ(a.coefficient, Dyadic(2));
  ASSERT_TRUE(a.value.has_value());
  EXPECT_EQ(*a.value, E("2[R] - 2[Rt]"));

  DivisAlpha b = divis_alpha(0, 4, 0, {1});
  ASSERT_TRUE(b.value.has_value());
  EXPECT_EQ(*b.value, E("-[R]_4 + [Rt]_4"));

  DivisAlpha z = divis_alpha(2, 0, 1, {0, 0});
  ASSERT_TRUE(z.value.has_value());
  EXPECT_TRUE(z.value->is_zero());
  EXPECT_THROW(divis_alpha(1, 0, 0, {1}), std::domain_error);
  EXPECT_THROW(divis_alpha(2, 0, 0, {1}), std::domain_error);
}

TEST(Divis, VerifyExamples) {
  EXPECT_TRUE(divis_verify(2, 0, 0, {1, 0}).ok);
  EXPECT_TRUE(divis_verify(0, 4, 0, {1}).ok);
  EXPECT_TRUE(divis_verify(4, 2, 1, {0, 0, 0, 0, 0}).ok);
}

TEST(Divis, VerifierAgreesWithFreeFunction) {
  DivisVerifier v(2, 2);
  for (Int a0 = -2; a0 <= 2; ++a0)
    for (Int a1 = -2; a1 <= 2; ++a1)
      for (Int a2 = -2; a2 <= 2; ++a2) {
        std::vector<Int> a = {a0, a1, a2};
        EXPECT_EQ(v.check(0, a).ok, divis_verify(2, 2, 0, a).ok);
        EXPECT_TRUE(v.check(0, a).ok) << v.check(0, a).detail;
      }
}

TEST(KeyEquation, EmptyFamily) {
  auto m = keyequation_rhs(4, 0, 1, 2, ActiveFamily{0, {}});
  ASSERT_EQ(m.size(), 1u);
  const auto& e = m.at(0);
  ASSERT_EQ(e.terms.size(), 1u);
  EXPECT_EQ(e.terms[0].cover_count, 1);
  EXPECT_EQ(e.terms[0].h1_power, 3);
  EXPECT_EQ(e.terms[0].rtilde_power, 4);
  ASSERT_TRUE(e.coefficient.has_value());
  EXPECT_EQ(*e.coefficient, ko_mul(euler_h1_power_any(3), euler_rtilde(2)));
}

TEST(KeyEquation, SingleQuadruple) {
  auto m = keyequation_rhs(2, 0, 2, 0, ActiveFamily::parse("1,2,3,4"));
  ASSERT_EQ(m.size(), 2u);
  ASSERT_TRUE(m.count(kTop4));
  ASSERT_EQ(m.at(kTop4).terms.size(), 1u);
  EXPECT_EQ(m.at(kTop4).terms[0].m, 1);
  EXPECT_EQ(m.at(kTop4).terms[0].cover_count, 1);
}

TEST(KeyEquation, TorusPatternHasSingleCover) {
  for (int k = 1; k <= 4; ++k) {
    auto m = keyequation_rhs(2, 0, 8, 0, mtorus_family(k));
    std::uint64_t top = (std::uint64_t{1} << (4 * k)) - 1;
    ASSERT_TRUE(m.count(top));
    ASSERT_EQ(m.at(top).terms.size(), 1u);
    EXPECT_EQ(m.at(top).terms[0].m, k);
    EXPECT_EQ(m.at(top).terms[0].cover_count, 1);
  }
}

TEST(KODegree, Components) {
  KODegreeComponent zero = calc_ko_degree_component(4, 0, 2, 0);
  EXPECT_TRUE(zero.magnitude.is_zero());

  // l = 4k + |S|: degree 0, 2^{l/2-k-|S|/2} * N_S / 2 on [R] - [Rt]
  KODegreeComponent c = calc_ko_degree_component(8, 1, 4, 2);
  EXPECT_EQ(c.degree, 0);
  EXPECT_EQ(c.magnitude, Dyadic(2, 0));
  EXPECT_EQ(c.basis_class, E("[R] - [Rt]"));
  EXPECT_EQ(c.sign(), "unknown (+/-1)");
}

TEST(KODegree, TorusPatternIsInconsistentBelowTheBound) {
  // At l one below the bound the component cannot be integral.
  for (int k = 0; k <= 3; ++k) {
    for (int m = 1; m <= 4; ++m) {
      for (int l = 2; l <= 40; l += 2) {
        Int d = m;
        Int eps = 0;
        switch (mod_floor(k + d, 4)) {
          case 0: eps = l >= 4 ? 3 : 1; break;
          case 1: eps = 1; break;
          case 2: eps = 2; break;
          default: eps = 3;
        }
        if (l != 2 * k + 4 * m - 2 * d + eps - 1) continue;
        Int N = 1;
        for (int j = 0; j < m; ++j) N *= -2;
        EXPECT_FALSE(calc_ko_degree_component(l, k, 4 * m, N).consistent()) << "k=" << k << " m=" << m << " l=" << l;
      }
    }
  }
}
