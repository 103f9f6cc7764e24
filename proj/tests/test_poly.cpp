#include <gtest/gtest.h>

#include <random>

#include "kodeg/poly.hpp"

using namespace kodeg;

TEST(UniPoly, Arithmetic) {
  UniPoly x = UniPoly::x();
  UniPoly one = UniPoly::constant(1);
  EXPECT_EQ((one - x) * (one - x), UniPoly::one_minus_x_pow(2));
  EXPECT_EQ((x * x * x).derivative(), x * x * 3);
  EXPECT_EQ((x * x * x - x).str(), "-x + x^3");
  EXPECT_EQ(UniPoly().str(), "0");
  EXPECT_EQ(UniPoly::one_minus_x_pow(0), one);
}

TEST(MultiPoly, TimesOneMinusThenDivideIsIdentity) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4), var(0, 3);
  for (int t = 0; t < 100; ++t) {
    MultiPoly p(4);
    for (int k = 0; k < 6; ++k) p = p + MultiPoly::monomial(4, {e(rng), e(rng), e(rng), e(rng)}, c(rng));
    int v = var(rng);
    std::vector<int> ex(4, 0);
    ex[v] = 1;
    MultiPoly q = p.times_one_minus(MultiPoly::pack(ex));
    EXPECT_EQ(q.divide_one_minus(v), p);
  }
}

TEST(MultiPoly, DivisionWithRemainderThrows) {
  MultiPoly p = MultiPoly::monomial(2, {0, 1});
  EXPECT_THROW(p.divide_one_minus(1), std::logic_error);
}

TEST(Mu, SmallCases) {
  EXPECT_EQ(mu_poly(1).str(), "-x0");
  EXPECT_EQ(mu_poly(2).str(), "-x0");
  EXPECT_EQ(mu_poly(3).str(), "-x0 + x0^3*x1*x2*x3");
  EXPECT_THROW(mu_poly(7), std::domain_error);
  EXPECT_THROW(mu_poly(0), std::domain_error);
}

TEST(Nu, SmallCases) {
  EXPECT_EQ(nu_poly(1).str(), "-x");
  EXPECT_EQ(nu_poly(4).str(), "-x + 9*x^3 - 16*x^4 + 9*x^5 - x^7");
}

TEST(MuNu, SpecializationAgreesUpToFive) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(mu_poly(n).specialize_to_x0(), nu_poly(n)) << "n=" << n;
}

TEST(MuNu, SpecializationAgreesAtSix) {
  EXPECT_EQ(mu_poly(6).specialize_to_x0(), nu_poly(6));
}
