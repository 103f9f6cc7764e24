#include <gtest/gtest.h>

#include <random>

#include "kodeg/expr.hpp"
#include "kodeg/gen.hpp"
#include "kodeg/kograded.hpp"

using namespace kodeg;

namespace {

KOElem B(RealKind k, int index, int degree, Int c = 1) { return KOElem::basis(k, index, degree, c); }
KOElem E(const std::string& s) { return eval_ko(s); }

}  // namespace

TEST(KOBasis, LegalClassesPerDegree) {
  EXPECT_TRUE(is_free_class(RealKind::H, 0));
  EXPECT_TRUE(is_free_class(RealKind::C0, 2));
  EXPECT_TRUE(is_torsion_class(RealKind::H, 2));
  EXPECT_FALSE(is_free_class(RealKind::R, 2) || is_torsion_class(RealKind::R, 2));
  EXPECT_TRUE(is_torsion_class(RealKind::D, 6));
  EXPECT_TRUE(is_torsion_class(RealKind::Rt, 6));
  EXPECT_THROW(B(RealKind::R, 0, 2), std::domain_error);
  EXPECT_THROW(B(RealKind::H, 1, 6), std::domain_error);
}

TEST(KOBasis, DegenerateIndexRewrite) {
  EXPECT_EQ(B(RealKind::D, 0, 0), E("[R] + [Rt]"));
  EXPECT_TRUE(B(RealKind::H, 0, 2).is_zero());
  EXPECT_EQ(B(RealKind::H, 0, 0), E("2[C0]"));
}

TEST(KOBasis, TorsionIsModTwo) {
  KOElem h = B(RealKind::H, 1, 2);
  EXPECT_TRUE((h + h).is_zero());
  EXPECT_EQ(B(RealKind::H, 1, 2, 3), h);
}

TEST(KOMul, ProductExamples) {
  EXPECT_EQ(E("[C0]_2 * [C0]_2"), E("[Rt]_4 - [R]_4"));
  EXPECT_EQ(E("[D2] * [C0]_2"), E("[H2]_2"));
  EXPECT_EQ(E("[D3] * [H3]_2"), E("[H6]_2"));
  EXPECT_EQ(E("[H1]_4 * [H1]_4"), E("[R] + [Rt] + [D2]"));
  EXPECT_EQ(E("[H1]_4 [H2]_4"), E("[D1] + [D3]"));
  EXPECT_EQ(E("[R]_4 [H2]_4"), E("[H2]"));
}

TEST(KOMul, UnitAndRandomLaws) {
  std::mt19937_64 rng(21);
  const int degs[4] = {0, 2, 4, 6};
  for (int t = 0; t < 300; ++t) {
    KOElem x = random_ko(rng, degs[t % 4]), y = random_ko(rng, degs[(t / 4) % 4]);
    KOElem z = random_ko(rng, degs[(t / 16) % 4]);
    EXPECT_EQ(ko_mul(KOElem::one(), x), x);
    EXPECT_EQ(ko_mul(x, y), ko_mul(y, x));
    EXPECT_EQ(ko_mul(ko_mul(x, y), z), ko_mul(x, ko_mul(y, z)));
    if (!ko_mul(x, y).is_zero()) EXPECT_EQ(ko_mul(x, y).degree(), (x.degree() + y.degree()) % 8);
    if (x.degree() == z.degree()) EXPECT_EQ(ko_mul(x + z, y), ko_mul(x, y) + ko_mul(z, y));
    EXPECT_EQ(ko_complexify(ko_mul(x, y)).value,
              tensor_complex(ko_complexify(x).value, ko_complexify(y).value));
  }
}

TEST(KOMul, InverseOffTheImageThrows) {
  // C(0) in degree 4 would need [R]_4 / 2.
  EXPECT_THROW(ko_from_complex(cplx_C(0), 4), InconsistentProduct);
  EXPECT_EQ(ko_from_complex(cplx_C(0) * 2, 4), B(RealKind::R, 0, 4));
}

TEST(Complexify, Examples) {
  GradedCplx r4 = ko_complexify(B(RealKind::R, 0, 4));
  EXPECT_EQ(r4.degree, 4);
  EXPECT_EQ(r4.value, cplx_C(0) * 2);
  EXPECT_TRUE(ko_complexify(B(RealKind::H, 2, 2)).value.is_zero());
  EXPECT_EQ(ko_complexify(B(RealKind::C0, 0, 6)).value, cplx_C(1) - cplx_C(3));
  EXPECT_EQ(ko_complexify(B(RealKind::C0, 0, 2)).value, cplx_C(1) - cplx_C(3));
  EXPECT_EQ(ko_complexify(B(RealKind::C0, 0, 4)).value, cplx_C(1) + cplx_C(3));
  EXPECT_EQ(ko_complexify(B(RealKind::H, 1, 4)).value, cplx_WH(1));
}

TEST(Complexify, RestrictLiftRoundTrip) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    KOElem y = random_ko(rng, t % 2 ? 2 : 6);
    if (y.is_zero()) continue;
    EXPECT_EQ(ko_restrict(ko_lift(y), y.degree()), y);
  }
}

TEST(TableDiagnostics, DocumentedRowsOnly) {
  TableReport r = ko_verify_tables();
  EXPECT_TRUE(r.law_failures.empty()) << render(r, false);
  EXPECT_EQ(r.discrepant_rows(), documented_discrepancies());
  EXPECT_TRUE(r.matches_documented());
  const std::set<std::string> torsion = {"[C0]_4 [C0]_2", "[H_n]_4 [C0]_2"};
  EXPECT_EQ(r.torsion_note_rows(), torsion);
}

TEST(TableDiagnostics, SquareOfH1FromComplexification) {
  TableReport r = ko_verify_tables(2, 10);
  bool seen = false;
  for (const auto& row : r.rows) {
    if (row.instance != "[H1]_4 * [H1]_4") continue;
    seen = true;
    EXPECT_FALSE(row.free_ok);
    EXPECT_EQ(row.computed, "[R] + [Rt] + [D2]");
    EXPECT_EQ(row.table_value, "4[R] + 4[Rt] + 4[D2]");
  }
  EXPECT_TRUE(seen);
}

TEST(Expr, ParsesAndRoundTrips) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    KOElem x = random_ko(rng, 2 * (t % 4));
    EXPECT_EQ(eval_ko(to_string(x)), x) << to_string(x);
  }
  EXPECT_EQ(E("3"), B(RealKind::R, 0, 0, 3));
  EXPECT_EQ(E("-(2[R] - [Rt])"), E("[Rt] - 2[R]"));
  EXPECT_EQ(E("[C0]_10"), E("[C0]_2"));
}

TEST(Expr, Errors) {
  EXPECT_THROW(E("[Q]"), ParseError);
  EXPECT_THROW(E("[R"), ParseError);
  EXPECT_THROW(E("[R]_3"), ParseError);
  EXPECT_THROW(E("[R]_2"), ParseError);
  EXPECT_THROW(E("[R] + [R]_4"), ParseError);
  EXPECT_THROW(E("(1"), ParseError);
  EXPECT_THROW(E(""), ParseError);
  try {
    E("[R] + ?");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position 7"), std::string::npos) << e.what();
  }
}
