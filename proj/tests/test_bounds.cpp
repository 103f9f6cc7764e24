#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "kodeg/bounds.hpp"
#include "kodeg/gen.hpp"

using namespace kodeg;

namespace {

ManifoldData shape(Int sign, Int b2plus) {
  ManifoldData m;
  m.name = "X";
  m.sign = sign;
  m.b2plus = b2plus;
  return m;
}

}  // namespace

TEST(Epsilon, Cases) {
  EXPECT_EQ(epsilon(0, 4), 3);
  EXPECT_EQ(epsilon(0, 3), 1);
  EXPECT_EQ(epsilon(1, 9), 1);
  EXPECT_EQ(epsilon(2, 1), 2);
  EXPECT_EQ(epsilon(3, 1), 3);
  EXPECT_EQ(epsilon(-2, 5), 2);
  EXPECT_EQ(epsilon(-1, 5), 3);
}

TEST(Epsilon, PeriodicAndBounded) {
  for (Int d = -20; d <= 20; ++d)
    for (Int l = 1; l <= 8; ++l) {
      EXPECT_EQ(epsilon(d + 4, l), epsilon(d, l));
      EXPECT_GE(epsilon(d, l), 1);
      EXPECT_LE(epsilon(d, l), 3);
    }
}

TEST(Main2, ShapeOfK3) {
  BoundReport r = main2_bound(shape(-16, 3));
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].S, 0u);
  EXPECT_EQ(r.best_rhs, 3);
  EXPECT_TRUE(r.all_satisfied());
  EXPECT_NE(render_text(r).find("best rhs = 3 at S=∅; satisfied"), std::string::npos);
}

TEST(Main2, InconsistentData) {
  BoundReport r = main2_bound(shape(-32, 5));
  EXPECT_EQ(r.best_rhs, 6);
  EXPECT_FALSE(r.all_satisfied());
  EXPECT_NE(render_text(r).find("violated (6 > 5)"), std::string::npos);
}

TEST(Main2, EmptySetTableForSmallK) {
  const Int want[9] = {3, 3, 6, 9, 11, 11, 14, 17, 19};
  for (int k = 0; k <= 8; ++k) {
    BoundReport r = main2_bound(shape(-16 * k, 30));
    EXPECT_EQ(r.entries.front().rhs, want[k]) << "k=" << k;
    EXPECT_EQ(empty_set_rhs(-16 * k, 30), want[k]);
  }
}

TEST(Main2, TorusPatternMaximalSet) {
  for (int m = 1; m <= 8; ++m) {
    for (Int b2plus : {Int{1}, Int{3}, Int{3 * m}, Int{40}}) {
      ManifoldData x = mtorus(m);
      x.sign = -16;
      x.b2plus = b2plus;
      BoundReport r = main2_bound(x);
      Mask top = (Mask{1} << (4 * m)) - 1;
      const BoundEntry* e = nullptr;
      for (const auto& entry : r.entries)
        if (entry.S == top) e = &entry;
      ASSERT_NE(e, nullptr);
      EXPECT_EQ(e->d, m);
      EXPECT_EQ(e->rhs, 2 + 2 * m + epsilon(1 + m, b2plus));
      EXPECT_EQ(e->rhs, torus_pattern_rhs(m, -16, b2plus));
    }
  }
}

TEST(Main2, EntriesAreEvenAndNonzeroAndBestIsMax) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 100; ++t) {
    ActiveFamily f = random_family(rng, 10, 6);
    BoundReport r = bound_report(-16 * (t % 3), 7, f);
    ASSERT_FALSE(r.entries.empty());
    EXPECT_EQ(r.entries.front().S, 0u);
    Int best = r.entries.front().rhs;
    for (const auto& e : r.entries) {
      EXPECT_EQ(popcount(e.S) % 2, 0);
      EXPECT_NE(e.N, 0);
      best = std::max(best, e.rhs);
    }
    EXPECT_EQ(r.best_rhs, best);
  }
}

TEST(Main2, RhsNonIncreasingInValuation) {
  for (Int sign : {Int{0}, Int{-16}, Int{-48}})
    for (int size = 0; size <= 8; size += 2)
      for (int d = 0; d < 6; ++d)
        for (Int l = 1; l <= 8; ++l) EXPECT_GE(main2_rhs(sign, l, size, d), main2_rhs(sign, l, size, d + 1));
}

TEST(Main2, PositiveSignatureWarns) {
  BoundReport r = main2_bound(shape(16, 20));
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Main2, JsonIsSortedAndComplete) {
  BoundReport r = main2_bound(mtorus(1));
  auto j = nlohmann::json::parse(render_json(r));
  EXPECT_EQ(j["best_rhs"], r.best_rhs);
  EXPECT_EQ(j["entries"].size(), r.entries.size());
  std::string prev;
  for (const auto& [k, v] : j.items()) {
    EXPECT_LT(prev, k);
    prev = k;
  }
}

TEST(Main1, MinimalL) {
  ActiveFamily none;
  EXPECT_EQ(main1_min_l(1, none, 0), 3);
  EXPECT_EQ(main1_min_l(0, none, 0), 1);
  EXPECT_EQ(main1_min_l(2, none, 0), 6);
  EXPECT_THROW(main1_min_l(0, ActiveFamily::parse("1,2"), 0b101), std::domain_error);
  EXPECT_THROW(main1_min_l(0, none, 0b1), std::domain_error);
}

TEST(Main1, MinimalLIsBoundary) {
  ActiveFamily f = mtorus_family(2);
  for (Int k = 0; k <= 6; ++k) {
    for (Mask S : {Mask{0}, Mask{0xf}, Mask{0xff}}) {
      Int l = main1_min_l(k, f, S);
      int d = d_of(expand_family(f).coeff(S));
      EXPECT_GE(l, main1_rhs(k, l, popcount(S), d));
      if (l > 1) EXPECT_LT(l - 1, main1_rhs(k, l - 1, popcount(S), d));
    }
  }
}

TEST(ConnectedSumBound, Examples) {
  for (Int b2plus = 4; b2plus <= 12; ++b2plus) {
    EXPECT_EQ(connected_sum_bound(1, -16, b2plus), 5 + epsilon(2, b2plus - 3) + 2);
    EXPECT_EQ(connected_sum_bound(2, 0, b2plus), 10 + epsilon(2, b2plus - 6));
    EXPECT_EQ(connected_sum_bound(0, -16, b2plus), empty_set_rhs(-16, b2plus));
  }
}
