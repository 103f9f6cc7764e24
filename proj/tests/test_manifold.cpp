#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <random>

#include "kodeg/manifold.hpp"

using namespace kodeg;

namespace {

bool mentions(const std::vector<std::string>& problems, const std::string& what) {
  return std::any_of(problems.begin(), problems.end(),
                     [&](const std::string& p) { return p.find(what) != std::string::npos; });
}

std::vector<std::string> problems_of(const std::string& text) {
  try {
    parse_manifold(text);
  } catch (const ValidationError& e) {
    return e.problems();
  }
  return {};
}

ManifoldData k3() {
  ManifoldData m;
  m.name = "K3";
  m.sign = -16;
  m.b2plus = 3;
  return m;
}

// Canonical form for comparing sums up to relabelling of the H^1 indices.
std::vector<std::pair<std::vector<int>, Int>> canonical_quads(const ManifoldData& m) {
  std::vector<std::pair<std::vector<int>, Int>> out;
  for (const auto& q : m.quad) {
    auto s = q.subset;
    std::sort(s.begin(), s.end());
    out.push_back({s, q.value});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Load, ShapeOfK3IsValid) {
  ManifoldData m = parse_manifold(R"({"name": "K3", "b1": 0, "sign": -16, "b2plus": 3})");
  EXPECT_EQ(m.b2minus(), 19);
  EXPECT_EQ(m.k(), 1);
}

TEST(Load, RejectsBadInvariants) {
  EXPECT_TRUE(mentions(problems_of(R"({"b1": 0, "sign": -8, "b2plus": 3})"), "sign: not divisible by 16"));
  EXPECT_TRUE(mentions(problems_of(R"({"b1": 0, "sign": -16, "b2plus": 0})"), "l > 0 required"));
  EXPECT_TRUE(mentions(problems_of(R"({"b1": 0, "sign": 16, "b2plus": 16})"), "b2minus"));
}

TEST(Load, ReportsEveryProblemWithFieldPath) {
  auto p = problems_of(R"({"b1": 4, "sign": -8, "b2plus": 0, "colour": 1,
      "quad": [{"subset": [1, 2, 3, 9], "value": 1}, {"subset": [1, 1, 2, 3], "value": 2},
               {"subset": [1, 2, 3], "value": 1}],
      "pair_parity": [{"subset": [1, 2], "bit": 2}]})");
  EXPECT_TRUE(mentions(p, "colour: unknown field"));
  EXPECT_TRUE(mentions(p, "sign: not divisible by 16"));
  EXPECT_TRUE(mentions(p, "b2plus: l > 0 required"));
  EXPECT_TRUE(mentions(p, "quad[0].subset: index 9 outside 1..4"));
  EXPECT_TRUE(mentions(p, "quad[1].subset: indices must be distinct"));
  EXPECT_TRUE(mentions(p, "quad[2].subset: expected 4 indices"));
  EXPECT_TRUE(mentions(p, "pair_parity[0].bit: must be 0 or 1"));
}

TEST(Load, DuplicateSubsetsAndMalformedInput) {
  auto p = problems_of(R"({"b1": 4, "sign": 0, "b2plus": 3,
      "quad": [{"subset": [1, 2, 3, 4], "value": 1}, {"subset": [4, 3, 2, 1], "value": 1}]})");
  EXPECT_TRUE(mentions(p, "quad[1].subset: duplicate subset"));
  EXPECT_THROW(parse_manifold("{"), ParseError);
  EXPECT_THROW(parse_manifold("[]"), ParseError);
  EXPECT_THROW(load("/nonexistent/file.json"), ParseError);
  EXPECT_TRUE(mentions(problems_of(R"({"sign": 0, "b2plus": 3})"), "b1: required integer"));
}

TEST(Load, JsonRoundTrip) {
  ManifoldData m = mtorus(2);
  m.pair_parity = std::vector<SubsetValue>{{{1, 5}, 1}};
  m.triple_parity = std::vector<SubsetValue>{};
  EXPECT_EQ(parse_manifold(to_json(m)), m);
  auto path = std::filesystem::temp_directory_path() / "kodeg_roundtrip.json";
  save(m, path.string());
  EXPECT_EQ(load(path.string()), m);
  std::filesystem::remove(path);
}

TEST(ToFamily, OddQuadsAndParityBits) {
  ManifoldData m = parse_manifold(R"({"b1": 5, "sign": 0, "b2plus": 3,
      "quad": [{"subset": [1, 2, 3, 4], "value": 3}, {"subset": [2, 3, 4, 5], "value": 2}],
      "pair_parity": [{"subset": [1, 5], "bit": 1}, {"subset": [2, 5], "bit": 0}],
      "triple_parity": []})");
  std::vector<std::string> warnings;
  ActiveFamily f = to_family(m, &warnings);
  EXPECT_TRUE(warnings.empty());
  ASSERT_EQ(f.sets.size(), 2u);
  EXPECT_EQ(f.sets[0], Mask{0b01111});
  EXPECT_EQ(f.sets[1], Mask{0b10001});
}

TEST(ToFamily, WarnsWhenParityAbsent) {
  std::vector<std::string> warnings;
  to_family(mtorus(1), &warnings);
  EXPECT_EQ(warnings.size(), 2u);
  EXPECT_TRUE(mentions(warnings, "pair_parity bits not given"));
}

TEST(ToFamily, TorusBuilderGivesDisjointQuadruples) {
  for (int m = 1; m <= 6; ++m) {
    ActiveFamily f = to_family(mtorus(m));
    ASSERT_EQ(static_cast<int>(f.sets.size()), m);
    Mask seen = 0;
    for (Mask T : f.sets) {
      EXPECT_EQ(popcount(T), 4);
      EXPECT_EQ(seen & T, 0u);
      seen |= T;
    }
  }
}

TEST(ConnectedSum, Examples) {
  ManifoldData trivial;
  trivial.name = "";
  EXPECT_NO_THROW(validate(trivial, ValidationMode::Summand));
  EXPECT_THROW(validate(trivial), ValidationError);
  ManifoldData x = connected_sum(k3(), trivial);
  EXPECT_EQ(x, k3());

  ManifoldData two = connected_sum(mtorus(1), mtorus(1));
  EXPECT_EQ(two.b1, 8);
  EXPECT_EQ(canonical_quads(two), canonical_quads(mtorus(2)));

  ManifoldData kt = connected_sum(k3(), mtorus(1));
  EXPECT_EQ(kt.b1, 4);
  EXPECT_EQ(kt.sign, -16);
  EXPECT_EQ(kt.b2plus, 6);
  EXPECT_EQ(to_family(kt).sets.size(), 1u);
}

TEST(ConnectedSum, AssociativeAndFamilyIsShiftedUnion) {
  std::mt19937_64 rng(51);
  auto random_piece = [&]() {
    ManifoldData m;
    m.b1 = std::uniform_int_distribution<int>(0, 6)(rng);
    m.sign = -16 * std::uniform_int_distribution<int>(0, 2)(rng);
    m.b2plus = std::uniform_int_distribution<int>(1, 5)(rng);
    std::uniform_int_distribution<int> idx(1, std::max(1, m.b1));
    for (int t = 0; t < 4 && m.b1 >= 4; ++t) {
      std::vector<int> s;
      while (s.size() < 4) {
        int i = idx(rng);
        if (std::find(s.begin(), s.end(), i) == s.end()) s.push_back(i);
      }
      std::vector<int> sorted = s;
      std::sort(sorted.begin(), sorted.end());
      bool dup = false;
      for (const auto& q : m.quad) {
        auto o = q.subset;
        std::sort(o.begin(), o.end());
        dup |= o == sorted;
      }
      if (!dup) m.quad.push_back({s, std::uniform_int_distribution<Int>(-3, 3)(rng)});
    }
    return m;
  };
  for (int t = 0; t < 50; ++t) {
    ManifoldData a = random_piece(), b = random_piece(), c = random_piece();
    ManifoldData left = connected_sum(connected_sum(a, b), c), right = connected_sum(a, connected_sum(b, c));
    EXPECT_EQ(canonical_quads(left), canonical_quads(right));
    EXPECT_EQ(left.b1, right.b1);
    EXPECT_EQ(left.sign, right.sign);

    ManifoldData ab = connected_sum(a, b), ba = connected_sum(b, a);
    EXPECT_EQ(ab.b1, ba.b1);
    EXPECT_EQ(ab.quad.size(), ba.quad.size());

    ActiveFamily fa = to_family(a), fb = to_family(b), fab = to_family(ab);
    std::vector<Mask> want = fa.sets;
    for (Mask T : fb.sets) want.push_back(T << a.b1);
    EXPECT_EQ(fab.sets, want);
  }
}

TEST(Chern, Summary) {
  EXPECT_EQ(chern_summary(1, {}).constant, 2);
  EXPECT_TRUE(chern_summary(1, {}).quartic.empty());
  ManifoldData t = mtorus(3);
  t.quad[1].value = -1;
  ChernSummary s = chern_summary(0, t.quad);
  EXPECT_EQ(s.quartic.size(), 3u);
  EXPECT_EQ(s.quartic[1].second, -1);
  std::vector<SubsetValue> eight = {{{1, 2, 3, 4, 5, 6, 7, 8}, 1}};
  EXPECT_THROW(chern_summary(0, eight), ValidationError);
  std::vector<SubsetValue> eight_zero = {{{1, 2, 3, 4, 5, 6, 7, 8}, 0}};
  EXPECT_NO_THROW(chern_summary(0, eight_zero));
}
