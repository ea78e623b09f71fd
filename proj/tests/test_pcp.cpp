#include "tracegames/pcp.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

namespace tracegames {
namespace {

PcpInstance two_tiles() { return {"ab", {{"ab", "a"}, {"a", "ba"}}}; }

TEST(Pcp, CheckSolutionExamples) {
  PcpInstance inst = two_tiles();
  EXPECT_TRUE(check_solution(inst, {0, 1}));   // "aba" on both sides
  EXPECT_FALSE(check_solution(inst, {0}));
  PcpInstance swapped{"ab", {{"ab", "ba"}}};
  EXPECT_FALSE(check_solution(swapped, {0}));
  EXPECT_FALSE(check_solution(swapped, {0, 0, 0}));
  EXPECT_THROW(check_solution(inst, {}), std::invalid_argument);
  EXPECT_THROW(check_solution(inst, {5}), std::invalid_argument);
}

TEST(Pcp, BruteForceExamples) {
  EXPECT_EQ(brute_force(two_tiles(), 3), (IndexSeq{0, 1}));
  EXPECT_FALSE(brute_force({"ab", {{"ab", "ba"}}}, 6));
  EXPECT_EQ(brute_force({"a", {{"a", "a"}}}, 1), (IndexSeq{0}));
  EXPECT_THROW(brute_force(two_tiles(), 0), std::invalid_argument);
}

TEST(Pcp, BruteForceFindsShortestThenLex) {
  // Both [0,1] and [1,0] solve this symmetric instance; lexicographic order
  // picks [0,1].
  PcpInstance inst{"ab", {{"ab", "a"}, {"a", "ba"}}};
  EXPECT_EQ(brute_force(inst, 4), (IndexSeq{0, 1}));
}

TEST(Pcp, VerifySameLengthExamples) {
  EXPECT_TRUE(verify_same_length({{0, 0}, {1, 1}}, "ab", "ab"));
  EXPECT_FALSE(verify_same_length({{0, 0}, {1, 1}}, "ab", "ba"));  // letters
  EXPECT_FALSE(verify_same_length({{0, 0}, {1, 1}}, "ab", "abc"));  // prop 1
  EXPECT_THROW(verify_same_length({{5, 0}}, "ab", "ab"),
               std::invalid_argument);
}

TEST(Pcp, ExistsSameLengthExamples) {
  EXPECT_TRUE(exists_same_length("ab", "ab"));
  EXPECT_FALSE(exists_same_length("ab", "ba"));
  EXPECT_FALSE(exists_same_length("a", "aa"));
  EXPECT_THROW(exists_same_length("aaaaa", "aaaa"), std::invalid_argument);
}

TEST(Pcp, CanonicalSameLength) {
  EXPECT_EQ(canonical_same_length("ab", "ab"), (PosSet{{0, 0}, {1, 1}}));
  EXPECT_THROW(canonical_same_length("a", "ab"), std::invalid_argument);
  EXPECT_TRUE(verify_same_length(canonical_same_length("abc", "abc"), "abc",
                                 "abc"));
}

TEST(Pcp, VerifySameTileExamples) {
  PcpInstance single{"a", {{"a", "a"}}};
  EXPECT_TRUE(verify_same_tile({{0, 0}}, single, {0}, {0}));

  PcpInstance inst = two_tiles();
  PosSet a = canonical_same_tile(inst, {0, 1}, {0, 1});
  EXPECT_TRUE(verify_same_tile(a, inst, {0, 1}, {0, 1}));

  PosSet a_mixed = canonical_same_tile(inst, {0, 1}, {1, 0});
  EXPECT_FALSE(verify_same_tile(a_mixed, inst, {0, 1}, {1, 0}));  // prop 8
}

TEST(Pcp, CanonicalSameTileValue) {
  PcpInstance single{"a", {{"a", "a"}}};
  EXPECT_EQ(canonical_same_tile(single, {0}, {0}), (PosSet{{0, 0}}));

  // u = "ab"+"a", v = "a"+"ba": blocks (0,0,1) over u and (0,1,1) over v.
  PcpInstance inst = two_tiles();
  EXPECT_EQ(canonical_same_tile(inst, {0, 1}, {0, 1}),
            (PosSet{{0, 0}, {1, 0}, {2, 1}, {2, 2}}));
}

// Lemma part 1 at oracle scale: a SameLength subset exists iff u = v.
TEST(PcpProperty, SameLengthCharacterizesEquality) {
  std::mt19937 rng(555);
  std::uniform_int_distribution<std::size_t> len(1, 3);
  auto word = [&](std::size_t n) {
    std::string w;
    for (std::size_t i = 0; i < n; ++i) w += rng() % 2 ? 'a' : 'b';
    return w;
  };
  for (int round = 0; round < 120; ++round) {
    std::string u = word(len(rng));
    std::string v = rng() % 3 == 0 ? u : word(len(rng));
    ASSERT_LE(u.size() * v.size(), 16u);
    EXPECT_EQ(exists_same_length(u, v), u == v) << u << " vs " << v;
  }
}

// Lemma part 2 at oracle scale: a SameTile subset exists iff the two index
// sequences are equal.
TEST(PcpProperty, SameTileCharacterizesSequenceEquality) {
  std::mt19937 rng(556);
  std::vector<PcpInstance> instances{
      {"a", {{"a", "a"}}},
      {"ab", {{"ab", "a"}, {"a", "ba"}}},
      {"ab", {{"a", "ab"}, {"b", "b"}}},
  };
  int checked = 0;
  for (int round = 0; round < 300 && checked < 100; ++round) {
    const PcpInstance& inst = instances[rng() % instances.size()];
    std::uniform_int_distribution<std::size_t> len(1, 2);
    auto seq = [&](std::size_t n) {
      IndexSeq s;
      for (std::size_t i = 0; i < n; ++i) s.push_back(rng() % inst.tiles.size());
      return s;
    };
    IndexSeq top = seq(len(rng));
    IndexSeq bottom = rng() % 3 == 0 ? top : seq(len(rng));
    std::size_t cu = 0, cv = 0;
    for (std::size_t i : top) cu += inst.tiles[i].top.size();
    for (std::size_t i : bottom) cv += inst.tiles[i].bottom.size();
    if (cu * cv > 16) continue;
    ++checked;
    EXPECT_EQ(exists_same_tile(inst, top, bottom), top == bottom);
  }
  EXPECT_GE(checked, 100);
}

TEST(Pcp, ReductionColorUniverse) {
  PcpReduction red = to_coloring_constraint(two_tiles());
  // |Q_u| = |Q_v| = 3 letter positions x 4 flag pairs = 12.
  EXPECT_EQ(red.raw_color_count, 12u * 12u * 4u);
  EXPECT_EQ(red.constraint.color_count(), red.colors.size());
  EXPECT_LT(red.colors.size(), red.raw_color_count);
}

TEST(Pcp, ReductionSolvableInstance) {
  PcpInstance single{"a", {{"a", "a"}}};
  PcpReduction red = to_coloring_constraint(single);
  auto f = solve(red.constraint, 1, 1);
  ASSERT_TRUE(f);
  auto [top, bottom] = decode_coloring(single, *f);
  EXPECT_EQ(top, (IndexSeq{0}));
  EXPECT_EQ(bottom, (IndexSeq{0}));
}

TEST(Pcp, ReductionUnsolvableInstance) {
  PcpReduction red = to_coloring_constraint({"ab", {{"ab", "ba"}}});
  EXPECT_FALSE(solve(red.constraint, 4, 4));
}

TEST(Pcp, ReductionRoundTrip) {
  PcpInstance inst = two_tiles();
  PcpReduction red = to_coloring_constraint(inst);
  auto f = solve(red.constraint, 3, 3);
  ASSERT_TRUE(f);
  auto [top, bottom] = decode_coloring(inst, *f);
  EXPECT_EQ(top, (IndexSeq{0, 1}));
  EXPECT_EQ(bottom, top);
  EXPECT_TRUE(check_solution(inst, top));
}

TEST(Pcp, DecodeRejectsViolatingColoring) {
  PcpInstance single{"a", {{"a", "a"}}};
  PcpReduction red = to_coloring_constraint(single);
  // A 1x1 grid colored with a non-initial color cannot satisfy.
  std::optional<ColorId> bad;
  for (ColorId c = 0; c < red.constraint.color_count() && !bad; ++c)
    if (!red.constraint.initial_allowed(c)) bad = c;
  ASSERT_TRUE(bad);
  Coloring f{1, 1, {*bad}};
  EXPECT_THROW(decode_coloring(single, f), std::invalid_argument);
}

// Bounded PCP search and bounded reduction solving agree on the corpus, and
// decoding recovers genuine solutions.
TEST(PcpProperty, ReductionAgreesWithBruteForce) {
  for (const PcpInstance& inst : fixtures::pcp_corpus()) {
    std::size_t max_tile = 0;
    for (const auto& t : inst.tiles)
      max_tile = std::max({max_tile, t.top.size(), t.bottom.size()});
    std::size_t grid = 3 * max_tile;
    auto direct = brute_force(inst, 3);
    PcpReduction red = to_coloring_constraint(inst);
    auto f = solve(red.constraint, grid, grid);
    EXPECT_EQ(direct.has_value(), f.has_value());
    if (f) {
      auto [top, bottom] = decode_coloring(inst, *f);
      EXPECT_TRUE(check_solution(inst, top));
      EXPECT_EQ(top, bottom);
    }
  }
}

}  // namespace
}  // namespace tracegames
