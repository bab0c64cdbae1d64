#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "hdg/hdg.hpp"
#include "testutil.hpp"

namespace {

using hdg::Coalition;
using hdg::DiversityGame;
using hdg::Partition;
using hdg::PreferenceOrder;
using hdg::Ratio;
using hdg::ThetaSet;

PreferenceOrder orderOf(std::vector<const char*> texts) {
  PreferenceOrder order;
  order.ranking.reserve(texts.size());
  for (const char* text : texts) order.ranking.push_back(Ratio::parse(text));
  return order;
}

std::vector<Ratio> ratios(std::vector<const char*> texts) {
  return orderOf(std::move(texts)).ranking;
}

TEST(SinglePeaked, AcceptsContiguousPrefixOrders) {
  const ThetaSet theta(2, 2);
  const auto peaked = hdg::verifySinglePeaked(
      orderOf({"1/2", "2/3", "1/3", "1/1", "0/1"}), theta);
  EXPECT_TRUE(peaked.isSinglePeaked);
  EXPECT_EQ(peaked.topRatio, Ratio(1, 2));

  const auto descending = hdg::verifySinglePeaked(
      orderOf({"1/1", "2/3", "1/2", "1/3", "0/1"}), theta);
  EXPECT_TRUE(descending.isSinglePeaked);
  EXPECT_EQ(descending.topRatio, Ratio::one());
}

TEST(SinglePeaked, RejectsValleyOrders) {
  const ThetaSet theta(2, 2);
  // 1/2 then 1/1 skips 2/3: both neighbors of the top are bypassed.
  const auto report = hdg::verifySinglePeaked(
      orderOf({"1/2", "1/1", "2/3", "1/3", "0/1"}), theta);
  EXPECT_FALSE(report.isSinglePeaked);
  EXPECT_FALSE(report.topRatio.has_value());
}

TEST(SinglePeaked, RejectsNonPermutations) {
  const ThetaSet theta(2, 2);
  EXPECT_THROW(hdg::verifySinglePeaked(orderOf({"1/2", "1/2", "2/3", "1/3", "0/1"}), theta),
               hdg::ValidationError);
  EXPECT_THROW(hdg::verifySinglePeaked(orderOf({"1/2", "2/3", "1/3", "0/1"}), theta),
               hdg::ValidationError);
  EXPECT_THROW(hdg::verifySinglePeaked(orderOf({"1/2", "2/3", "1/3", "0/1", "1/7"}), theta),
               hdg::ValidationError);
}

TEST(SinglePeaked, MatchesOracleOnRandomOrders) {
  std::mt19937_64 rng(20260816);
  int positives = 0;
  for (int round = 0; round < 400; ++round) {
    const int red = 1 + static_cast<int>(rng() % 4);
    const int blue = 1 + static_cast<int>(rng() % 4);
    const DiversityGame game = testutil::randomGame(red, blue, rng);
    for (int agent = 0; agent < game.n(); ++agent) {
      const auto got = hdg::verifySinglePeaked(game.order(agent), game.theta());
      EXPECT_EQ(got.isSinglePeaked, testutil::oracleSinglePeaked(game.order(agent), game.theta()));
      positives += got.isSinglePeaked ? 1 : 0;
    }
  }
  // Library-built peaked orders keep the positive side of the comparison busy.
  for (int round = 0; round < 60; ++round) {
    const int red = 1 + static_cast<int>(rng() % 5);
    const int blue = 1 + static_cast<int>(rng() % 5);
    const DiversityGame game = hdg::randomSinglePeaked(red, blue, rng());
    for (int agent = 0; agent < game.n(); ++agent) {
      EXPECT_TRUE(testutil::oracleSinglePeaked(game.order(agent), game.theta()));
      ++positives;
    }
  }
  EXPECT_GT(positives, 100);
}

TEST(SinglePeaked, FixedNineAgentInstanceIsSinglePeakedThroughout) {
  const DiversityGame game = hdg::makeExample3();
  const std::vector<Ratio> expectedTops =
      ratios({"6/7", "6/7", "6/7", "6/7", "5/6", "3/4", "3/4", "6/7", "3/4"});
  for (int agent = 0; agent < game.n(); ++agent) {
    const auto report = hdg::verifySinglePeaked(game.order(agent), game.theta());
    EXPECT_TRUE(report.isSinglePeaked) << "agent " << agent;
    EXPECT_EQ(report.topRatio, expectedTops[static_cast<std::size_t>(agent)]) << "agent " << agent;
  }
}

TEST(SinglePeaked, PeakAtLeastHalfSplitsByTopRatio) {
  const DiversityGame homophilic = hdg::makeHomophilic(2, 2);
  EXPECT_TRUE(hdg::peakAtLeastHalf(0, homophilic));
  EXPECT_TRUE(hdg::peakAtLeastHalf(1, homophilic));
  EXPECT_FALSE(hdg::peakAtLeastHalf(2, homophilic));
  EXPECT_FALSE(hdg::peakAtLeastHalf(3, homophilic));

  const DiversityGame fixed = hdg::makeExample3();
  for (int agent = 0; agent < fixed.n(); ++agent) EXPECT_TRUE(hdg::peakAtLeastHalf(agent, fixed));
}

TEST(VirtualPeak, PicksFavoriteOneBlueRatio) {
  const DiversityGame fixed = hdg::makeExample3();
  EXPECT_EQ(hdg::virtualPeak(0, fixed), Ratio(6, 7));
  EXPECT_EQ(hdg::virtualPeak(4, fixed), Ratio(5, 6));
  EXPECT_EQ(hdg::virtualPeak(7, fixed), Ratio(6, 7));
  EXPECT_EQ(hdg::virtualPeak(8, fixed), Ratio(3, 4));

  const DiversityGame homophilic = hdg::makeHomophilic(2, 2);
  EXPECT_EQ(hdg::virtualPeak(0, homophilic), Ratio(2, 3));
  EXPECT_EQ(hdg::virtualPeak(2, homophilic), Ratio::zero());
}

TEST(VirtualPeak, MatchesLinearScanOnRandomGames) {
  std::mt19937_64 rng(77001);
  for (int round = 0; round < 200; ++round) {
    const int red = 1 + static_cast<int>(rng() % 5);
    const int blue = 1 + static_cast<int>(rng() % 5);
    const DiversityGame game = testutil::randomGame(red, blue, rng);
    for (int agent = 0; agent < game.n(); ++agent) {
      const Ratio got = hdg::virtualPeak(agent, game);
      // Weakly best among all m/(m+1), strictly best among those it differs from.
      for (int m = 0; m <= red; ++m) {
        const Ratio candidate(m, m + 1);
        if (candidate == got) continue;
        EXPECT_TRUE(hdg::prefersStrictly(agent, got, candidate, game));
      }
    }
  }
}

TEST(VirtualPeak, UndefinedWithoutBlueAgents) {
  const ThetaSet theta(2, 0);
  ASSERT_EQ(theta.size(), 1);
  std::vector<PreferenceOrder> prefs(2, PreferenceOrder{{Ratio::one()}});
  const DiversityGame game(2, 0, std::move(prefs));
  EXPECT_THROW(hdg::virtualPeak(0, game), hdg::ValidationError);
}

TEST(Mirror, BlueMirrorComplementsEveryEntry) {
  const PreferenceOrder order = orderOf({"1/2", "2/3", "1/3", "1/1", "0/1"});
  const PreferenceOrder mirrored = hdg::blueMirror(order);
  EXPECT_EQ(mirrored.ranking, ratios({"1/2", "1/3", "2/3", "0/1", "1/1"}));
  EXPECT_EQ(hdg::blueMirror(mirrored), order);
}

TEST(Mirror, MirrorGameSwapsColorsAndOrders) {
  const auto mirrored = hdg::mirrorGame(hdg::makeHomophilic(2, 3));
  // Swapping colors in a homophilic profile yields the homophilic profile of
  // the swapped population.
  EXPECT_EQ(mirrored.game, hdg::makeHomophilic(3, 2));
  EXPECT_EQ(mirrored.origRedCount, 2);
  EXPECT_EQ(mirrored.origBlueCount, 3);
}

TEST(Mirror, IdMappingRoundTrips) {
  const DiversityGame game = hdg::makeExample3();
  const auto mirrored = hdg::mirrorGame(game);
  for (int id = 0; id < game.n(); ++id) {
    const int image = mirrored.toMirrored(id);
    EXPECT_EQ(mirrored.toOriginal(image), id);
    // Reds map to mirrored blues and vice versa.
    EXPECT_NE(game.isRed(id), mirrored.game.isRed(image));
  }
  const Coalition block = Coalition::fromIds({0, 3, 7});
  EXPECT_EQ(mirrored.toOriginal(mirrored.toMirrored(block)), block);
  EXPECT_EQ(mirrored.toMirrored(block), Coalition::fromIds({2, 5, 0}));
}

TEST(Mirror, RedRatiosComplementAcrossTheMirror) {
  std::mt19937_64 rng(5150);
  const DiversityGame game = hdg::makeExample3();
  const auto mirrored = hdg::mirrorGame(game);
  for (int round = 0; round < 200; ++round) {
    const std::uint64_t bits = rng() & ((1ull << game.n()) - 1);
    if (bits == 0) continue;
    const Coalition s = Coalition::fromBits(bits);
    EXPECT_EQ(hdg::redRatio(s, game).complement(),
              hdg::redRatio(mirrored.toMirrored(s), mirrored.game));
  }
}

TEST(Mirror, PartitionMappingPreservesBlocks) {
  const DiversityGame game = hdg::makeHomophilic(2, 2);
  const auto mirrored = hdg::mirrorGame(game);
  const Partition mirroredPi(
      {Coalition::fromIds({0, 2}), Coalition::fromIds({1, 3})}, 4);
  const Partition back = mirrored.toOriginal(mirroredPi);
  // Mirrored ids 0,1 are the original blues 2,3.
  EXPECT_EQ(back, Partition({Coalition::fromIds({2, 0}), Coalition::fromIds({3, 1})}, 4));
}

TEST(Orders, CompleteDescendingAppendsUnusedRatios) {
  const ThetaSet theta(2, 2);
  const auto completed = hdg::completeDescending({Ratio(1, 2), Ratio::one()}, theta);
  EXPECT_EQ(completed.ranking, ratios({"1/2", "1/1", "2/3", "1/3", "0/1"}));

  const auto pure = hdg::completeDescending({}, theta);
  EXPECT_EQ(pure.ranking, ratios({"1/1", "2/3", "1/2", "1/3", "0/1"}));

  EXPECT_THROW(hdg::completeDescending({Ratio(1, 2), Ratio(1, 2)}, theta), hdg::ValidationError);
  EXPECT_THROW(hdg::completeDescending({Ratio(1, 7)}, theta), hdg::ValidationError);
}

TEST(Orders, ClosestRatioOrderExamples) {
  EXPECT_EQ(hdg::closestRatioOrder(Ratio(1, 2), ThetaSet(1, 1)).ranking,
            ratios({"1/2", "0/1", "1/1"}));
  EXPECT_EQ(hdg::closestRatioOrder(Ratio::one(), ThetaSet(2, 2)).ranking,
            ratios({"1/1", "2/3", "1/2", "1/3", "0/1"}));
  // 1/3 and 1/1 sit at equal distance from 2/3; the tie goes low.
  EXPECT_EQ(hdg::closestRatioOrder(Ratio(2, 3), ThetaSet(2, 2)).ranking,
            ratios({"2/3", "1/2", "1/3", "1/1", "0/1"}));
  // The peak itself need not be feasible.
  EXPECT_EQ(hdg::closestRatioOrder(Ratio(5, 8), ThetaSet(2, 2)).ranking,
            ratios({"2/3", "1/2", "1/3", "1/1", "0/1"}));
}

TEST(Orders, ClosestRatioOrderIsAlwaysSinglePeaked) {
  for (int red = 1; red <= 5; ++red) {
    for (int blue = 1; blue <= 5; ++blue) {
      const ThetaSet theta(red, blue);
      std::vector<Ratio> peaks = theta.ratios();
      for (int k = 0; k <= 97; k += 13) peaks.emplace_back(k, 97);
      for (const Ratio& peak : peaks) {
        const auto order = hdg::closestRatioOrder(peak, theta);
        EXPECT_TRUE(hdg::verifySinglePeaked(order, theta).isSinglePeaked)
            << "peak " << peak.str() << " over (" << red << "," << blue << ")";
      }
    }
  }
}

TEST(Profiles, HomophilicRanksOwnColorFirst) {
  const DiversityGame game = hdg::makeHomophilic(3, 2);
  EXPECT_EQ(game.order(0).ranking.front(), Ratio::one());
  EXPECT_EQ(game.order(0).ranking.back(), Ratio::zero());
  EXPECT_EQ(game.order(3).ranking.front(), Ratio::zero());
  EXPECT_EQ(game.order(3).ranking.back(), Ratio::one());
  for (int agent = 0; agent < game.n(); ++agent) {
    EXPECT_TRUE(hdg::verifySinglePeaked(game.order(agent), game.theta()).isSinglePeaked);
  }
  EXPECT_THROW(hdg::makeHomophilic(0, 2), hdg::ValidationError);
}

TEST(Profiles, BakersMillersRanksOppositeColorFirst) {
  const DiversityGame game = hdg::makeBakersMillers(2, 2);
  EXPECT_EQ(game.order(0).ranking, ratios({"0/1", "1/3", "1/2", "2/3", "1/1"}));
  EXPECT_EQ(game.order(2).ranking, ratios({"1/1", "2/3", "1/2", "1/3", "0/1"}));
  EXPECT_THROW(hdg::makeBakersMillers(2, 0), hdg::ValidationError);
}

TEST(Rng, SplitMix64MatchesReferenceVectors) {
  hdg::SplitMix64 zero(0);
  EXPECT_EQ(zero.next(), 0xe220a8397b1dcdafull);
  EXPECT_EQ(zero.next(), 0x6e789e6aa1b965f4ull);
  EXPECT_EQ(zero.next(), 0x06c45d188009454full);

  hdg::SplitMix64 fortyTwo(42);
  EXPECT_EQ(fortyTwo.next(), 0xbdd732262feb6e95ull);
  EXPECT_EQ(fortyTwo.next(), 0x28efe333b266f103ull);
  EXPECT_EQ(fortyTwo.next(), 0x47526757130f9f52ull);

  hdg::SplitMix64 beef(0xDEADBEEFull);
  EXPECT_EQ(beef.next(), 0x4adfb90f68c9eb9bull);
  EXPECT_EQ(beef.next(), 0xde586a3141a10922ull);
}

TEST(Rng, RandomSinglePeakedIsDeterministicAndPeaked) {
  for (const std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
    const DiversityGame game = hdg::randomSinglePeaked(4, 3, seed);
    EXPECT_EQ(game, hdg::randomSinglePeaked(4, 3, seed));
    for (int agent = 0; agent < game.n(); ++agent) {
      EXPECT_TRUE(hdg::verifySinglePeaked(game.order(agent), game.theta()).isSinglePeaked);
    }
  }
  EXPECT_NE(hdg::randomSinglePeaked(4, 3, 1), hdg::randomSinglePeaked(4, 3, 2));
}

TEST(Rng, RandomSinglePeakedFollowsDocumentedDrawProtocol) {
  // Replays the documented protocol: one stream, agent id order, a peak index
  // draw then one coin per step while both interval ends are open.
  for (const std::uint64_t seed : {0ull, 42ull, 9999ull}) {
    const int red = 3;
    const int blue = 4;
    const ThetaSet theta(red, blue);
    hdg::SplitMix64 rng(seed);
    std::vector<PreferenceOrder> expected;
    for (int agent = 0; agent < red + blue; ++agent) {
      const int peak = static_cast<int>(rng.next() % static_cast<std::uint64_t>(theta.size()));
      std::vector<Ratio> left;   // ratios below the current interval, nearest first
      std::vector<Ratio> right;  // ratios above it, nearest first
      for (int idx = peak - 1; idx >= 0; --idx) left.push_back(theta.at(idx));
      for (int idx = peak + 1; idx < theta.size(); ++idx) right.push_back(theta.at(idx));
      std::vector<Ratio> ranking{theta.at(peak)};
      std::size_t li = 0;
      std::size_t ri = 0;
      while (li < left.size() || ri < right.size()) {
        bool takeLower;
        if (li == left.size()) {
          takeLower = false;
        } else if (ri == right.size()) {
          takeLower = true;
        } else {
          takeLower = (rng.next() & 1u) != 0;
        }
        ranking.push_back(takeLower ? left[li++] : right[ri++]);
      }
      expected.push_back(PreferenceOrder{std::move(ranking)});
    }
    const DiversityGame game = hdg::randomSinglePeaked(red, blue, seed);
    for (int agent = 0; agent < game.n(); ++agent) {
      EXPECT_EQ(game.order(agent), expected[static_cast<std::size_t>(agent)])
          << "seed " << seed << " agent " << agent;
    }
  }
}

}  // namespace
