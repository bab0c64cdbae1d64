#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdg/coalition.hpp"
#include "hdg/errors.hpp"
#include "hdg/game.hpp"
#include "hdg/rational.hpp"
#include "hdg/theta.hpp"

namespace hdg {

struct PeakReport {
  bool isSinglePeaked = false;
  std::optional<Ratio> topRatio;  // set iff single-peaked; equals ranking[0]
};

namespace detail {

// Throws unless the ranking is a permutation of the feasible ratios.
inline void requirePermutation(const PreferenceOrder& order, const ThetaSet& theta) {
  std::vector<bool> seen(static_cast<std::size_t>(theta.size()), false);
  for (const Ratio& value : order.ranking) {
    const auto idx = theta.find(value);
    if (!idx) throw ValidationError("ratio " + value.str() + " is not feasible here");
    if (seen[static_cast<std::size_t>(*idx)]) {
      throw ValidationError("duplicate ratio " + value.str());
    }
    seen[static_cast<std::size_t>(*idx)] = true;
  }
  if (static_cast<int>(order.ranking.size()) != theta.size()) {
    for (int idx = 0; idx < theta.size(); ++idx) {
      if (!seen[static_cast<std::size_t>(idx)]) {
        throw ValidationError("order is missing ratio " + theta.at(idx).str());
      }
    }
  }
}

}  // namespace detail

// Single-peaked iff every ranking prefix is a contiguous run on the ascending
// ratio axis, i.e. each next element extends the run at one end. This is
// equivalent to the existence of a peak point p with preferences falling off
// monotonically on both sides of p.
inline PeakReport verifySinglePeaked(const PreferenceOrder& order, const ThetaSet& theta) {
  detail::requirePermutation(order, theta);
  int lo = theta.indexOf(order.ranking.front());
  int hi = lo;
  for (std::size_t rank = 1; rank < order.ranking.size(); ++rank) {
    const int idx = theta.indexOf(order.ranking[rank]);
    if (idx == lo - 1) {
      lo = idx;
    } else if (idx == hi + 1) {
      hi = idx;
    } else {
      return {};
    }
  }
  return {true, order.ranking.front()};
}

// For a single-peaked agent the observable peak is its top-ranked ratio.
inline bool peakAtLeastHalf(int agentId, const DiversityGame& game) {
  return game.order(agentId).ranking.front() >= Ratio::half();
}

// The agent's favorite among the one-blue block ratios m/(m+1). Defined only
// when the game has a blue agent, otherwise no such ratio is feasible.
inline Ratio virtualPeak(int agentId, const DiversityGame& game) {
  if (game.blueCount() == 0) {
    throw ValidationError("virtual peak is undefined without blue agents");
  }
  std::optional<Ratio> best;
  int bestRank = 0;
  for (int m = 0; m <= game.redCount(); ++m) {
    const Ratio candidate(m, m + 1);
    const int rank = game.rankOf(agentId, candidate);
    if (!best || rank < bestRank) {
      best = candidate;
      bestRank = rank;
    }
  }
  return *best;
}

// Rewrites a ranking of red ratios as the same ranking of blue ratios: each
// entry theta becomes 1 - theta. Applying it twice restores the original.
inline PreferenceOrder blueMirror(const PreferenceOrder& order) {
  PreferenceOrder out;
  out.ranking.reserve(order.ranking.size());
  for (const Ratio& value : order.ranking) out.ranking.push_back(value.complement());
  return out;
}

// Color-swapped view of a game. Mirrored reds are the original blues in id
// order and vice versa, with every order blue-mirrored, so red-side machinery
// can run on the blue side and results can be mapped back.
struct MirroredGame {
  DiversityGame game;
  int origRedCount;
  int origBlueCount;

  int toMirrored(int origId) const {
    return origId < origRedCount ? origBlueCount + origId : origId - origRedCount;
  }
  int toOriginal(int mirroredId) const {
    return mirroredId < origBlueCount ? origRedCount + mirroredId : mirroredId - origBlueCount;
  }

  Coalition toMirrored(const Coalition& s) const {
    Coalition out;
    forEachMember(s, [&](int id) { out = out.with(toMirrored(id)); });
    return out;
  }
  Coalition toOriginal(const Coalition& s) const {
    Coalition out;
    forEachMember(s, [&](int id) { out = out.with(toOriginal(id)); });
    return out;
  }

  Partition toOriginal(const Partition& pi) const {
    std::vector<Coalition> blocks;
    blocks.reserve(pi.blocks().size());
    for (const Coalition& block : pi.blocks()) blocks.push_back(toOriginal(block));
    return Partition(std::move(blocks), pi.n());
  }
};

inline MirroredGame mirrorGame(const DiversityGame& game) {
  const int n = game.n();
  const int reds = game.redCount();
  const int blues = game.blueCount();
  std::vector<PreferenceOrder> prefs(static_cast<std::size_t>(n));
  for (int id = 0; id < n; ++id) {
    const int mirroredId = id < reds ? blues + id : id - reds;
    prefs[static_cast<std::size_t>(mirroredId)] = blueMirror(game.order(id));
  }
  return MirroredGame{DiversityGame(blues, reds, std::move(prefs)), reds, blues};
}

// Appends every feasible ratio absent from the prefix, in descending value
// order. The prefix must already be duplicate-free and feasible.
inline PreferenceOrder completeDescending(std::vector<Ratio> prefix, const ThetaSet& theta) {
  std::vector<bool> used(static_cast<std::size_t>(theta.size()), false);
  for (const Ratio& value : prefix) {
    const int idx = theta.indexOf(value);
    if (used[static_cast<std::size_t>(idx)]) {
      throw ValidationError("duplicate ratio " + value.str() + " in prefix");
    }
    used[static_cast<std::size_t>(idx)] = true;
  }
  for (int idx = theta.size() - 1; idx >= 0; --idx) {
    if (!used[static_cast<std::size_t>(idx)]) prefix.push_back(theta.at(idx));
  }
  return PreferenceOrder{std::move(prefix)};
}

// Ranks the feasible ratios by increasing distance from a peak, ties toward
// the smaller ratio. The result is always single-peaked; its top is the
// feasible ratio closest to the peak.
inline PreferenceOrder closestRatioOrder(const Ratio& peak, const ThetaSet& theta) {
  std::vector<Ratio> ranking = theta.ratios();
  const auto distanceNumerator = [&](const Ratio& value) {
    const __int128 diff = static_cast<__int128>(value.num()) * peak.den() -
                          static_cast<__int128>(peak.num()) * value.den();
    return diff < 0 ? -diff : diff;
  };
  std::sort(ranking.begin(), ranking.end(), [&](const Ratio& a, const Ratio& b) {
    const __int128 da = distanceNumerator(a) * b.den();
    const __int128 db = distanceNumerator(b) * a.den();
    if (da != db) return da < db;
    return a < b;
  });
  return PreferenceOrder{std::move(ranking)};
}

// Homophilic profile: reds rank ratios descending (own color first), blues
// ascending. Both orders are single-peaked with peaks at the extremes.
inline DiversityGame makeHomophilic(int redCount, int blueCount) {
  if (redCount < 1 || blueCount < 1) {
    throw ValidationError("homophilic games need at least one agent of each color");
  }
  const ThetaSet theta(redCount, blueCount);
  std::vector<Ratio> ascending = theta.ratios();
  std::vector<Ratio> descending(ascending.rbegin(), ascending.rend());
  std::vector<PreferenceOrder> prefs;
  prefs.reserve(static_cast<std::size_t>(redCount + blueCount));
  for (int i = 0; i < redCount; ++i) prefs.push_back(PreferenceOrder{descending});
  for (int i = 0; i < blueCount; ++i) prefs.push_back(PreferenceOrder{ascending});
  return DiversityGame(redCount, blueCount, std::move(prefs));
}

// The opposite taste: everyone wants to be the minority. Reds rank ratios
// ascending, blues descending.
inline DiversityGame makeBakersMillers(int redCount, int blueCount) {
  if (redCount < 1 || blueCount < 1) {
    throw ValidationError("this profile needs at least one agent of each color");
  }
  const ThetaSet theta(redCount, blueCount);
  std::vector<Ratio> ascending = theta.ratios();
  std::vector<Ratio> descending(ascending.rbegin(), ascending.rend());
  std::vector<PreferenceOrder> prefs;
  prefs.reserve(static_cast<std::size_t>(redCount + blueCount));
  for (int i = 0; i < redCount; ++i) prefs.push_back(PreferenceOrder{ascending});
  for (int i = 0; i < blueCount; ++i) prefs.push_back(PreferenceOrder{descending});
  return DiversityGame(redCount, blueCount, std::move(prefs));
}

// Fixed 9-agent instance (7 reds, 2 blues) with single-peaked preferences and
// an empty core; the standard witness that single-peakedness alone does not
// rescue core existence. Each listed prefix is completed by appending the
// unlisted ratios in descending value order.
inline DiversityGame makeExample3() {
  const ThetaSet theta(7, 2);
  const auto fromPrefix = [&](std::vector<const char*> prefix) {
    std::vector<Ratio> parsed;
    parsed.reserve(prefix.size());
    for (const char* text : prefix) parsed.push_back(Ratio::parse(text));
    return completeDescending(std::move(parsed), theta);
  };
  const std::vector<const char*> lowRed = {"6/7", "5/6", "4/5", "7/9", "3/4", "7/8", "1/1", "5/7"};
  std::vector<PreferenceOrder> prefs;
  prefs.reserve(9);
  for (int i = 0; i < 4; ++i) prefs.push_back(fromPrefix(lowRed));
  prefs.push_back(fromPrefix({"5/6", "4/5", "7/9", "3/4", "6/7", "7/8", "1/1", "5/7"}));
  for (int i = 0; i < 2; ++i) {
    prefs.push_back(fromPrefix({"3/4", "7/9", "4/5", "5/6", "6/7", "7/8", "1/1", "5/7"}));
  }
  prefs.push_back(fromPrefix({"6/7", "5/6", "4/5", "7/9", "3/4", "7/8", "5/7"}));
  prefs.push_back(fromPrefix({"3/4", "7/9", "4/5", "5/6", "6/7", "7/8", "5/7"}));
  return DiversityGame(7, 2, std::move(prefs));
}

// SplitMix64: tiny, splittable, and fully specified here so that seeded
// generation is reproducible across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Seeded single-peaked profile. One SplitMix64 stream, consumed in agent id
// order: first a peak index draw (next() mod |theta|), then one bit per step
// while both sides of the grown interval remain open (bit set extends toward
// smaller ratios). Steps with only one open side consume no randomness.
inline DiversityGame randomSinglePeaked(int redCount, int blueCount, std::uint64_t seed) {
  const ThetaSet theta(redCount, blueCount);
  const int m = theta.size();
  SplitMix64 rng(seed);
  std::vector<PreferenceOrder> prefs;
  prefs.reserve(static_cast<std::size_t>(redCount + blueCount));
  for (int agent = 0; agent < redCount + blueCount; ++agent) {
    const int peak = static_cast<int>(rng.next() % static_cast<std::uint64_t>(m));
    int lo = peak;
    int hi = peak;
    std::vector<Ratio> ranking;
    ranking.reserve(static_cast<std::size_t>(m));
    ranking.push_back(theta.at(peak));
    while (lo > 0 || hi < m - 1) {
      bool takeLower;
      if (lo == 0) {
        takeLower = false;
      } else if (hi == m - 1) {
        takeLower = true;
      } else {
        takeLower = (rng.next() & 1u) != 0;
      }
      ranking.push_back(takeLower ? theta.at(--lo) : theta.at(++hi));
    }
    prefs.push_back(PreferenceOrder{std::move(ranking)});
  }
  return DiversityGame(redCount, blueCount, std::move(prefs));
}

}  // namespace hdg
