#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hdg/coalition.hpp"
#include "hdg/errors.hpp"
#include "hdg/rational.hpp"
#include "hdg/theta.hpp"

namespace hdg {

enum class Color { Red, Blue };

// Strict linear order over the feasible ratios, most preferred first.
struct PreferenceOrder {
  std::vector<Ratio> ranking;

  friend bool operator==(const PreferenceOrder&, const PreferenceOrder&) = default;
};

// Immutable two-type hedonic game. Reds are agents 0..redCount-1, blues the
// remaining ids. Each agent ranks every feasible ratio; rank tables are
// precomputed so a preference lookup is one array read.
class DiversityGame {
 public:
  DiversityGame(int redCount, int blueCount, std::vector<PreferenceOrder> prefs)
      : redCount_(redCount),
        blueCount_(blueCount),
        theta_(redCount, blueCount),
        prefs_(std::move(prefs)) {
    const int total = n();
    if (static_cast<int>(prefs_.size()) != total) {
      throw ValidationError("expected " + std::to_string(total) + " preference orders, got " +
                            std::to_string(prefs_.size()));
    }
    const int m = theta_.size();
    rankByThetaIdx_.assign(static_cast<std::size_t>(total), std::vector<int>(static_cast<std::size_t>(m), -1));
    for (int agent = 0; agent < total; ++agent) {
      const auto& ranking = prefs_[static_cast<std::size_t>(agent)].ranking;
      auto& table = rankByThetaIdx_[static_cast<std::size_t>(agent)];
      const std::string who = "agent " + std::to_string(agent) + ": ";
      for (std::size_t rank = 0; rank < ranking.size(); ++rank) {
        const auto idx = theta_.find(ranking[rank]);
        if (!idx) throw ValidationError(who + "ratio " + ranking[rank].str() + " is not feasible here");
        if (table[static_cast<std::size_t>(*idx)] != -1) {
          throw ValidationError(who + "duplicate ratio " + ranking[rank].str());
        }
        table[static_cast<std::size_t>(*idx)] = static_cast<int>(rank);
      }
      if (static_cast<int>(ranking.size()) != m) {
        for (int idx = 0; idx < m; ++idx) {
          if (table[static_cast<std::size_t>(idx)] == -1) {
            throw ValidationError(who + "order is missing ratio " + theta_.at(idx).str());
          }
        }
      }
    }
    // Ratio lookup keyed by (coalition size, red members); -1 marks infeasible
    // combinations, which no valid coalition of this game can produce.
    thetaIdxBySizeReds_.assign(static_cast<std::size_t>(total + 1),
                               std::vector<int>(static_cast<std::size_t>(redCount_ + 1), -1));
    for (int s = 1; s <= total; ++s) {
      for (int r = 0; r <= redCount_ && r <= s; ++r) {
        if (s - r > blueCount_) continue;
        thetaIdxBySizeReds_[static_cast<std::size_t>(s)][static_cast<std::size_t>(r)] =
            theta_.indexOf(Ratio(r, s));
      }
    }
    redMask_ = redCount_ == 0 ? 0 : fullMask(redCount_);
  }

  int redCount() const { return redCount_; }
  int blueCount() const { return blueCount_; }
  int n() const { return redCount_ + blueCount_; }
  const ThetaSet& theta() const { return theta_; }

  std::uint64_t redMask() const { return redMask_; }
  std::uint64_t blueMask() const { return fullMask(n()) & ~redMask_; }
  Coalition allReds() const { return Coalition::fromBits(redMask_); }
  Coalition allBlues() const { return Coalition::fromBits(blueMask()); }

  bool isRed(int agentId) const {
    checkAgent(agentId);
    return agentId < redCount_;
  }
  Color color(int agentId) const { return isRed(agentId) ? Color::Red : Color::Blue; }

  const PreferenceOrder& order(int agentId) const {
    checkAgent(agentId);
    return prefs_[static_cast<std::size_t>(agentId)];
  }

  // rank 0 is the most preferred ratio
  int rankAt(int agentId, int thetaIdx) const {
    return rankByThetaIdx_[static_cast<std::size_t>(agentId)][static_cast<std::size_t>(thetaIdx)];
  }

  int rankOf(int agentId, const Ratio& value) const {
    checkAgent(agentId);
    return rankAt(agentId, theta_.indexOf(value));
  }

  // Theta index of the ratio a coalition with this shape realizes.
  int thetaIndexOf(int size, int redMembers) const {
    if (size < 1 || size > n() || redMembers < 0 || redMembers > redCount_ ||
        redMembers > size || size - redMembers > blueCount_) {
      throw ValidationError("infeasible coalition shape");
    }
    return thetaIdxBySizeReds_[static_cast<std::size_t>(size)][static_cast<std::size_t>(redMembers)];
  }

  friend bool operator==(const DiversityGame& a, const DiversityGame& b) {
    return a.redCount_ == b.redCount_ && a.blueCount_ == b.blueCount_ && a.prefs_ == b.prefs_;
  }

 private:
  void checkAgent(int agentId) const {
    if (agentId < 0 || agentId >= n()) {
      throw ValidationError("agent id " + std::to_string(agentId) + " out of range");
    }
  }

  int redCount_;
  int blueCount_;
  ThetaSet theta_;
  std::vector<PreferenceOrder> prefs_;
  std::vector<std::vector<int>> rankByThetaIdx_;
  std::vector<std::vector<int>> thetaIdxBySizeReds_;
  std::uint64_t redMask_ = 0;
};

// Fraction of red members in a nonempty coalition.
inline Ratio redRatio(const Coalition& s, const DiversityGame& game) {
  if (s.empty()) throw ValidationError("red ratio of an empty coalition is undefined");
  if ((s.bits() & ~fullMask(game.n())) != 0) {
    throw ValidationError("coalition contains agents outside the game");
  }
  const int reds = std::popcount(s.bits() & game.redMask());
  return Ratio(reds, s.size());
}

// Ratio an agent experiences alone: 1 for a red agent, 0 for a blue one.
inline Ratio singletonRatio(int agentId, const DiversityGame& game) {
  return game.isRed(agentId) ? Ratio::one() : Ratio::zero();
}

inline bool prefersStrictly(int agentId, const Ratio& a, const Ratio& b, const DiversityGame& game) {
  return game.rankOf(agentId, a) < game.rankOf(agentId, b);
}

inline bool prefersWeakly(int agentId, const Ratio& a, const Ratio& b, const DiversityGame& game) {
  return game.rankOf(agentId, a) <= game.rankOf(agentId, b);
}

// Every member weakly prefers the coalition's ratio to being alone.
inline bool isIndividuallyRational(const Coalition& s, const DiversityGame& game) {
  const Ratio value = redRatio(s, game);
  bool ok = true;
  forEachMember(s, [&](int id) {
    if (!prefersWeakly(id, value, singletonRatio(id, game), game)) ok = false;
  });
  return ok;
}

}  // namespace hdg
