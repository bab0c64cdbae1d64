#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hdg/coalition.hpp"
#include "hdg/errors.hpp"
#include "hdg/game.hpp"
#include "hdg/partition_enum.hpp"
#include "hdg/preferences.hpp"
#include "hdg/solvers.hpp"

namespace hdg {

// Anonymous hedonic game: each agent strictly ranks the possible coalition
// sizes 1..n and cares about nothing else.
class AnonymousGame {
 public:
  AnonymousGame(int n, std::vector<std::vector<int>> orders) : n_(n), orders_(std::move(orders)) {
    if (n < 1) throw ValidationError("a game needs at least one agent");
    if (static_cast<int>(orders_.size()) != n) {
      throw ValidationError("expected " + std::to_string(n) + " size orders, got " +
                            std::to_string(orders_.size()));
    }
    rankBySize_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int agent = 0; agent < n; ++agent) {
      const auto& order = orders_[static_cast<std::size_t>(agent)];
      const std::string who = "agent " + std::to_string(agent) + ": ";
      for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const int size = order[rank];
        if (size < 1 || size > n) {
          throw ValidationError(who + "size " + std::to_string(size) + " out of range");
        }
        auto& slot = rankBySize_[static_cast<std::size_t>(agent)][static_cast<std::size_t>(size - 1)];
        if (slot != -1) throw ValidationError(who + "duplicate size " + std::to_string(size));
        slot = static_cast<int>(rank);
      }
      if (static_cast<int>(order.size()) != n) {
        for (int size = 1; size <= n; ++size) {
          if (rankBySize_[static_cast<std::size_t>(agent)][static_cast<std::size_t>(size - 1)] == -1) {
            throw ValidationError(who + "order is missing size " + std::to_string(size));
          }
        }
      }
    }
  }

  int n() const { return n_; }
  const std::vector<std::vector<int>>& orders() const { return orders_; }

  // rank 0 is the most preferred size
  int rankOfSize(int agent, int size) const {
    if (agent < 0 || agent >= n_ || size < 1 || size > n_) {
      throw ValidationError("agent or size out of range");
    }
    return rankBySize_[static_cast<std::size_t>(agent)][static_cast<std::size_t>(size - 1)];
  }

  friend bool operator==(const AnonymousGame& a, const AnonymousGame& b) {
    return a.n_ == b.n_ && a.orders_ == b.orders_;
  }

 private:
  int n_;
  std::vector<std::vector<int>> orders_;
  std::vector<std::vector<int>> rankBySize_;
};

// Number of gadget reds the reduction introduces for an n-agent source game.
inline int reductionRedCount(int n) {
  int total = 0;
  for (int t = 1; t <= n; ++t) total += (n + t - 1) / t + 1;
  return total;
}

// Embeds an anonymous game into a diversity game whose core is nonempty iff
// the source core is. The n source agents become blues; a source coalition of
// size s is mimicked by those s blues plus one gadget red, a block with red
// ratio 1/(s+1). Accordingly blue i ranks the ratios 1/(s+1) in its source
// size order, then 0 (staying alone), then everything else descending; a
// gadget red for size t ranks 1/(t+1) first, then 1, then the rest
// descending, leaving it individually rational only at those two. Each size t
// gets a group of ceil(n/t)+1 interchangeable gadget reds, more anchors than
// size-t blocks can ever exist, so every deviating coalition the equivalence
// argument needs finds a free red.
inline DiversityGame reduceToDiversity(const AnonymousGame& source) {
  const int n = source.n();
  const int redCount = reductionRedCount(n);
  const int total = redCount + n;
  if (total > kMaxAgents) {
    throw ResourceError("reduction of " + std::to_string(n) + " agents needs " +
                        std::to_string(total) + " agents, above the model cap of " +
                        std::to_string(kMaxAgents));
  }
  const ThetaSet theta(redCount, n);
  std::vector<PreferenceOrder> prefs;
  prefs.reserve(static_cast<std::size_t>(total));
  for (int t = 1; t <= n; ++t) {
    const int groupSize = (n + t - 1) / t + 1;
    const PreferenceOrder order =
        completeDescending({Ratio(1, t + 1), Ratio::one()}, theta);
    for (int i = 0; i < groupSize; ++i) prefs.push_back(order);
  }
  for (int agent = 0; agent < n; ++agent) {
    std::vector<Ratio> prefix;
    prefix.reserve(static_cast<std::size_t>(n) + 1);
    for (const int size : source.orders()[static_cast<std::size_t>(agent)]) {
      prefix.emplace_back(1, size + 1);
    }
    prefix.push_back(Ratio::zero());
    prefs.push_back(completeDescending(std::move(prefix), theta));
  }
  return DiversityGame(redCount, n, std::move(prefs));
}

// Every core stable partition of an anonymous game, in restricted-growth-
// string order. A partition is blocked iff some size s has at least s agents
// strictly preferring s to their current block size.
inline std::vector<Partition> anonCoreBruteForce(const AnonymousGame& source,
                                                 int cap = kDefaultAnonymousCap) {
  const int n = source.n();
  if (n > cap) {
    throw ResourceError("exhaustive enumeration over " + std::to_string(n) +
                        " agents exceeds the cap of " + std::to_string(cap) +
                        "; raise the cap to proceed");
  }
  std::vector<Partition> out;
  forEachRgs(n, [&](const std::uint8_t* rgs, int blockCount) {
    std::vector<int> blockSize(static_cast<std::size_t>(blockCount), 0);
    for (int id = 0; id < n; ++id) ++blockSize[rgs[id]];
    bool blocked = false;
    for (int s = 1; s <= n && !blocked; ++s) {
      int movers = 0;
      for (int id = 0; id < n && movers < s; ++id) {
        if (source.rankOfSize(id, s) < source.rankOfSize(id, blockSize[rgs[id]])) ++movers;
      }
      blocked = movers >= s;
    }
    if (!blocked) out.push_back(partitionFromRgs(rgs, n));
    return true;
  });
  return out;
}

struct ReductionReport {
  bool sourceCoreNonEmpty = false;
  bool targetCoreNonEmpty = false;
  bool agree = false;

  friend bool operator==(const ReductionReport&, const ReductionReport&) = default;
};

// Runs both exhaustive core checks and reports whether reduction preserved
// core emptiness. The target check stops at the first stable partition.
inline ReductionReport checkReductionEquivalence(const AnonymousGame& source, int jobs = 1,
                                                 int cap = kDefaultBruteForceCap) {
  const DiversityGame reduced = reduceToDiversity(source);
  if (reduced.n() > cap) {
    throw ResourceError("reduction of " + std::to_string(source.n()) + " agents yields " +
                        std::to_string(reduced.n()) + " agents, above the enumeration cap of " +
                        std::to_string(cap) + "; raise the cap to proceed");
  }
  ReductionReport report;
  report.sourceCoreNonEmpty = !anonCoreBruteForce(source).empty();
  report.targetCoreNonEmpty = !coreBruteForce(reduced, false, jobs, cap).empty();
  report.agree = report.sourceCoreNonEmpty == report.targetCoreNonEmpty;
  return report;
}

}  // namespace hdg
