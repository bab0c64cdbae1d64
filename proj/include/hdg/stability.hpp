#pragma once

#include <array>
#include <bit>
#include <optional>
#include <vector>

#include "hdg/coalition.hpp"
#include "hdg/errors.hpp"
#include "hdg/game.hpp"
#include "hdg/rational.hpp"

namespace hdg {

enum class DeviationKind { NS, IS };

// A profitable unilateral move: agentId leaves fromBlock for toBlock, or for
// a fresh singleton when toBlock is empty. Block indices refer to the
// canonical partition the deviation was computed against.
struct Deviation {
  int agentId = -1;
  int fromBlock = -1;
  std::optional<int> toBlock;
  DeviationKind kind = DeviationKind::NS;

  friend bool operator==(const Deviation&, const Deviation&) = default;
};

struct BlockingWitness {
  Coalition coalition;
  Ratio ratio;

  friend bool operator==(const BlockingWitness&, const BlockingWitness&) = default;
};

namespace detail {

inline void requireSameGame(const DiversityGame& game, const Partition& pi) {
  if (pi.n() != game.n()) {
    throw ValidationError("partition covers " + std::to_string(pi.n()) + " agents, game has " +
                          std::to_string(game.n()));
  }
}

// Theta index of each agent's current block ratio, the only partition state
// the blocking scan needs.
inline void fillCurrentThetaIdx(const DiversityGame& game, const Partition& pi, int* out) {
  for (int b = 0; b < pi.blockCount(); ++b) {
    const Coalition& block = pi.block(b);
    const int idx = game.thetaIndexOf(block.size(), std::popcount(block.bits() & game.redMask()));
    forEachMember(block, [&](int id) { out[id] = idx; });
  }
}

struct BlockingShape {
  int size = 0;
  int reds = 0;
  int thetaIdx = -1;
};

// Scans candidate shapes (size ascending, then red count ascending) for the
// first (s, r) where at least r reds and s - r blues strictly prefer the shape
// ratio to their current one. A blocking coalition exists iff some shape hits,
// since any blocking coalition realizes its own shape.
inline std::optional<BlockingShape> firstBlockingPair(const DiversityGame& game, const int* currentIdx) {
  const int n = game.n();
  for (int s = 1; s <= n; ++s) {
    const int rLo = std::max(0, s - game.blueCount());
    const int rHi = std::min(s, game.redCount());
    for (int r = rLo; r <= rHi; ++r) {
      const int idx = game.thetaIndexOf(s, r);
      int reds = 0;
      for (int id = 0; id < game.redCount() && reds < r; ++id) {
        if (game.rankAt(id, idx) < game.rankAt(id, currentIdx[id])) ++reds;
      }
      if (reds < r) continue;
      const int bluesWanted = s - r;
      int blues = 0;
      for (int id = game.redCount(); id < n && blues < bluesWanted; ++id) {
        if (game.rankAt(id, idx) < game.rankAt(id, currentIdx[id])) ++blues;
      }
      if (blues < bluesWanted) continue;
      return BlockingShape{s, r, idx};
    }
  }
  return std::nullopt;
}

}  // namespace detail

// First blocking coalition in the deterministic shape scan, populated with
// the lowest-id qualifying reds and blues. Empty result means core stable.
inline std::optional<BlockingWitness> findBlockingCoalition(const DiversityGame& game,
                                                            const Partition& pi) {
  detail::requireSameGame(game, pi);
  std::array<int, kMaxAgents> currentIdx{};
  detail::fillCurrentThetaIdx(game, pi, currentIdx.data());
  const auto hit = detail::firstBlockingPair(game, currentIdx.data());
  if (!hit) return std::nullopt;
  Coalition witness;
  int reds = 0;
  for (int id = 0; id < game.redCount() && reds < hit->reds; ++id) {
    if (game.rankAt(id, hit->thetaIdx) < game.rankAt(id, currentIdx[static_cast<std::size_t>(id)])) {
      witness = witness.with(id);
      ++reds;
    }
  }
  const int bluesWanted = hit->size - hit->reds;
  int blues = 0;
  for (int id = game.redCount(); id < game.n() && blues < bluesWanted; ++id) {
    if (game.rankAt(id, hit->thetaIdx) < game.rankAt(id, currentIdx[static_cast<std::size_t>(id)])) {
      witness = witness.with(id);
      ++blues;
    }
  }
  return BlockingWitness{witness, game.theta().at(hit->thetaIdx)};
}

inline bool isCoreStable(const DiversityGame& game, const Partition& pi) {
  return !findBlockingCoalition(game, pi).has_value();
}

// Whether a member weakly welcomes an incomer into its block.
inline bool accepts(int agentId, const Coalition& block, int incomerId, const DiversityGame& game) {
  if (!block.contains(agentId)) throw ValidationError("accepting agent must belong to the block");
  if (block.contains(incomerId)) throw ValidationError("incomer already belongs to the block");
  const Ratio before = redRatio(block, game);
  const Ratio after = redRatio(block.with(incomerId), game);
  return prefersWeakly(agentId, after, before, game);
}

namespace detail {

inline bool allAccept(const Coalition& block, int incomerId, const DiversityGame& game) {
  const int beforeIdx = game.thetaIndexOf(block.size(), std::popcount(block.bits() & game.redMask()));
  const Coalition grown = block.with(incomerId);
  const int afterIdx = game.thetaIndexOf(grown.size(), std::popcount(grown.bits() & game.redMask()));
  bool ok = true;
  forEachMember(block, [&](int id) {
    if (game.rankAt(id, afterIdx) > game.rankAt(id, beforeIdx)) ok = false;
  });
  return ok;
}

// Visits deviations in a fixed order: agents ascending; per agent, target
// blocks ascending, then the leave-to-singleton move. sink returns false to
// stop the scan early.
template <class Sink>
void scanDeviations(const DiversityGame& game, const Partition& pi, DeviationKind kind, Sink&& sink) {
  requireSameGame(game, pi);
  for (int agent = 0; agent < game.n(); ++agent) {
    const int from = pi.blockIndexOf(agent);
    const Ratio current = redRatio(pi.block(from), game);
    for (int target = 0; target < pi.blockCount(); ++target) {
      if (target == from) continue;
      const Ratio moved = redRatio(pi.block(target).with(agent), game);
      if (!prefersStrictly(agent, moved, current, game)) continue;
      if (kind == DeviationKind::IS && !allAccept(pi.block(target), agent, game)) continue;
      if (!sink(Deviation{agent, from, target, kind})) return;
    }
    if (pi.block(from).size() > 1 && prefersStrictly(agent, singletonRatio(agent, game), current, game)) {
      // A fresh singleton has no members to object, so NS and IS coincide.
      if (!sink(Deviation{agent, from, std::nullopt, kind})) return;
    }
  }
}

}  // namespace detail

inline std::vector<Deviation> enumerateNSDeviations(const DiversityGame& game, const Partition& pi) {
  std::vector<Deviation> out;
  detail::scanDeviations(game, pi, DeviationKind::NS, [&](const Deviation& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

inline std::vector<Deviation> enumerateISDeviations(const DiversityGame& game, const Partition& pi) {
  std::vector<Deviation> out;
  detail::scanDeviations(game, pi, DeviationKind::IS, [&](const Deviation& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

// First deviation in scan order, or empty when the partition is stable for
// the given concept.
inline std::optional<Deviation> findDeviation(const DiversityGame& game, const Partition& pi,
                                              DeviationKind kind) {
  std::optional<Deviation> found;
  detail::scanDeviations(game, pi, kind, [&](const Deviation& d) {
    found = d;
    return false;
  });
  return found;
}

inline bool isNashStable(const DiversityGame& game, const Partition& pi) {
  bool stable = true;
  detail::scanDeviations(game, pi, DeviationKind::NS, [&](const Deviation&) {
    stable = false;
    return false;
  });
  return stable;
}

inline bool isIndividuallyStable(const DiversityGame& game, const Partition& pi) {
  bool stable = true;
  detail::scanDeviations(game, pi, DeviationKind::IS, [&](const Deviation&) {
    stable = false;
    return false;
  });
  return stable;
}

}  // namespace hdg
