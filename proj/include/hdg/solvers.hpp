#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdg/coalition.hpp"
#include "hdg/errors.hpp"
#include "hdg/game.hpp"
#include "hdg/partition_enum.hpp"
#include "hdg/preferences.hpp"
#include "hdg/rational.hpp"
#include "hdg/stability.hpp"

namespace hdg {

// One block built by the half-ratio pass. defaultMembers are the blue anchor
// plus the reds placed by the growth step that never relocated; reds arriving
// later (relocation or admission) are not defaults. preAdmissionRatio is the
// block's ratio when the main loop finished, before leftover reds were
// admitted.
struct HalfBlock {
  Coalition members;
  Coalition defaultMembers;
  Ratio preAdmissionRatio;

  friend bool operator==(const HalfBlock&, const HalfBlock&) = default;
};

// Output of the half-ratio pass over a subset of the agents. blocks are in
// creation order and each contains exactly one blue. singles holds reds that
// end as singleton blocks; leftovers were never placed.
struct HalfResult {
  std::vector<HalfBlock> blocks;
  Coalition singles;
  Coalition leftoverReds;
  Coalition leftoverBlues;

  friend bool operator==(const HalfResult&, const HalfResult&) = default;
};

namespace detail {

inline void requireSinglePeaked(int agentId, const DiversityGame& game) {
  if (!verifySinglePeaked(game.order(agentId), game.theta()).isSinglePeaked) {
    throw ValidationError("agent " + std::to_string(agentId) + ": order is not single-peaked");
  }
}

}  // namespace detail

// Builds blocks with ratio >= 1/2 around one blue anchor each, for the agents
// whose peaks lie at or above 1/2. Anchors are taken in descending virtual
// peak order; each block greedily absorbs reds (same order) while the grown
// ratio stays within both the red's and the anchor's virtual peak, then lets
// its lowest-id red relocate to an earlier block or the red singleton pool
// when that move is strictly better and unanimously accepted. Once anchors or
// reds run out, remaining filtered reds are admitted wherever all members
// agree and the red strictly prefers the result to 1/2.
inline HalfResult half(const Coalition& redIds, const Coalition& blueIds, const DiversityGame& game) {
  if (!redIds.isSubsetOf(game.allReds())) {
    throw ValidationError("redIds must be red agents of the game");
  }
  if (!blueIds.isSubsetOf(game.allBlues())) {
    throw ValidationError("blueIds must be blue agents of the game");
  }
  forEachMember(redIds | blueIds, [&](int id) { detail::requireSinglePeaked(id, game); });

  HalfResult out;
  out.leftoverReds = redIds;
  out.leftoverBlues = blueIds;
  // Without both colors no ratio of at least 1/2 below 1 exists to build on.
  if (game.redCount() == 0 || game.blueCount() == 0) return out;

  std::array<Ratio, kMaxAgents> q{};
  std::vector<int> reds;
  std::vector<int> blues;
  forEachMember(redIds, [&](int id) {
    if (peakAtLeastHalf(id, game)) {
      reds.push_back(id);
      q[static_cast<std::size_t>(id)] = virtualPeak(id, game);
    }
  });
  forEachMember(blueIds, [&](int id) {
    if (peakAtLeastHalf(id, game)) {
      blues.push_back(id);
      q[static_cast<std::size_t>(id)] = virtualPeak(id, game);
    }
  });
  const auto byPeakDesc = [&](int a, int b) {
    const Ratio& qa = q[static_cast<std::size_t>(a)];
    const Ratio& qb = q[static_cast<std::size_t>(b)];
    if (qa != qb) return qa > qb;
    return a < b;
  };
  std::sort(reds.begin(), reds.end(), byPeakDesc);
  std::sort(blues.begin(), blues.end(), byPeakDesc);

  struct Block {
    Coalition members;
    Coalition defaults;
    int redCount = 0;
  };
  std::vector<Block> blocks;
  Coalition singles;

  // Lowest-id red of the block with a strictly better, unanimously accepted
  // move to an earlier block or the singleton pool; at most one relocation.
  const auto relocateOne = [&](Block& cur) {
    const Ratio curRatio = redRatio(cur.members, game);
    bool moved = false;
    forEachMember(cur.members & game.allReds(), [&](int rid) {
      if (moved) return;
      int bestTarget = -2;  // -1 encodes the singleton pool
      int bestRank = 0;
      if (prefersStrictly(rid, Ratio::one(), curRatio, game)) {
        bestTarget = -1;
        bestRank = game.rankOf(rid, Ratio::one());
      }
      for (std::size_t t = 0; t < blocks.size(); ++t) {
        const Coalition grown = blocks[t].members.with(rid);
        const Ratio value = redRatio(grown, game);
        if (!prefersStrictly(rid, value, curRatio, game)) continue;
        if (!detail::allAccept(blocks[t].members, rid, game)) continue;
        const int rank = game.rankOf(rid, value);
        if (bestTarget == -2 || rank < bestRank) {
          bestTarget = static_cast<int>(t);
          bestRank = rank;
        }
      }
      if (bestTarget == -2) return;
      cur.members = cur.members.without(rid);
      cur.defaults = cur.defaults.without(rid);
      --cur.redCount;
      if (bestTarget == -1) {
        singles = singles.with(rid);
      } else {
        blocks[static_cast<std::size_t>(bestTarget)].members =
            blocks[static_cast<std::size_t>(bestTarget)].members.with(rid);
        ++blocks[static_cast<std::size_t>(bestTarget)].redCount;
      }
      moved = true;
    });
    return moved;
  };

  std::size_t next = 0;  // consumption pointer into the sorted reds
  for (std::size_t k = 0; k < blues.size() && next < reds.size(); ++k) {
    const int anchor = blues[k];
    Block cur{Coalition::single(anchor), Coalition::single(anchor), 0};
    for (;;) {
      bool progress = false;
      while (next < reds.size()) {
        const int rid = reds[next];
        const Ratio grown(cur.redCount + 1, cur.members.size() + 1);
        const Ratio cap = std::min(q[static_cast<std::size_t>(rid)], q[static_cast<std::size_t>(anchor)]);
        if (!(grown <= cap)) break;
        cur.members = cur.members.with(rid);
        cur.defaults = cur.defaults.with(rid);
        ++cur.redCount;
        ++next;
        progress = true;
      }
      if (relocateOne(cur)) progress = true;
      if (!progress) break;
    }
    blocks.push_back(cur);
  }

  std::vector<Ratio> preAdmission;
  preAdmission.reserve(blocks.size());
  for (const Block& b : blocks) preAdmission.push_back(redRatio(b.members, game));

  // Admission of the filtered reds that were never placed: lowest id first,
  // most preferred target, the singleton pool counting as ratio 1.
  std::vector<int> pool(reds.begin() + static_cast<std::ptrdiff_t>(next), reds.end());
  std::sort(pool.begin(), pool.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = pool.begin(); it != pool.end(); ++it) {
      const int rid = *it;
      int bestTarget = -2;
      int bestRank = 0;
      if (prefersStrictly(rid, Ratio::one(), Ratio::half(), game)) {
        bestTarget = -1;
        bestRank = game.rankOf(rid, Ratio::one());
      }
      for (std::size_t t = 0; t < blocks.size(); ++t) {
        const Coalition grown = blocks[t].members.with(rid);
        const Ratio value = redRatio(grown, game);
        if (!prefersStrictly(rid, value, Ratio::half(), game)) continue;
        if (!detail::allAccept(blocks[t].members, rid, game)) continue;
        const int rank = game.rankOf(rid, value);
        if (bestTarget == -2 || rank < bestRank) {
          bestTarget = static_cast<int>(t);
          bestRank = rank;
        }
      }
      if (bestTarget == -2) continue;
      if (bestTarget == -1) {
        singles = singles.with(rid);
      } else {
        blocks[static_cast<std::size_t>(bestTarget)].members =
            blocks[static_cast<std::size_t>(bestTarget)].members.with(rid);
        ++blocks[static_cast<std::size_t>(bestTarget)].redCount;
      }
      pool.erase(it);
      changed = true;
      break;
    }
  }

  // Only the last block can have been drained of reds: relocations move reds
  // out of the block under construction only, and a fresh block always starts
  // by absorbing a red while any remain.
  if (!blocks.empty() && blocks.back().redCount == 0) {
    blocks.pop_back();
    preAdmission.pop_back();
  }

  Coalition consumed = singles;
  out.blocks.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out.blocks.push_back(HalfBlock{blocks[i].members, blocks[i].defaults, preAdmission[i]});
    consumed = consumed | blocks[i].members;
  }
  out.singles = singles;
  out.leftoverReds = redIds - consumed;
  out.leftoverBlues = blueIds - consumed;
  return out;
}

// Full record of the individually stable construction: the red-side pass on
// the original game and the blue-side pass on the mirrored game, plus the
// mirror used to map between them.
struct IsSolveDetail {
  Partition partition;
  HalfResult redPhase;
  HalfResult bluePhaseMirrored;
  MirroredGame mirrored;
};

// Individually stable partition of any single-peaked game: a half pass per
// color, then pairing of leftovers that prefer 1/2 to being alone, then entry
// of the rest wherever individual rationality and unanimous consent allow.
inline IsSolveDetail solveIndividuallyStableDetailed(const DiversityGame& game) {
  for (int id = 0; id < game.n(); ++id) detail::requireSinglePeaked(id, game);

  MirroredGame mirrored = mirrorGame(game);
  HalfResult redPhase = half(game.allReds(), game.allBlues(), game);
  HalfResult bluePhase = half(mirrored.toMirrored(redPhase.leftoverBlues),
                              mirrored.toMirrored(redPhase.leftoverReds), mirrored.game);

  // bluePhase speaks mirrored ids: its reds are the original blues.
  Coalition redsLeft = mirrored.toOriginal(bluePhase.leftoverBlues);
  Coalition bluesLeft = mirrored.toOriginal(bluePhase.leftoverReds);

  std::vector<Coalition> redBlocks;
  redBlocks.reserve(redPhase.blocks.size());
  for (const HalfBlock& b : redPhase.blocks) redBlocks.push_back(b.members);
  std::vector<Coalition> blueBlocks;
  blueBlocks.reserve(bluePhase.blocks.size());
  for (const HalfBlock& b : bluePhase.blocks) blueBlocks.push_back(mirrored.toOriginal(b.members));

  // Leftover reds preferring 1/2 to 1 pair up with leftover blues preferring
  // 1/2 to 0, lowest ids first.
  std::vector<Coalition> pairBlocks;
  if (game.redCount() >= 1 && game.blueCount() >= 1) {
    std::vector<int> wantReds;
    forEachMember(redsLeft, [&](int id) {
      if (prefersStrictly(id, Ratio::half(), Ratio::one(), game)) wantReds.push_back(id);
    });
    std::vector<int> wantBlues;
    forEachMember(bluesLeft, [&](int id) {
      if (prefersStrictly(id, Ratio::half(), Ratio::zero(), game)) wantBlues.push_back(id);
    });
    const std::size_t pairs = std::min(wantReds.size(), wantBlues.size());
    for (std::size_t i = 0; i < pairs; ++i) {
      pairBlocks.push_back(Coalition::fromIds({wantReds[i], wantBlues[i]}));
      redsLeft = redsLeft.without(wantReds[i]);
      bluesLeft = bluesLeft.without(wantBlues[i]);
    }
  }

  // Remaining agents enter blocks of their own color's pass when the grown
  // block stays individually rational and every member accepts; lowest-id
  // agent first, most preferred resulting ratio, earliest block on ties.
  const auto admit = [&](Coalition& poolIds, std::vector<Coalition>& phaseBlocks) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const int id : poolIds.members()) {
        int bestTarget = -1;
        int bestRank = 0;
        for (std::size_t t = 0; t < phaseBlocks.size(); ++t) {
          const Coalition grown = phaseBlocks[t].with(id);
          if (!isIndividuallyRational(grown, game)) continue;
          if (!detail::allAccept(phaseBlocks[t], id, game)) continue;
          const int rank = game.rankOf(id, redRatio(grown, game));
          if (bestTarget == -1 || rank < bestRank) {
            bestTarget = static_cast<int>(t);
            bestRank = rank;
          }
        }
        if (bestTarget == -1) continue;
        phaseBlocks[static_cast<std::size_t>(bestTarget)] =
            phaseBlocks[static_cast<std::size_t>(bestTarget)].with(id);
        poolIds = poolIds.without(id);
        changed = true;
        break;
      }
    }
  };
  admit(redsLeft, redBlocks);
  admit(bluesLeft, blueBlocks);

  std::vector<Coalition> all;
  all.reserve(redBlocks.size() + blueBlocks.size() + pairBlocks.size() + static_cast<std::size_t>(game.n()));
  all.insert(all.end(), redBlocks.begin(), redBlocks.end());
  all.insert(all.end(), blueBlocks.begin(), blueBlocks.end());
  all.insert(all.end(), pairBlocks.begin(), pairBlocks.end());
  const Coalition singletonIds =
      redPhase.singles | mirrored.toOriginal(bluePhase.singles) | redsLeft | bluesLeft;
  forEachMember(singletonIds, [&](int id) { all.push_back(Coalition::single(id)); });

  Partition partition(std::move(all), game.n());
  return IsSolveDetail{std::move(partition), std::move(redPhase), std::move(bluePhase),
                       std::move(mirrored)};
}

inline Partition solveIndividuallyStable(const DiversityGame& game) {
  return solveIndividuallyStableDetailed(game).partition;
}

namespace detail {

inline void requireBruteForceSize(const DiversityGame& game, int cap) {
  if (game.n() > cap) {
    throw ResourceError("exhaustive enumeration over " + std::to_string(game.n()) +
                        " agents exceeds the cap of " + std::to_string(cap) +
                        "; raise the cap to proceed");
  }
}

}  // namespace detail

// Every core stable partition (or the lexicographically first one when
// findAll is false), by scanning all partitions in restricted-growth-string
// order. Throws ResourceError above the cap.
inline std::vector<Partition> coreBruteForce(const DiversityGame& game, bool findAll = true,
                                             int jobs = 1, int cap = kDefaultBruteForceCap) {
  detail::requireBruteForceSize(game, cap);
  const int n = game.n();
  const auto factory = [&game, n]() {
    return [&game, n, blockIdx = std::array<int, kMaxAgents>{},
            current = std::array<int, kMaxAgents>{}](const std::uint8_t* rgs, int blockCount) mutable {
      std::array<int, kMaxAgents> size{};
      std::array<int, kMaxAgents> reds{};
      for (int id = 0; id < n; ++id) {
        ++size[rgs[id]];
        if (id < game.redCount()) ++reds[rgs[id]];
      }
      for (int b = 0; b < blockCount; ++b) {
        blockIdx[static_cast<std::size_t>(b)] =
            game.thetaIndexOf(size[static_cast<std::size_t>(b)], reds[static_cast<std::size_t>(b)]);
      }
      for (int id = 0; id < n; ++id) {
        current[static_cast<std::size_t>(id)] = blockIdx[rgs[id]];
      }
      return !detail::firstBlockingPair(game, current.data()).has_value();
    };
  };
  std::vector<Partition> out;
  for (const auto& rgs : collectRgs(n, findAll, jobs, factory)) {
    out.push_back(partitionFromRgs(rgs.data(), n));
  }
  return out;
}

inline std::vector<Partition> nashBruteForce(const DiversityGame& game, int jobs = 1,
                                             int cap = kDefaultBruteForceCap) {
  detail::requireBruteForceSize(game, cap);
  const int n = game.n();
  const auto factory = [&game, n]() {
    return [&game, n](const std::uint8_t* rgs, int) {
      return isNashStable(game, partitionFromRgs(rgs, n));
    };
  };
  std::vector<Partition> out;
  for (const auto& rgs : collectRgs(n, true, jobs, factory)) {
    out.push_back(partitionFromRgs(rgs.data(), n));
  }
  return out;
}

inline std::vector<Partition> isBruteForce(const DiversityGame& game, int jobs = 1,
                                           int cap = kDefaultBruteForceCap) {
  detail::requireBruteForceSize(game, cap);
  const int n = game.n();
  const auto factory = [&game, n]() {
    return [&game, n](const std::uint8_t* rgs, int) {
      return isIndividuallyStable(game, partitionFromRgs(rgs, n));
    };
  };
  std::vector<Partition> out;
  for (const auto& rgs : collectRgs(n, true, jobs, factory)) {
    out.push_back(partitionFromRgs(rgs.data(), n));
  }
  return out;
}

// Core stable partition of a game with exactly one red agent (or, by
// mirroring, exactly one blue): the red picks its favorite feasible block
// ratio among those enough blues weakly welcome, everyone else stays alone.
inline Partition coreSingleRed(const DiversityGame& game) {
  if (game.redCount() != 1) {
    if (game.blueCount() == 1) {
      const MirroredGame mirrored = mirrorGame(game);
      return mirrored.toOriginal(coreSingleRed(mirrored.game));
    }
    throw ValidationError("needs exactly one red or exactly one blue agent");
  }
  const int red = 0;
  int bestM = 0;
  int bestRank = game.rankOf(red, Ratio::one());
  for (int m = 1; m <= game.blueCount(); ++m) {
    const Ratio candidate(1, 1 + m);
    if (!prefersWeakly(red, candidate, Ratio::one(), game)) continue;
    int takers = 0;
    for (int id = 1; id <= game.blueCount() && takers < m; ++id) {
      if (prefersWeakly(id, candidate, Ratio::zero(), game)) ++takers;
    }
    if (takers < m) continue;
    const int rank = game.rankOf(red, candidate);
    if (rank < bestRank) {
      bestRank = rank;
      bestM = m;
    }
  }
  std::vector<Coalition> blocks;
  if (bestM == 0) return Partition::singletons(game.n());
  const Ratio chosen(1, 1 + bestM);
  Coalition star = Coalition::single(red);
  int taken = 0;
  for (int id = 1; id < game.n() && taken < bestM; ++id) {
    if (prefersWeakly(id, chosen, Ratio::zero(), game)) {
      star = star.with(id);
      ++taken;
    }
  }
  blocks.push_back(star);
  for (int id = 1; id < game.n(); ++id) {
    if (!star.contains(id)) blocks.push_back(Coalition::single(id));
  }
  return Partition(std::move(blocks), game.n());
}

// Core stable partition when every agent ranks the interior ratios (all but 0
// and 1) identically: repeatedly either retire an agent that weakly prefers
// being alone to every mixed ratio still formable, or bind the commonly best
// formable mixed ratio into a block of minimal size.
inline Partition coreCommonPreference(const DiversityGame& game) {
  std::vector<Ratio> interior0;
  for (const Ratio& value : game.order(0).ranking) {
    if (value != Ratio::zero() && value != Ratio::one()) interior0.push_back(value);
  }
  for (int id = 1; id < game.n(); ++id) {
    std::vector<Ratio> interior;
    for (const Ratio& value : game.order(id).ranking) {
      if (value != Ratio::zero() && value != Ratio::one()) interior.push_back(value);
    }
    if (interior != interior0) {
      throw ValidationError("agents 0 and " + std::to_string(id) +
                            " rank the interior ratios differently");
    }
  }

  std::vector<int> redPool;
  std::vector<int> bluePool;
  for (int id = 0; id < game.n(); ++id) (game.isRed(id) ? redPool : bluePool).push_back(id);

  std::vector<Coalition> blocks;
  while (!redPool.empty() || !bluePool.empty()) {
    // mixed ratios still realizable from the pools
    std::vector<Ratio> mixed;
    for (std::size_t a = 1; a <= redPool.size(); ++a) {
      for (std::size_t c = 1; c <= bluePool.size(); ++c) {
        mixed.emplace_back(static_cast<std::int64_t>(a), static_cast<std::int64_t>(a + c));
      }
    }
    std::sort(mixed.begin(), mixed.end());
    mixed.erase(std::unique(mixed.begin(), mixed.end()), mixed.end());

    if (mixed.empty()) {
      for (const int id : redPool) blocks.push_back(Coalition::single(id));
      for (const int id : bluePool) blocks.push_back(Coalition::single(id));
      break;
    }

    int dropout = -1;
    for (int id = 0; id < game.n() && dropout == -1; ++id) {
      const bool pooled = game.isRed(id)
                              ? std::find(redPool.begin(), redPool.end(), id) != redPool.end()
                              : std::find(bluePool.begin(), bluePool.end(), id) != bluePool.end();
      if (!pooled) continue;
      const Ratio own = singletonRatio(id, game);
      bool contentAlone = true;
      for (const Ratio& value : mixed) {
        if (!prefersWeakly(id, own, value, game)) {
          contentAlone = false;
          break;
        }
      }
      if (contentAlone) dropout = id;
    }
    if (dropout != -1) {
      blocks.push_back(Coalition::single(dropout));
      auto& pool = game.isRed(dropout) ? redPool : bluePool;
      pool.erase(std::find(pool.begin(), pool.end(), dropout));
      continue;
    }

    // the shared interior order makes "best mixed" agent-independent
    const Ratio* top = &mixed.front();
    for (const Ratio& value : mixed) {
      if (game.rankOf(0, value) < game.rankOf(0, *top)) top = &value;
    }
    const int redsNeeded = static_cast<int>(top->num());
    const int bluesNeeded = static_cast<int>(top->den() - top->num());
    Coalition block;
    for (int i = 0; i < redsNeeded; ++i) block = block.with(redPool[static_cast<std::size_t>(i)]);
    for (int i = 0; i < bluesNeeded; ++i) block = block.with(bluePool[static_cast<std::size_t>(i)]);
    redPool.erase(redPool.begin(), redPool.begin() + redsNeeded);
    bluePool.erase(bluePool.begin(), bluePool.begin() + bluesNeeded);
    blocks.push_back(block);
  }
  return Partition(std::move(blocks), game.n());
}

// Trace of better-response dynamics under a fixed deterministic rule: the
// lowest-id agent holding any admissible deviation moves to its most
// preferred target, ties to the lowest block index with leaving-to-a-
// singleton last. Deviations are recorded against the canonical partition
// they were applied to.
struct DynamicsTrace {
  std::vector<Deviation> steps;
  Partition finalPartition;
  bool converged = false;
  int stepLimit = 0;

  friend bool operator==(const DynamicsTrace&, const DynamicsTrace&) = default;
};

inline Partition applyDeviation(const Partition& pi, const Deviation& d) {
  std::vector<Coalition> blocks = pi.blocks();
  if (d.fromBlock < 0 || d.fromBlock >= pi.blockCount() ||
      !blocks[static_cast<std::size_t>(d.fromBlock)].contains(d.agentId)) {
    throw ValidationError("deviation does not match the partition");
  }
  blocks[static_cast<std::size_t>(d.fromBlock)] =
      blocks[static_cast<std::size_t>(d.fromBlock)].without(d.agentId);
  if (d.toBlock) {
    if (*d.toBlock < 0 || *d.toBlock >= pi.blockCount() || *d.toBlock == d.fromBlock) {
      throw ValidationError("deviation does not match the partition");
    }
    blocks[static_cast<std::size_t>(*d.toBlock)] =
        blocks[static_cast<std::size_t>(*d.toBlock)].with(d.agentId);
  } else {
    blocks.push_back(Coalition::single(d.agentId));
  }
  std::erase_if(blocks, [](const Coalition& b) { return b.empty(); });
  return Partition(std::move(blocks), pi.n());
}

inline DynamicsTrace runDynamics(const DiversityGame& game, const Partition& start,
                                 DeviationKind kind, int stepLimit) {
  if (stepLimit < 1) throw ValidationError("step limit must be positive");
  detail::requireSameGame(game, start);
  Partition current = start;
  std::vector<Deviation> steps;
  for (int step = 0; step < stepLimit; ++step) {
    std::optional<Deviation> chosen;
    int chosenRank = 0;
    detail::scanDeviations(game, current, kind, [&](const Deviation& d) {
      if (chosen && d.agentId != chosen->agentId) return false;
      const Ratio result = d.toBlock
                               ? redRatio(current.block(*d.toBlock).with(d.agentId), game)
                               : singletonRatio(d.agentId, game);
      const int rank = game.rankOf(d.agentId, result);
      // scan order is blocks ascending then the singleton move, so a strict
      // improvement test implements the tie rule
      if (!chosen || rank < chosenRank) {
        chosen = d;
        chosenRank = rank;
      }
      return true;
    });
    if (!chosen) {
      return DynamicsTrace{std::move(steps), std::move(current), true, stepLimit};
    }
    steps.push_back(*chosen);
    current = applyDeviation(current, *chosen);
  }
  const bool settled = kind == DeviationKind::NS ? isNashStable(game, current)
                                                 : isIndividuallyStable(game, current);
  return DynamicsTrace{std::move(steps), std::move(current), settled, stepLimit};
}

}  // namespace hdg
