#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hdg/errors.hpp"

namespace hdg {

namespace detail {

inline void checkAgentId(int id) {
  if (id < 0 || id >= kMaxAgents) {
    throw ValidationError("agent id " + std::to_string(id) + " out of range");
  }
}

}  // namespace detail

// Agent subset as a 64-bit mask; agent ids index bits. Membership, union and
// intersection are single instructions, which the exhaustive checkers rely on.
class Coalition {
 public:
  constexpr Coalition() = default;

  static constexpr Coalition fromBits(std::uint64_t bits) {
    Coalition c;
    c.bits_ = bits;
    return c;
  }

  static Coalition single(int id) {
    detail::checkAgentId(id);
    return fromBits(std::uint64_t{1} << id);
  }

  static Coalition fromIds(std::initializer_list<int> ids) {
    return fromRange(ids.begin(), ids.end());
  }

  static Coalition fromIds(const std::vector<int>& ids) {
    return fromRange(ids.begin(), ids.end());
  }

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(int id) const {
    detail::checkAgentId(id);
    return (bits_ >> id) & 1u;
  }

  Coalition with(int id) const {
    detail::checkAgentId(id);
    return fromBits(bits_ | (std::uint64_t{1} << id));
  }

  Coalition without(int id) const {
    detail::checkAgentId(id);
    return fromBits(bits_ & ~(std::uint64_t{1} << id));
  }

  // Lowest member id; the canonical block key. Empty coalitions have none.
  int lowestId() const {
    if (empty()) throw ValidationError("empty coalition has no lowest member");
    return std::countr_zero(bits_);
  }

  // Members with id < bound; with bound = redCount this counts red members.
  int countBelow(int bound) const {
    detail::checkAgentId(bound == 0 ? 0 : bound - 1);
    const std::uint64_t mask = bound == 0 ? 0 : (~std::uint64_t{0} >> (kMaxAgents - bound));
    return std::popcount(bits_ & mask);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      out.push_back(std::countr_zero(rest));
    }
    return out;
  }

  friend Coalition operator|(const Coalition& a, const Coalition& b) {
    return fromBits(a.bits_ | b.bits_);
  }
  friend Coalition operator&(const Coalition& a, const Coalition& b) {
    return fromBits(a.bits_ & b.bits_);
  }
  // Set difference.
  friend Coalition operator-(const Coalition& a, const Coalition& b) {
    return fromBits(a.bits_ & ~b.bits_);
  }

  bool isSubsetOf(const Coalition& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  template <class It>
  static Coalition fromRange(It first, It last) {
    Coalition c;
    for (It it = first; it != last; ++it) {
      detail::checkAgentId(*it);
      const std::uint64_t bit = std::uint64_t{1} << *it;
      if (c.bits_ & bit) {
        throw ValidationError("duplicate agent id " + std::to_string(*it));
      }
      c.bits_ |= bit;
    }
    return c;
  }

  std::uint64_t bits_ = 0;
};

// Iterate set bits without materializing a vector; used by the hot checkers.
template <class Fn>
void forEachMember(const Coalition& s, Fn&& fn) {
  for (std::uint64_t rest = s.bits(); rest != 0; rest &= rest - 1) {
    fn(std::countr_zero(rest));
  }
}

inline std::uint64_t fullMask(int n) {
  if (n < 1 || n > kMaxAgents) throw ValidationError("agent count out of range");
  return n == kMaxAgents ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Disjoint nonempty blocks covering agents 0..n-1. Canonical form: blocks
// sorted by lowest member id, so structurally equal partitions compare equal.
class Partition {
 public:
  Partition(std::vector<Coalition> blocks, int n) : blocks_(std::move(blocks)), n_(n) {
    const std::uint64_t full = fullMask(n);
    std::uint64_t seen = 0;
    for (const Coalition& block : blocks_) {
      if (block.empty()) throw ValidationError("partition blocks must be nonempty");
      if (seen & block.bits()) throw ValidationError("partition blocks overlap");
      seen |= block.bits();
    }
    if (seen != full) throw ValidationError("partition blocks must cover every agent exactly once");
    std::sort(blocks_.begin(), blocks_.end(), [](const Coalition& a, const Coalition& b) {
      return a.lowestId() < b.lowestId();
    });
    blockOf_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      forEachMember(blocks_[b], [&](int id) { blockOf_[static_cast<std::size_t>(id)] = static_cast<int>(b); });
    }
  }

  static Partition singletons(int n) {
    std::vector<Coalition> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int id = 0; id < n; ++id) blocks.push_back(Coalition::single(id));
    return Partition(std::move(blocks), n);
  }

  int n() const { return n_; }
  int blockCount() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Coalition>& blocks() const { return blocks_; }
  const Coalition& block(int idx) const { return blocks_.at(static_cast<std::size_t>(idx)); }

  int blockIndexOf(int agentId) const {
    if (agentId < 0 || agentId >= n_) throw ValidationError("agent id out of range");
    return blockOf_[static_cast<std::size_t>(agentId)];
  }

  const Coalition& blockContaining(int agentId) const {
    return blocks_[static_cast<std::size_t>(blockIndexOf(agentId))];
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  std::vector<Coalition> blocks_;
  std::vector<int> blockOf_;
  int n_;
};

}  // namespace hdg
