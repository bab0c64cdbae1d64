#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "hdg/coalition.hpp"
#include "hdg/errors.hpp"

namespace hdg {

// Bell numbers via the Bell triangle; exact in 64 bits through n = 25.
inline std::uint64_t bellNumber(int n) {
  if (n < 0 || n > 25) throw ValidationError("Bell number out of supported range");
  if (n == 0) return 1;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i < n; ++i) {
    std::vector<std::uint64_t> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const std::uint64_t value : row) next.push_back(next.back() + value);
    row = std::move(next);
  }
  return row.back();
}

namespace detail {

// Depth-first walk over restricted growth string suffixes: position pos and
// later take every value up to one past the running maximum, in ascending
// order, which yields RGS in lexicographic order. visit returns false to stop.
template <class Visit>
bool walkRgs(std::uint8_t* rgs, int n, int pos, int maxUsed, Visit& visit) {
  if (pos == n) return visit(static_cast<const std::uint8_t*>(rgs), maxUsed + 1);
  for (int value = 0; value <= maxUsed + 1; ++value) {
    rgs[pos] = static_cast<std::uint8_t>(value);
    if (!walkRgs(rgs, n, pos + 1, std::max(maxUsed, value), visit)) return false;
  }
  return true;
}

}  // namespace detail

// Visits every restricted growth string of length n (each encoding one set
// partition: agent i belongs to block rgs[i]) in lexicographic order.
// visit(rgs, blockCount) returns false to stop early.
template <class Visit>
void forEachRgs(int n, Visit&& visit) {
  if (n < 1 || n > kMaxAgents) throw ValidationError("agent count out of range");
  std::uint8_t rgs[kMaxAgents];
  rgs[0] = 0;
  detail::walkRgs(rgs, n, 1, 0, visit);
}

// Decodes an RGS into the partition it names. Blocks keyed by first symbol
// occurrence are already ordered by lowest member.
inline Partition partitionFromRgs(const std::uint8_t* rgs, int n) {
  int blockCount = 0;
  for (int i = 0; i < n; ++i) blockCount = std::max(blockCount, static_cast<int>(rgs[i]) + 1);
  std::vector<Coalition> blocks(static_cast<std::size_t>(blockCount));
  for (int i = 0; i < n; ++i) {
    blocks[rgs[i]] = blocks[rgs[i]].with(i);
  }
  return Partition(std::move(blocks), n);
}

// Collects, in global lexicographic RGS order, every partition the predicate
// keeps (or just the first when findAll is false). predFactory() must return
// a worker-local callable bool(const uint8_t* rgs, int blockCount); workers
// never share a predicate instance, so predicates may keep scratch state.
template <class PredFactory>
std::vector<std::vector<std::uint8_t>> collectRgs(int n, bool findAll, int jobs,
                                                  PredFactory&& predFactory) {
  if (n < 1 || n > kMaxAgents) throw ValidationError("agent count out of range");
  if (jobs < 1) throw ValidationError("worker count must be positive");

  std::vector<std::vector<std::uint8_t>> results;
  if (jobs == 1 || n < 9) {
    auto pred = predFactory();
    forEachRgs(n, [&](const std::uint8_t* rgs, int blockCount) {
      if (pred(rgs, blockCount)) {
        results.emplace_back(rgs, rgs + n);
        if (!findAll) return false;
      }
      return true;
    });
    return results;
  }

  // Split the space by RGS prefix. Prefixes enumerate in lexicographic order,
  // so concatenating per-prefix results in prefix order restores the global
  // order; with findAll false, a hit only cancels strictly later prefixes.
  const int prefixLen = std::min(n - 1, 6);
  std::vector<std::vector<std::uint8_t>> prefixes;
  forEachRgs(prefixLen, [&](const std::uint8_t* rgs, int) {
    prefixes.emplace_back(rgs, rgs + prefixLen);
    return true;
  });

  const int prefixCount = static_cast<int>(prefixes.size());
  std::vector<std::vector<std::vector<std::uint8_t>>> perPrefix(
      static_cast<std::size_t>(prefixCount));
  std::atomic<int> nextPrefix{0};
  std::atomic<int> earliestHit{prefixCount};

  const int workerCount = std::min(jobs, prefixCount);
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(workerCount));
  for (int w = 0; w < workerCount; ++w) {
    workers.emplace_back([&, pred = predFactory()]() mutable {
      std::uint8_t rgs[kMaxAgents];
      for (;;) {
        const int p = nextPrefix.fetch_add(1, std::memory_order_relaxed);
        if (p >= prefixCount) return;
        if (!findAll && p > earliestHit.load(std::memory_order_relaxed)) continue;
        const auto& prefix = prefixes[static_cast<std::size_t>(p)];
        int maxUsed = 0;
        for (int i = 0; i < prefixLen; ++i) {
          rgs[i] = prefix[static_cast<std::size_t>(i)];
          maxUsed = std::max(maxUsed, static_cast<int>(rgs[i]));
        }
        auto& bucket = perPrefix[static_cast<std::size_t>(p)];
        auto visit = [&](const std::uint8_t* full, int blockCount) {
          if (!findAll && p > earliestHit.load(std::memory_order_relaxed)) return false;
          if (pred(full, blockCount)) {
            bucket.emplace_back(full, full + n);
            if (!findAll) {
              int expected = earliestHit.load(std::memory_order_relaxed);
              while (p < expected &&
                     !earliestHit.compare_exchange_weak(expected, p, std::memory_order_relaxed)) {
              }
              return false;
            }
          }
          return true;
        };
        detail::walkRgs(rgs, n, prefixLen, maxUsed, visit);
      }
    });
  }
  for (std::thread& t : workers) t.join();

  for (auto& bucket : perPrefix) {
    for (auto& rgs : bucket) {
      results.push_back(std::move(rgs));
      if (!findAll) return results;
    }
  }
  return results;
}

}  // namespace hdg
