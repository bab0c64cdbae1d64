#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hdg/errors.hpp"
#include "hdg/rational.hpp"

namespace hdg {

// The feasible red ratios for a population of redCount reds and blueCount
// blues: every reduced r/s with 0 <= r <= redCount, 1 <= s <= n, r <= s and
// s - r <= blueCount. Stored ascending and deduplicated, so indices give a
// total order usable as array keys.
class ThetaSet {
 public:
  ThetaSet(int redCount, int blueCount)
      : redCount_(redCount), blueCount_(blueCount) {
    if (redCount < 0 || blueCount < 0) {
      throw ValidationError("agent counts must be non-negative");
    }
    const int n = redCount + blueCount;
    if (n < 1) throw ValidationError("a game needs at least one agent");
    if (n > kMaxAgents) {
      throw ResourceError("agent count " + std::to_string(n) +
                          " exceeds the model cap of " + std::to_string(kMaxAgents));
    }
    for (int r = 0; r <= redCount; ++r) {
      const int sLo = std::max(1, r);
      const int sHi = std::min(n, r + blueCount);
      for (int s = sLo; s <= sHi; ++s) ratios_.emplace_back(r, s);
    }
    std::sort(ratios_.begin(), ratios_.end());
    ratios_.erase(std::unique(ratios_.begin(), ratios_.end()), ratios_.end());
  }

  int redCount() const { return redCount_; }
  int blueCount() const { return blueCount_; }
  int size() const { return static_cast<int>(ratios_.size()); }
  const std::vector<Ratio>& ratios() const { return ratios_; }
  const Ratio& at(int idx) const { return ratios_.at(static_cast<std::size_t>(idx)); }

  std::optional<int> find(const Ratio& value) const {
    const auto it = std::lower_bound(ratios_.begin(), ratios_.end(), value);
    if (it == ratios_.end() || *it != value) return std::nullopt;
    return static_cast<int>(it - ratios_.begin());
  }

  bool contains(const Ratio& value) const { return find(value).has_value(); }

  int indexOf(const Ratio& value) const {
    const auto idx = find(value);
    if (!idx) throw ValidationError("ratio " + value.str() + " is not feasible for this population");
    return *idx;
  }

  friend bool operator==(const ThetaSet&, const ThetaSet&) = default;

 private:
  int redCount_;
  int blueCount_;
  std::vector<Ratio> ratios_;
};

inline ThetaSet buildThetaSet(int redCount, int blueCount) {
  return ThetaSet(redCount, blueCount);
}

}  // namespace hdg
