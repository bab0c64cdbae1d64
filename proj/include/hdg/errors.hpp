#pragma once

#include <stdexcept>
#include <string>

namespace hdg {

// Malformed input: bad documents, precondition violations, out-of-domain values.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Work refused because it would exceed a configured cap.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Hard model-wide agent cap: coalitions are 64-bit masks.
inline constexpr int kMaxAgents = 64;

// Default cap for exhaustive partition enumeration. Bell(13) is about 2.8e7,
// which a single core scans in seconds; every added agent multiplies that by
// roughly the block count, so anything past this needs an explicit opt-in.
inline constexpr int kDefaultBruteForceCap = 13;

// Default cap for anonymous-game enumeration checks. Bell(8) = 4140.
inline constexpr int kDefaultAnonymousCap = 8;

}  // namespace hdg
