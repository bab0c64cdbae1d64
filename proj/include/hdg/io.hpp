#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hdg/coalition.hpp"
#include "hdg/errors.hpp"
#include "hdg/game.hpp"
#include "hdg/preferences.hpp"
#include "hdg/rational.hpp"
#include "hdg/reduction.hpp"
#include "hdg/solvers.hpp"
#include "hdg/stability.hpp"

namespace hdg {

// Ordered JSON keeps insertion order, so serialization is byte-deterministic.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline Json parseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

inline const Json& requireField(const Json& j, const char* name, const char* context) {
  if (!j.is_object() || !j.contains(name)) {
    throw ValidationError(std::string(context) + ": missing field \"" + name + "\"");
  }
  return j.at(name);
}

inline int requireInt(const Json& j, const char* name, const char* context) {
  const Json& field = requireField(j, name, context);
  if (!field.is_number_integer()) {
    throw ValidationError(std::string(context) + ": field \"" + name + "\" must be an integer");
  }
  return field.get<int>();
}

inline void requireSchema(const Json& j, const char* context) {
  const int version = requireInt(j, "schemaVersion", context);
  if (version != kSchemaVersion) {
    throw ValidationError(std::string(context) + ": unsupported schemaVersion " +
                          std::to_string(version));
  }
}

inline std::string dumpDocument(const Json& j) { return j.dump(2) + "\n"; }

inline Json partitionToJson(const Partition& pi) {
  Json blocks = Json::array();
  for (const Coalition& block : pi.blocks()) blocks.push_back(block.members());
  return blocks;
}

inline Partition partitionFromJson(const Json& blocksJson, const char* context) {
  if (!blocksJson.is_array() || blocksJson.empty()) {
    throw ValidationError(std::string(context) + ": blocks must be a nonempty array");
  }
  std::vector<Coalition> blocks;
  int maxId = -1;
  for (const Json& blockJson : blocksJson) {
    if (!blockJson.is_array()) {
      throw ValidationError(std::string(context) + ": each block must be an array of agent ids");
    }
    std::vector<int> ids;
    for (const Json& idJson : blockJson) {
      if (!idJson.is_number_integer()) {
        throw ValidationError(std::string(context) + ": agent ids must be integers");
      }
      const int id = idJson.get<int>();
      if (id < 0 || id >= kMaxAgents) {
        throw ValidationError(std::string(context) + ": agent id " + std::to_string(id) +
                              " out of range");
      }
      ids.push_back(id);
      maxId = std::max(maxId, id);
    }
    blocks.push_back(Coalition::fromIds(ids));
  }
  return Partition(std::move(blocks), maxId + 1);
}

inline Json instanceToJson(const DiversityGame& game) {
  Json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["redCount"] = game.redCount();
  doc["blueCount"] = game.blueCount();
  Json prefs = Json::array();
  for (int agent = 0; agent < game.n(); ++agent) {
    Json ranking = Json::array();
    for (const Ratio& value : game.order(agent).ranking) ranking.push_back(value.str());
    prefs.push_back(std::move(ranking));
  }
  doc["preferences"] = std::move(prefs);
  return doc;
}

inline Json deviationToJson(const Deviation& d) {
  Json out;
  out["agent"] = d.agentId;
  out["fromBlock"] = d.fromBlock;
  if (d.toBlock) {
    out["toBlock"] = *d.toBlock;
  } else {
    out["toBlock"] = nullptr;
  }
  out["kind"] = d.kind == DeviationKind::NS ? "NS" : "IS";
  return out;
}

}  // namespace detail

inline std::string serializeInstance(const DiversityGame& game) {
  return detail::dumpDocument(detail::instanceToJson(game));
}

// Accepts explicit rankings (arrays of "num/den" strings) and the compact
// form {"peak": "num/den", "construction": "closest-ratio"} per agent.
inline DiversityGame parseInstance(const std::string& text) {
  const Json doc = detail::parseJsonText(text);
  detail::requireSchema(doc, "instance");
  const int redCount = detail::requireInt(doc, "redCount", "instance");
  const int blueCount = detail::requireInt(doc, "blueCount", "instance");
  if (redCount < 0 || blueCount < 0) {
    throw ValidationError("instance: agent counts must be non-negative");
  }
  const Json& prefsJson = detail::requireField(doc, "preferences", "instance");
  if (!prefsJson.is_array()) {
    throw ValidationError("instance: \"preferences\" must be an array");
  }
  const ThetaSet theta(redCount, blueCount);
  std::vector<PreferenceOrder> prefs;
  prefs.reserve(prefsJson.size());
  for (std::size_t agent = 0; agent < prefsJson.size(); ++agent) {
    const Json& entry = prefsJson[agent];
    const std::string context = "instance: preferences[" + std::to_string(agent) + "]";
    if (entry.is_array()) {
      PreferenceOrder order;
      order.ranking.reserve(entry.size());
      for (const Json& ratioJson : entry) {
        if (!ratioJson.is_string()) {
          throw ValidationError(context + ": ratios must be \"num/den\" strings");
        }
        order.ranking.push_back(Ratio::parse(ratioJson.get<std::string>()));
      }
      prefs.push_back(std::move(order));
    } else if (entry.is_object()) {
      const Json& peakJson = detail::requireField(entry, "peak", context.c_str());
      if (!peakJson.is_string()) {
        throw ValidationError(context + ": \"peak\" must be a \"num/den\" string");
      }
      const Json& kindJson = detail::requireField(entry, "construction", context.c_str());
      if (!kindJson.is_string() || kindJson.get<std::string>() != "closest-ratio") {
        throw ValidationError(context + ": unknown construction, expected \"closest-ratio\"");
      }
      prefs.push_back(closestRatioOrder(Ratio::parse(peakJson.get<std::string>()), theta));
    } else {
      throw ValidationError(context + ": must be a ranking array or a compact object");
    }
  }
  try {
    return DiversityGame(redCount, blueCount, std::move(prefs));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("instance: ") + e.what());
  }
}

inline std::string serializePartition(const Partition& pi) {
  Json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["blocks"] = detail::partitionToJson(pi);
  return detail::dumpDocument(doc);
}

// The agent population is implied: blocks must cover 0..maxId exactly.
inline Partition parsePartition(const std::string& text) {
  const Json doc = detail::parseJsonText(text);
  detail::requireSchema(doc, "partition");
  try {
    return detail::partitionFromJson(detail::requireField(doc, "blocks", "partition"), "partition");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    if (what.rfind("partition:", 0) == 0) throw;
    throw ValidationError("partition: " + what);
  }
}

inline std::string serializeAnonymousGame(const AnonymousGame& game) {
  Json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["n"] = game.n();
  doc["orders"] = game.orders();
  return detail::dumpDocument(doc);
}

inline AnonymousGame parseAnonymousGame(const std::string& text) {
  const Json doc = detail::parseJsonText(text);
  detail::requireSchema(doc, "anonymous game");
  const int n = detail::requireInt(doc, "n", "anonymous game");
  const Json& ordersJson = detail::requireField(doc, "orders", "anonymous game");
  if (!ordersJson.is_array()) {
    throw ValidationError("anonymous game: \"orders\" must be an array");
  }
  std::vector<std::vector<int>> orders;
  orders.reserve(ordersJson.size());
  for (const Json& orderJson : ordersJson) {
    if (!orderJson.is_array()) {
      throw ValidationError("anonymous game: each order must be an array of sizes");
    }
    std::vector<int> order;
    for (const Json& sizeJson : orderJson) {
      if (!sizeJson.is_number_integer()) {
        throw ValidationError("anonymous game: sizes must be integers");
      }
      order.push_back(sizeJson.get<int>());
    }
    orders.push_back(std::move(order));
  }
  try {
    return AnonymousGame(n, std::move(orders));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("anonymous game: ") + e.what());
  }
}

// Outcome of one stability check. Exactly one of witness and deviation is set
// when stable is false: witness for core, deviation for the unilateral
// concepts. timingMs is wall-clock and the one field exempt from the
// byte-identical output guarantee.
struct VerdictReport {
  std::string conceptName;  // "core", "nash" or "is"
  bool stable = false;
  std::optional<BlockingWitness> witness;
  std::optional<Deviation> deviation;
  double timingMs = 0.0;
};

inline std::string serializeVerdict(const VerdictReport& report) {
  Json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["concept"] = report.conceptName;
  doc["stable"] = report.stable;
  if (report.witness) {
    Json witness;
    witness["coalition"] = report.witness->coalition.members();
    witness["ratio"] = report.witness->ratio.str();
    doc["witness"] = std::move(witness);
  }
  if (report.deviation) {
    doc["deviation"] = detail::deviationToJson(*report.deviation);
  }
  doc["timingMs"] = report.timingMs;
  return detail::dumpDocument(doc);
}

inline std::string serializeSolveResult(const std::vector<Partition>& partitions) {
  Json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["count"] = partitions.size();
  Json list = Json::array();
  for (const Partition& pi : partitions) list.push_back(detail::partitionToJson(pi));
  doc["partitions"] = std::move(list);
  return detail::dumpDocument(doc);
}

inline std::string serializeDynamicsTrace(const DynamicsTrace& trace) {
  Json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["stepLimit"] = trace.stepLimit;
  doc["converged"] = trace.converged;
  Json steps = Json::array();
  for (const Deviation& d : trace.steps) steps.push_back(detail::deviationToJson(d));
  doc["steps"] = std::move(steps);
  doc["finalPartition"] = detail::partitionToJson(trace.finalPartition);
  return detail::dumpDocument(doc);
}

inline std::string serializeReductionVerification(const DiversityGame& reduced,
                                                  const ReductionReport& report) {
  Json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["instance"] = detail::instanceToJson(reduced);
  Json equivalence;
  equivalence["sourceCoreNonEmpty"] = report.sourceCoreNonEmpty;
  equivalence["targetCoreNonEmpty"] = report.targetCoreNonEmpty;
  equivalence["agree"] = report.agree;
  doc["equivalence"] = std::move(equivalence);
  return detail::dumpDocument(doc);
}

}  // namespace hdg
