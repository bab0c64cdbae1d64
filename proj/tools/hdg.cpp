// Command line front end: generate, check, solve, reduce, dynamics.
// Results go to stdout, diagnostics to stderr. Exit codes: 0 success or
// positive verdict, 1 negative verdict or empty result, 2 usage or validation
// error, 3 resource cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hdg/hdg.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hdg::ValidationError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty() || outPath == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(outPath, std::ios::binary);
  if (!out) throw hdg::ValidationError("cannot write " + outPath);
  out << text;
}

// A partition argument may be a partition document or a solve result that
// contains exactly one partition, so solve output pipes straight into check.
hdg::Partition parsePartitionArgument(const std::string& text) {
  const hdg::Json doc = hdg::detail::parseJsonText(text);
  if (doc.is_object() && doc.contains("partitions")) {
    hdg::detail::requireSchema(doc, "solve result");
    const hdg::Json& list = doc.at("partitions");
    if (!list.is_array() || list.size() != 1) {
      throw hdg::ValidationError(
          "solve result used as a partition must contain exactly one partition");
    }
    return hdg::detail::partitionFromJson(list.at(0), "solve result");
  }
  return hdg::parsePartition(text);
}

hdg::Partition randomStartPartition(int n, std::uint64_t seed) {
  hdg::SplitMix64 rng(seed);
  std::uint8_t rgs[hdg::kMaxAgents];
  rgs[0] = 0;
  int maxUsed = 0;
  for (int i = 1; i < n; ++i) {
    rgs[i] = static_cast<std::uint8_t>(rng.next() % static_cast<std::uint64_t>(maxUsed + 2));
    maxUsed = std::max(maxUsed, static_cast<int>(rgs[i]));
  }
  return hdg::partitionFromRgs(rgs, n);
}

struct GenerateOptions {
  std::string kind;
  int red = 0;
  int blue = 0;
  std::uint64_t seed = 0;
  std::string outPath;
};

int runGenerate(const GenerateOptions& opt) {
  std::optional<hdg::DiversityGame> game;
  if (opt.kind == "homophilic") {
    game = hdg::makeHomophilic(opt.red, opt.blue);
  } else if (opt.kind == "bakers-millers") {
    game = hdg::makeBakersMillers(opt.red, opt.blue);
  } else if (opt.kind == "example3") {
    game = hdg::makeExample3();
  } else if (opt.kind == "random") {
    game = hdg::randomSinglePeaked(opt.red, opt.blue, opt.seed);
  } else {
    throw hdg::ValidationError("unknown kind: " + opt.kind);
  }
  emit(hdg::serializeInstance(*game), opt.outPath);
  return 0;
}

int runCheck(const std::string& conceptName, const std::string& instancePath,
             const std::string& partitionPath) {
  const hdg::DiversityGame game = hdg::parseInstance(slurp(instancePath));
  const hdg::Partition pi = parsePartitionArgument(slurp(partitionPath));
  hdg::VerdictReport report;
  report.conceptName = conceptName;
  const auto started = std::chrono::steady_clock::now();
  if (conceptName == "core") {
    report.witness = hdg::findBlockingCoalition(game, pi);
    report.stable = !report.witness.has_value();
  } else if (conceptName == "nash" || conceptName == "is") {
    const auto kind = conceptName == "nash" ? hdg::DeviationKind::NS : hdg::DeviationKind::IS;
    report.deviation = hdg::findDeviation(game, pi, kind);
    report.stable = !report.deviation.has_value();
  } else {
    throw hdg::ValidationError("unknown concept: " + conceptName);
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;
  report.timingMs = std::chrono::duration<double, std::milli>(elapsed).count();
  emit(hdg::serializeVerdict(report), "");
  return report.stable ? 0 : 1;
}

int runSolve(const std::string& method, const std::string& instancePath, bool all, int jobs,
             int bruteCap) {
  const hdg::DiversityGame game = hdg::parseInstance(slurp(instancePath));
  std::vector<hdg::Partition> partitions;
  if (method == "is") {
    partitions.push_back(hdg::solveIndividuallyStable(game));
  } else if (method == "core-brute") {
    partitions = hdg::coreBruteForce(game, all, jobs, bruteCap);
  } else if (method == "nash-brute") {
    partitions = hdg::nashBruteForce(game, jobs, bruteCap);
  } else if (method == "is-brute") {
    partitions = hdg::isBruteForce(game, jobs, bruteCap);
  } else if (method == "prop3") {
    partitions.push_back(hdg::coreSingleRed(game));
  } else if (method == "prop4") {
    partitions.push_back(hdg::coreCommonPreference(game));
  } else {
    throw hdg::ValidationError("unknown method: " + method);
  }
  if (!all && partitions.size() > 1) partitions.erase(partitions.begin() + 1, partitions.end());
  emit(hdg::serializeSolveResult(partitions), "");
  return partitions.empty() ? 1 : 0;
}

int runReduce(const std::string& anonPath, bool verify, int jobs, int bruteCap) {
  const hdg::AnonymousGame source = hdg::parseAnonymousGame(slurp(anonPath));
  const hdg::DiversityGame reduced = hdg::reduceToDiversity(source);
  if (!verify) {
    emit(hdg::serializeInstance(reduced), "");
    return 0;
  }
  const hdg::ReductionReport report = hdg::checkReductionEquivalence(source, jobs, bruteCap);
  emit(hdg::serializeReductionVerification(reduced, report), "");
  return report.agree ? 0 : 1;
}

int runDynamics(const std::string& instancePath, const std::string& kindToken,
                const std::string& start, int limit, std::uint64_t seed) {
  const hdg::DiversityGame game = hdg::parseInstance(slurp(instancePath));
  hdg::DeviationKind kind;
  if (kindToken == "ns") {
    kind = hdg::DeviationKind::NS;
  } else if (kindToken == "is") {
    kind = hdg::DeviationKind::IS;
  } else {
    throw hdg::ValidationError("unknown kind: " + kindToken);
  }
  const hdg::Partition startPartition = start == "random"
                                            ? randomStartPartition(game.n(), seed)
                                            : parsePartitionArgument(slurp(start));
  const hdg::DynamicsTrace trace = hdg::runDynamics(game, startPartition, kind, limit);
  emit(hdg::serializeDynamicsTrace(trace), "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hedonic diversity game toolkit"};
  app.require_subcommand(1);

  int jobs = 1;
  int bruteCap = hdg::kDefaultBruteForceCap;
  app.add_option("--jobs", jobs, "worker threads for exhaustive enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-brute-n", bruteCap, "agent cap for exhaustive enumeration")
      ->check(CLI::PositiveNumber);

  GenerateOptions generateOpt;
  CLI::App* generate = app.add_subcommand("generate", "write an instance document");
  generate
      ->add_option("--kind", generateOpt.kind, "homophilic, bakers-millers, example3 or random")
      ->required();
  generate->add_option("--red", generateOpt.red, "number of red agents");
  generate->add_option("--blue", generateOpt.blue, "number of blue agents");
  generate->add_option("--seed", generateOpt.seed, "seed for kind random");
  generate->add_option("--out", generateOpt.outPath, "output file (default stdout)");

  std::string checkConcept;
  std::string checkInstance;
  std::string checkPartition;
  CLI::App* check = app.add_subcommand("check", "verify stability of a partition");
  check->add_option("--concept", checkConcept, "core, nash or is")->required();
  check->add_option("--instance", checkInstance, "instance file, - for stdin")->required();
  check
      ->add_option("--partition", checkPartition,
                   "partition file, - for stdin; accepts a one-partition solve result")
      ->required();

  std::string solveMethod;
  std::string solveInstance;
  bool solveAll = false;
  CLI::App* solve = app.add_subcommand("solve", "compute stable partitions");
  solve->add_option("--method", solveMethod, "is, core-brute, nash-brute, is-brute, prop3 or prop4")
      ->required();
  solve->add_option("--instance", solveInstance, "instance file, - for stdin")->required();
  solve->add_flag("--all", solveAll, "report every stable partition, not just the first");

  std::string reduceAnon;
  bool reduceVerify = false;
  CLI::App* reduce = app.add_subcommand("reduce", "embed an anonymous game");
  reduce->add_option("--anon", reduceAnon, "anonymous game file, - for stdin")->required();
  reduce->add_flag("--verify", reduceVerify, "run both exhaustive core checks and compare");

  std::string dynInstance;
  std::string dynKind;
  std::string dynStart;
  int dynLimit = 0;
  std::uint64_t dynSeed = 0;
  CLI::App* dynamics = app.add_subcommand("dynamics", "run better-response dynamics");
  dynamics->add_option("--instance", dynInstance, "instance file, - for stdin")->required();
  dynamics->add_option("--kind", dynKind, "ns or is")->required();
  dynamics->add_option("--start", dynStart, "partition file or the word random")->required();
  dynamics->add_option("--limit", dynLimit, "maximum number of steps")->required();
  dynamics->add_option("--seed", dynSeed, "seed for --start random");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) return runGenerate(generateOpt);
    if (check->parsed()) return runCheck(checkConcept, checkInstance, checkPartition);
    if (solve->parsed()) return runSolve(solveMethod, solveInstance, solveAll, jobs, bruteCap);
    if (reduce->parsed()) return runReduce(reduceAnon, reduceVerify, jobs, bruteCap);
    if (dynamics->parsed()) return runDynamics(dynInstance, dynKind, dynStart, dynLimit, dynSeed);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const hdg::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hdg::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
