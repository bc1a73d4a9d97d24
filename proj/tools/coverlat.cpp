// coverlat: command-line front end for covering approximation spaces.
//
// Exit codes: 0 success, 1 input or size error, 2 property violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "coverlat/approximations.hpp"
#include "coverlat/errors.hpp"
#include "coverlat/hasse.hpp"
#include "coverlat/io.hpp"
#include "coverlat/verification.hpp"

namespace {

using namespace coverlat;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kViolation = 2;

void require_max_n(std::size_t max_n) {
  if (max_n > kHardScanCap) {
    throw Error(Errc::SizeLimit, "--max-n " + std::to_string(max_n) + " exceeds the hard cap of " +
                                     std::to_string(kHardScanCap));
  }
}

int cmd_analyze(const std::string& file, bool as_json) {
  const ApproxSpace space(io::read_covering_file(file));
  if (as_json) {
    std::cout << io::analysis_json(space).dump(2) << '\n';
  } else {
    std::cout << io::analysis_text(space);
  }
  return kOk;
}

int cmd_approx(const std::string& file, const std::string& set, const std::string& op) {
  const ApproxSpace space(io::read_covering_file(file));
  const Subset x = io::parse_subset(set, space.universe());
  Subset result = op == "fl" ? fl(space, x) : op == "fh" ? fh(space, x) : op == "xl" ? xl(space, x)
                                                                                     : xh(space, x);
  std::cout << io::format_subset(result, space.universe()) << '\n';
  return kOk;
}

int cmd_lattice(const std::string& file, const std::string& family_flag,
                const std::string& dot_path, bool as_json, std::size_t max_n) {
  require_max_n(max_n);
  const ApproxSpace space(io::read_covering_file(file));
  if (space.universe_size() > max_n) {
    throw Error(Errc::SizeLimit, "|U| = " + std::to_string(space.universe_size()) +
                                     " exceeds --max-n " + std::to_string(max_n));
  }
  const FamilyKind kind =
      family_flag == "P" ? FamilyKind::NeighborhoodFixedPoints : FamilyKind::CoveringFixedPoints;
  const FixedPointFamily family = build_family(space, kind);
  const ClassificationReport report = classify(family);

  if (!dot_path.empty()) {
    std::ofstream dot(dot_path, std::ios::binary);
    if (!dot) throw Error(Errc::ParseError, "cannot write '" + dot_path + "'");
    dot << io::to_dot(hasse(family), space.universe(), io::family_name(kind));
  }
  if (as_json) {
    std::cout << io::lattice_json(family, report).dump(2) << '\n';
  } else {
    std::cout << io::lattice_text(family, report);
  }
  return kOk;
}

struct VerifyArgs {
  std::string file;
  std::optional<std::size_t> exhaustive;
  std::optional<std::size_t> random;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  double density = 0.03;
  std::optional<std::size_t> max_n;
  bool json = false;
};

int cmd_verify(const VerifyArgs& args) {
  SuiteOptions suite;
  EnumerationOptions enumeration;
  if (args.max_n) {
    require_max_n(*args.max_n);
    suite.max_n = *args.max_n;
    enumeration.max_n = *args.max_n;
  }

  const int sources = !args.file.empty() + args.exhaustive.has_value() + args.random.has_value();
  if (sources != 1) {
    throw CLI::ValidationError("verify", "give exactly one of FILE, --exhaustive N or --random N");
  }

  VerificationSummary summary;
  std::optional<ApproxSpace> single;
  if (args.exhaustive) {
    summary = verify_exhaustive(*args.exhaustive, suite, enumeration);
  } else if (args.random) {
    summary = verify_random(*args.random, args.trials, args.density, args.seed, suite);
  } else {
    single.emplace(io::read_covering_file(args.file));
    const Covering coverings[] = {single->covering()};
    summary = verify_coverings(coverings, suite);
  }

  if (args.json) {
    auto out = io::summary_json(summary);
    if (single) {
      for (FamilyKind kind : {FamilyKind::NeighborhoodFixedPoints, FamilyKind::CoveringFixedPoints}) {
        const auto family = build_family(*single, kind);
        out["classification"][std::string(io::family_name(kind))] =
            io::lattice_json(family, classify(family))["classification"];
      }
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << io::summary_text(summary);
    if (single) {
      for (FamilyKind kind : {FamilyKind::NeighborhoodFixedPoints, FamilyKind::CoveringFixedPoints}) {
        const auto family = build_family(*single, kind);
        const auto r = classify(family);
        std::cout << io::family_name(kind) << ": distributive " << r.distributive << ", boolean "
                  << r.boolean << ", stone " << r.stone << ", dual stone " << r.dual_stone
                  << ", double stone " << r.double_stone << '\n';
      }
    }
  }
  return summary.ok() ? kOk : kViolation;
}

struct FindArgs {
  std::string predicate;
  std::optional<std::size_t> exhaustive;
  std::optional<std::size_t> random;
  std::optional<std::size_t> partitions;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  double density = 0.03;
  bool json = false;
};

int cmd_find(const FindArgs& args) {
  GeneratorConfig config;
  const int sources =
      args.exhaustive.has_value() + args.random.has_value() + args.partitions.has_value();
  if (sources != 1) {
    throw CLI::ValidationError("find", "give exactly one of --exhaustive, --random or --partitions");
  }
  if (args.exhaustive) {
    config.kind = GeneratorConfig::Kind::Exhaustive;
    config.n = *args.exhaustive;
  } else if (args.random) {
    config.kind = GeneratorConfig::Kind::Random;
    config.n = *args.random;
  } else {
    config.kind = GeneratorConfig::Kind::PartitionsOnly;
    config.n = *args.partitions;
  }
  config.trials = args.trials;
  config.seed = args.seed;
  config.density = args.density;

  const auto hit = find_counterexample(args.predicate, config);
  if (args.json) {
    io::json out = {{"predicate", args.predicate}, {"found", hit.has_value()}};
    if (hit) {
      out["covering_index"] = hit->covering_index;
      out["covering"] = io::covering_json(hit->covering);
      io::json w = io::json::array();
      for (const auto& s : hit->witness) w.push_back(io::subset_json(s, hit->covering.universe()));
      out["witness"] = std::move(w);
    }
    std::cout << out.dump(2) << '\n';
  } else if (hit) {
    const Universe& u = hit->covering.universe();
    std::cout << args.predicate << " fails on covering #" << hit->covering_index << ' '
              << io::format_family(hit->covering.blocks(), u) << " witness "
              << io::format_family(hit->witness, u) << '\n';
  } else {
    std::cout << args.predicate << " holds on every generated covering\n";
  }
  return hit ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering approximation spaces: neighborhoods, reducts, approximations and lattices"};
  app.require_subcommand(1);
  int status = kOk;
  std::cout << std::boolalpha;

  std::string file;
  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "neighborhoods, minimal descriptions and reduct");
  analyze->add_option("file", file, "covering file (JSON or text)")->required();
  analyze->add_flag("--json", as_json, "machine-readable output");
  analyze->callback([&] { status = cmd_analyze(file, as_json); });

  std::string set_spec;
  std::string op;
  auto* approx = app.add_subcommand("approx", "apply one approximation operator to a set");
  approx->add_option("file", file, "covering file")->required();
  approx->add_option("--set", set_spec, "set such as {1,4}; {} is the empty set")->required();
  approx->add_option("--op", op, "operator")
      ->required()
      ->check(CLI::IsMember({"fl", "fh", "xl", "xh"}));
  approx->callback([&] { status = cmd_approx(file, set_spec, op); });

  std::string family = "P";
  std::string dot_path;
  std::size_t lattice_max_n = 20;
  auto* lattice = app.add_subcommand("lattice", "fixed-point family, classification and Hasse diagram");
  lattice->add_option("file", file, "covering file")->required();
  lattice->add_option("--family", family, "P (neighborhood unions) or F (block unions)")
      ->check(CLI::IsMember({"P", "F"}));
  lattice->add_option("--dot", dot_path, "write the Hasse diagram in DOT format");
  lattice->add_flag("--json", as_json, "machine-readable output");
  lattice->add_option("--max-n", lattice_max_n, "largest accepted |U|");
  lattice->callback([&] { status = cmd_lattice(file, family, dot_path, as_json, lattice_max_n); });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the theorem suite");
  verify->add_option("file", verify_args.file, "covering file");
  verify->add_option("--exhaustive", verify_args.exhaustive, "every covering of {1..N}");
  verify->add_option("--random", verify_args.random, "random coverings of {1..N}");
  verify->add_option("--trials", verify_args.trials, "random coverings to draw");
  verify->add_option("--seed", verify_args.seed, "first seed; trial i uses seed + i");
  verify->add_option("--density", verify_args.density, "block inclusion probability");
  verify->add_option("--max-n", verify_args.max_n, "raise the size caps (at most 24)");
  verify->add_flag("--json", verify_args.json, "machine-readable output");
  verify->callback([&] { status = cmd_verify(verify_args); });

  FindArgs find_args;
  auto* find = app.add_subcommand("find", "search for a covering that violates a predicate");
  find->add_option("predicate", find_args.predicate, "e.g. P-stone, F-distributive")->required();
  find->add_option("--exhaustive", find_args.exhaustive, "every covering of {1..N}");
  find->add_option("--random", find_args.random, "random coverings of {1..N}");
  find->add_option("--partitions", find_args.partitions, "every partition of {1..N}");
  find->add_option("--trials", find_args.trials, "random coverings to draw");
  find->add_option("--seed", find_args.seed, "first seed");
  find->add_option("--density", find_args.density, "block inclusion probability");
  find->add_flag("--json", find_args.json, "machine-readable output");
  find->callback([&] { status = cmd_find(find_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return status;
}
