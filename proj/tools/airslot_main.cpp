#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "airslot/allocator.hpp"
#include "airslot/baselines.hpp"
#include "airslot/payments.hpp"
#include "airslot/scenario_io.hpp"
#include "airslot/verify.hpp"

namespace fs = std::filesystem;
using namespace airslot;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPropertyViolation = 3;

struct ScenarioArgs {
  std::string scenario_dir;
  std::string config_file;

  ScenarioFiles files() const {
    ScenarioFiles f = ScenarioFiles::in_dir(scenario_dir);
    if (!config_file.empty()) f.config = config_file;
    return f;
  }
};

/// Loads or exits: validation and parse problems are usage errors.
LoadedScenario load_or_fail(const ScenarioArgs& args) {
  LoadResult result = load_scenario(args.files());
  if (!result.ok()) {
    for (const auto& e : result.errors) std::cerr << "error: " << e << "\n";
    std::exit(kExitUsage);
  }
  for (const auto& w : result.scenario->warnings) std::cerr << "warning: " << w << "\n";
  return std::move(*result.scenario);
}

std::optional<double> mean_over_allocated(const Allocation& allocation,
                                          const std::vector<double>& per_movement) {
  double sum = 0.0;
  int count = 0;
  for (int i = 0; i < allocation.num_movements(); ++i)
    if (allocation.slot_of[i]) {
      sum += per_movement[i];
      ++count;
    }
  if (count == 0) return std::nullopt;
  return sum / count;
}

int cmd_allocate(const ScenarioArgs& args, const std::string& out_dir) {
  LoadedScenario scenario = load_or_fail(args);
  MechanismResult result = run_mechanism(scenario.instance);
  write_results(result, out_dir);
  std::cout << "allocated " << result.allocation.assigned_count() << "/"
            << scenario.instance.num_movements() << " movements, social utility "
            << result.social_utility << "\n";
  return kExitOk;
}

int cmd_sweep(const ScenarioArgs& args, const std::vector<double>& g_values,
              const std::string& out_dir) {
  LoadedScenario scenario = load_or_fail(args);
  const Instance& instance = scenario.instance;
  const Allocation iata = displacement_minimizing_allocate(instance);
  const std::vector<double> no_payments(instance.num_movements(), 0.0);

  std::vector<SweepRow> rows;
  for (double g : g_values) {
    Instance at_g = instance.with_g(g);

    MechanismResult mech = run_mechanism(at_g);
    SweepRow row;
    row.g = g;
    row.method = "mechanism";
    row.social_utility = mech.social_utility;
    row.mean_payment = mean_over_allocated(mech.allocation, mech.payments);
    row.mean_individual_utility = mech.mean_utility_allocated;
    for (int c = 0; c < 3; ++c) row.class_utility[c] = mech.class_mean_utility[c];
    rows.push_back(row);

    auto baseline_row = [&](const std::string& method, const Allocation& allocation) {
      SweepRow b;
      b.g = g;
      b.method = method;
      b.social_utility = evaluate_fixed_allocation(at_g, allocation).social_utility;
      b.mean_payment = allocation.assigned_count() > 0 ? std::optional<double>(0.0) : std::nullopt;
      UtilityReport util = utilities(at_g, allocation, no_payments);
      b.mean_individual_utility = util.mean_allocated;
      for (int c = 0; c < 3; ++c) b.class_utility[c] = util.class_mean[c];
      return b;
    };
    rows.push_back(baseline_row("current", scenario.current));
    rows.push_back(baseline_row("iata", iata));
  }
  write_sweep(rows, out_dir);
  std::cout << "wrote " << rows.size() << " sweep rows for " << g_values.size() << " g values\n";
  return kExitOk;
}

int cmd_compare(const ScenarioArgs& args, const std::vector<double>& g_values,
                const std::string& out_dir, std::string name) {
  LoadedScenario scenario = load_or_fail(args);
  if (name.empty()) name = fs::path(args.scenario_dir).filename().string();
  ComparisonReport report = compare(scenario.instance, scenario.current, g_values, name);
  write_comparison(report, out_dir);
  std::cout << "wrote " << report.rows.size() << " comparison rows\n";
  return kExitOk;
}

int cmd_synth(const SynthSpec& spec, const std::string& out_dir) {
  SynthScenario scenario = synth_scenario(spec);
  for (const auto& w : scenario.warnings) std::cerr << "warning: " << w << "\n";
  write_scenario(scenario, out_dir);
  std::cout << "wrote scenario with " << spec.num_movements << " movements, " << spec.num_slots
            << " slots to " << out_dir << "\n";
  return kExitOk;
}

int cmd_verify(int trials, int misreports, std::uint64_t seed) {
  VerifyOptions options;
  options.oracle_trials = trials;
  options.dsic_trials = std::max(1, 2 * trials / 5);
  options.gmono_trials = std::max(1, trials / 5);
  options.misreports = misreports;
  options.seed = seed;

  VerifyReport report = run_verification(options, &std::cout);
  if (report.ok()) {
    std::cout << "all properties hold (seed " << seed << ")\n";
    return kExitOk;
  }
  std::cerr << report.violations.size() << " property violation(s), seed " << seed << ":\n";
  for (const auto& v : report.violations) {
    std::cerr << "[" << v.suite << "] " << v.message << "\n";
    std::cerr << "counterexample: " << v.instance_json << "\n";
  }
  return kExitPropertyViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congestion-aware airport slot allocation mechanism"};
  app.require_subcommand(1);

  ScenarioArgs scenario_args;
  std::string out_dir;
  std::vector<double> g_values;
  std::string compare_name;

  auto add_scenario_flags = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_args.scenario_dir, "Scenario directory")->required();
    cmd->add_option("--config", scenario_args.config_file,
                    "Config file (default: <scenario>/config.txt)");
  };

  CLI::App* allocate = app.add_subcommand("allocate", "Solve one scenario and write results");
  add_scenario_flags(allocate);
  allocate->add_option("--out", out_dir, "Output directory")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate all methods over a congestion-cost grid");
  add_scenario_flags(sweep);
  sweep->add_option("--g", g_values, "Comma-separated congestion costs")
      ->required()
      ->delimiter(',');
  sweep->add_option("--out", out_dir, "Output directory")->required();

  CLI::App* comparison = app.add_subcommand("compare", "Mechanism vs. current and IATA baselines");
  add_scenario_flags(comparison);
  comparison->add_option("--g", g_values, "Comma-separated congestion costs")
      ->required()
      ->delimiter(',');
  comparison->add_option("--out", out_dir, "Output directory")->required();
  comparison->add_option("--name", compare_name, "Scenario label in comparison.csv");

  SynthSpec spec;
  std::vector<int> capacities;
  CLI::App* synth = app.add_subcommand("synth", "Generate a seeded synthetic scenario");
  synth->add_option("--movements", spec.num_movements, "Number of movements")->required();
  synth->add_option("--slots", spec.num_slots, "Number of slots")->required();
  synth->add_option("--capacity", capacities, "Slot capacity (one value or one per slot)")
      ->delimiter(',');
  synth->add_option("--cities", spec.num_cities, "Number of cities (default: derived)");
  synth->add_option("--metro-frac", spec.metro_fraction, "Fraction of metro cities");
  synth->add_option("--capital-frac", spec.capital_fraction, "Fraction of capital cities");
  synth->add_option("--seed", spec.seed, "Generator seed");
  synth->add_option("--g", spec.params.g, "Congestion cost written to config.txt");
  synth->add_option("--lambda", spec.params.lambda, "Congestion-prone capacity fraction");
  synth->add_option("--out", out_dir, "Scenario directory to create")->required();

  int trials = 500;
  int misreports = 50;
  std::uint64_t seed = VerifyOptions{}.seed;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the property suites (enumeration equivalence, truthfulness, rationality, "
                "payment sign, congestion-cost monotonicity)");
  verify->add_option("--trials", trials,
                     "Enumeration-equivalence instances; truthfulness runs 2/5 of this, "
                     "monotonicity 1/5")
      ->check(CLI::PositiveNumber);
  verify->add_option("--misreports", misreports, "Misreports sampled per movement")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Suite seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*allocate) return cmd_allocate(scenario_args, out_dir);
    if (*sweep) return cmd_sweep(scenario_args, g_values, out_dir);
    if (*comparison) return cmd_compare(scenario_args, g_values, out_dir, compare_name);
    if (*synth) {
      spec.capacities = capacities;
      if (spec.num_movements < 0 || spec.num_slots < 0) {
        std::cerr << "error: dimensions must be non-negative\n";
        return kExitUsage;
      }
      return cmd_synth(spec, out_dir);
    }
    if (*verify) return cmd_verify(trials, misreports, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
