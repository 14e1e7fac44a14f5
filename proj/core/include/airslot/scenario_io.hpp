#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "airslot/baselines.hpp"
#include "airslot/instance.hpp"
#include "airslot/payments.hpp"
#include "airslot/types.hpp"

namespace airslot {

/// One histogram bin: values drawn uniformly from [lower, upper] with
/// probability proportional to frequency.
struct HistogramBin {
  double lower = 0.0;
  double upper = 0.0;
  double frequency = 0.0;
};

/// Per-slot empirical valuation distribution.
struct ValuationHistogram {
  std::vector<std::vector<HistogramBin>> per_slot;
};

/// Paths of everything a scenario consists of. `valuations` and
/// `histograms` are alternatives; when both exist, explicit valuations win.
struct ScenarioFiles {
  std::filesystem::path slots;
  std::filesystem::path cities;
  std::filesystem::path movements;
  std::filesystem::path valuations;
  std::filesystem::path histograms;
  std::filesystem::path current;
  std::filesystem::path config;

  /// Conventional layout inside one directory.
  static ScenarioFiles in_dir(const std::filesystem::path& dir);
};

struct LoadedScenario {
  Instance instance;
  Allocation current;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
};

struct LoadResult {
  std::optional<LoadedScenario> scenario;
  std::vector<std::string> errors;

  bool ok() const { return scenario.has_value(); }
};

/// Parses and validates a scenario. Parse errors carry file and line;
/// validation errors are forwarded from validate_instance. Valuations
/// missing for a (movement, slot) pair default to 0 and are counted in
/// the warnings.
LoadResult load_scenario(const ScenarioFiles& files);

/// Draws v_ij from slot j's histogram: bin by relative frequency, then
/// uniform within the bin. Pure function of (histograms, m, n, seed).
ValuationMatrix sample_valuations(const ValuationHistogram& histograms, int m, int n,
                                  std::uint64_t seed);

struct SynthSpec {
  int num_movements = 0;
  int num_slots = 0;
  std::vector<int> capacities;  // one entry, broadcast, or one per slot
  int num_cities = 0;           // 0 = derived from num_movements
  double metro_fraction = 0.2;
  double capital_fraction = 0.3;
  MechanismParams params;
  std::uint64_t seed = 0;
};

/// In-memory scenario produced by the synthesiser; write_scenario turns
/// it into files, byte-identical for identical (spec, seed).
struct SynthScenario {
  std::vector<Slot> slots;
  std::vector<City> cities;
  std::vector<Movement> movements;
  ValuationHistogram histograms;
  Allocation current;
  MechanismParams params;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
};

SynthScenario synth_scenario(const SynthSpec& spec);

/// Writes slots.csv, cities.csv, movements.csv, histograms.csv,
/// current.csv and config.txt into `dir` (created if needed).
ScenarioFiles write_scenario(const SynthScenario& scenario, const std::filesystem::path& dir);

/// Writes allocation.json, payments.csv and metrics.json.
void write_results(const MechanismResult& result, const std::filesystem::path& out_dir);

/// Writes comparison.csv.
void write_comparison(const ComparisonReport& report, const std::filesystem::path& out_dir);

/// One sweep row per (g, method); written to sweep.csv.
struct SweepRow {
  double g = 0.0;
  std::string method;
  double social_utility = 0.0;
  std::optional<double> mean_payment;             // over allocated movements
  std::optional<double> mean_individual_utility;  // over allocated movements
  std::optional<double> class_utility[3];
};

void write_sweep(const std::vector<SweepRow>& rows, const std::filesystem::path& out_dir);

/// Round-trip readers for the result files.
Allocation read_allocation_json(const std::filesystem::path& file, int num_movements);
std::vector<double> read_payments_csv(const std::filesystem::path& file);

}  // namespace airslot
