#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "airslot/instance.hpp"
#include "airslot/rng.hpp"

namespace airslot {

/// Seeded generator of small, tie-prone instances for the property
/// suites: m <= 6, n <= 4, C_j <= 3, lambda in {0, 0.2, 0.5, 1},
/// congestion cost zero, comparable to or dominating the weights.
/// Half the instances use computed opportunity factors; the other half
/// force exact dyadic factors (including zeros) to stress tie-breaking
/// and the zero-weight branch of the payment rule.
Instance random_small_instance(SplitMix64& rng);

/// One misreported valuation row drawn from the four manipulation
/// families: uniform rescale by c in [0,5], per-slot additive noise,
/// the zero report, and a swap of two slot values. `kind` cycles so any
/// run with >= 4 draws covers every family.
std::vector<double> sample_misreport(SplitMix64& rng, const Instance& instance, int movement,
                                     int kind);

struct PropertyViolation {
  std::string suite;
  std::string message;
  std::string instance_json;  // replayable counterexample
};

/// Suite identifiers for per-trial seed derivation. Trial t of a suite
/// draws its instance from SplitMix64(trial_seed(seed, suite, t)), so any
/// single trial can be regenerated in isolation.
inline constexpr std::uint64_t kOracleSuite = 1;
inline constexpr std::uint64_t kDsicSuite = 2;
inline constexpr std::uint64_t kGmonoSuite = 3;
inline constexpr std::uint64_t kMisreportStream = 100;

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t suite, std::uint64_t trial);

struct VerifyOptions {
  int oracle_trials = 500;
  int dsic_trials = 200;
  int gmono_trials = 100;
  int misreports = 50;
  std::uint64_t seed = 20240100;
  int max_violations = 5;  // stop collecting after this many
};

struct VerifyReport {
  int oracle_instances = 0;
  int dsic_comparisons = 0;
  int ir_checks = 0;
  int payment_sign_checks = 0;
  int gmono_instances = 0;
  std::vector<PropertyViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Runs every suite: exact oracle equivalence of the flow solver against
/// enumeration, truthfulness under sampled misreports, non-negative
/// utilities and payments (all compared in scaled integers), zero
/// payments for zero-weight movements, and social utility monotone
/// non-increasing over a growing congestion-cost grid. `progress`, when
/// given, receives one line per suite.
VerifyReport run_verification(const VerifyOptions& options, std::ostream* progress = nullptr);

/// JSON dump of an instance, sufficient to rebuild and replay it.
std::string dump_instance(const Instance& instance);

}  // namespace airslot
