#pragma once

#include <optional>
#include <string>
#include <vector>

#include "airslot/types.hpp"

namespace airslot {

/// Un-validated problem description as parsed from scenario files or
/// assembled programmatically. Slot thresholds and all derived fields
/// are ignored on input and recomputed by validation.
struct RawInstance {
  std::vector<Slot> slots;
  std::vector<Movement> movements;
  std::vector<City> cities;
  ValuationMatrix valuations;
  MechanismParams params;

  /// When present, bypasses the opportunity-factor computation. Intended
  /// for experiments and for exercising the zero-weight branches of the
  /// payment rule, which cannot arise from the formula itself.
  std::optional<std::vector<double>> rcof_override;
};

/// Fully cross-checked, immutable-by-convention problem instance.
/// `scaled_weights[i][j] = round(scale * rcof[i] * valuations[i][j])` and
/// `scaled_g = round(scale * g)`; every downstream computation that feeds
/// an exactness test runs on these integers.
struct Instance {
  std::vector<Slot> slots;
  std::vector<Movement> movements;
  std::vector<City> cities;
  ValuationMatrix valuations;
  MechanismParams params;

  std::vector<double> rcof;
  WeightMatrix scaled_weights;
  ScaledValue scaled_g = 0;

  int num_movements() const { return static_cast<int>(movements.size()); }
  int num_slots() const { return static_cast<int>(slots.size()); }

  /// Copy with a different congestion cost. Weights, thresholds and the
  /// opportunity factors do not depend on g, so only scaled_g changes.
  Instance with_g(double new_g) const;

  /// Copy with movement i's reported valuations replaced. Rebuilds row i
  /// of scaled_weights; everything else (including rcof) is unchanged.
  Instance with_reported_valuations(int movement, const std::vector<double>& row) const;
};

struct ValidationResult {
  std::optional<Instance> instance;
  std::vector<std::string> errors;

  bool ok() const { return instance.has_value(); }
};

/// Cross-checks every declared invariant and, on success, returns an
/// Instance with thresholds floor((1-lambda)*C_j), opportunity factors,
/// and scaled integer weights populated. On failure returns one message
/// per violated invariant.
ValidationResult validate_instance(const RawInstance& raw);

/// floor((1-lambda)*capacity) with a tiny nudge so that products that are
/// integral in exact arithmetic do not round down due to binary floating
/// point (e.g. 0.7*10).
int congestion_free_threshold(double lambda, int capacity);

}  // namespace airslot
