#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "airslot/instance.hpp"
#include "airslot/rng.hpp"
#include "airslot/verify.hpp"

namespace airslot::test {

/// 1 movement, 1 slot, 1 city; a valid starting point tests mutate.
inline RawInstance single_movement_raw() {
  RawInstance raw;
  raw.slots = {{0, 1, 0}};
  raw.cities = {{0, "c0", 50.0, 1'000'000, CityClass::Remote}};
  raw.movements = {{0, "AL0", 0, 0, std::nullopt}};
  raw.valuations = ValuationMatrix(1, 1);
  raw.valuations.at(0, 0) = 100.0;
  raw.params.lambda = 0.2;
  raw.params.g = 30.0;
  return raw;
}

/// Instance with explicit opportunity factors; weights become exact
/// whenever rho * v * scale is integral.
inline Instance make_instance(int num_slots, const std::vector<int>& capacities, double lambda,
                              double g, const std::vector<double>& rho,
                              const std::vector<std::vector<double>>& valuations,
                              std::int64_t scale = 1'000'000) {
  RawInstance raw;
  const int m = static_cast<int>(rho.size());
  raw.slots.resize(num_slots);
  for (int j = 0; j < num_slots; ++j) raw.slots[j] = {j, capacities[j], 0};
  raw.cities = {{0, "c0", 50.0, 1'000'000, CityClass::Remote}};
  raw.movements.resize(m);
  for (int i = 0; i < m; ++i) raw.movements[i] = {i, "AL0", 0, 0, std::nullopt};
  raw.valuations = ValuationMatrix(m, num_slots);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < num_slots; ++j) raw.valuations.at(i, j) = valuations[i][j];
  raw.params.lambda = lambda;
  raw.params.g = g;
  raw.params.scale = scale;
  raw.rcof_override = rho;
  auto result = validate_instance(raw);
  if (!result.ok()) throw std::logic_error("test instance invalid: " + result.errors.front());
  return std::move(*result.instance);
}

/// Uniform-rho convenience: pass the weighted values directly.
inline Instance make_weighted_instance(int num_slots, const std::vector<int>& capacities,
                                       double lambda, double g,
                                       const std::vector<std::vector<double>>& weighted_values) {
  std::vector<double> rho(weighted_values.size(), 1.0);
  return make_instance(num_slots, capacities, lambda, g, rho, weighted_values);
}

inline Instance random_instance(SplitMix64& rng) { return random_small_instance(rng); }

inline bool any_error_contains(const std::vector<std::string>& errors, const std::string& text) {
  return std::any_of(errors.begin(), errors.end(),
                     [&](const std::string& e) { return e.find(text) != std::string::npos; });
}

}  // namespace airslot::test
