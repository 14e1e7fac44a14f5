#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace airslot {

/// All solver arithmetic runs on fixed-point weights of this type.
using ScaledValue = std::int64_t;

/// Connection class of a city, used for grouped utility reporting.
enum class CityClass { Metro, Capital, Remote };

std::string to_string(CityClass cls);
std::optional<CityClass> city_class_from_string(const std::string& s);

/// A runway time interval with a hard capacity and a congestion-free
/// threshold. Occupancy above `threshold` incurs the per-movement
/// congestion cost; occupancy above `capacity` is infeasible.
struct Slot {
  int slot_id = 0;
  int capacity = 0;
  int threshold = 0;  // floor((1 - lambda) * capacity), set by validation

  bool operator==(const Slot&) const = default;
};

struct City {
  int city_id = 0;
  std::string name;
  double spi = 0.0;             // social progress index, in [0, 100]
  std::int64_t population = 0;  // >= 1
  CityClass cls = CityClass::Remote;

  bool operator==(const City&) const = default;
};

/// A single landing or take-off request. `alpha` weights SPI against
/// population in the opportunity factor; when absent the instance-wide
/// default applies.
struct Movement {
  int movement_id = 0;
  std::string airline;
  int city_id = 0;
  int requested_slot = 0;
  std::optional<double> alpha;

  bool operator==(const Movement&) const = default;
};

template <typename T>
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c, T fill = T{}) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

  T& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  const T* row(int i) const { return data.data() + static_cast<std::size_t>(i) * cols; }

  bool operator==(const DenseMatrix&) const = default;
};

/// Reported valuations v_ij in INR, one row per movement, one column per slot.
using ValuationMatrix = DenseMatrix<double>;
using WeightMatrix = DenseMatrix<ScaledValue>;

struct MechanismParams {
  double lambda = 0.2;        // congestion-prone fraction of capacity
  double g = 0.0;             // congestion cost per excess movement, INR
  double delta = 1e-6;        // regulariser in the opportunity factor
  double default_alpha = 0.5; // fallback SPI/population weight
  std::int64_t scale = 1'000'000;  // fixed-point multiplier

  bool operator==(const MechanismParams&) const = default;
};

/// Per-movement assignment; at most one slot per movement.
struct Allocation {
  std::vector<std::optional<int>> slot_of;

  Allocation() = default;
  explicit Allocation(int num_movements) : slot_of(num_movements) {}

  int num_movements() const { return static_cast<int>(slot_of.size()); }

  int assigned_count() const {
    int k = 0;
    for (const auto& s : slot_of) k += s.has_value() ? 1 : 0;
    return k;
  }

  /// Movements per slot.
  std::vector<int> occupancy(int num_slots) const {
    std::vector<int> occ(num_slots, 0);
    for (const auto& s : slot_of)
      if (s) ++occ[*s];
    return occ;
  }

  bool operator==(const Allocation&) const = default;
};

}  // namespace airslot
