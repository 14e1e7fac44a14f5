#include "airslot/instance.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "airslot/rcof.hpp"

namespace airslot {

std::string to_string(CityClass cls) {
  switch (cls) {
    case CityClass::Metro: return "metro";
    case CityClass::Capital: return "capital";
    case CityClass::Remote: return "remote";
  }
  return "remote";
}

std::optional<CityClass> city_class_from_string(const std::string& s) {
  if (s == "metro") return CityClass::Metro;
  if (s == "capital") return CityClass::Capital;
  if (s == "remote") return CityClass::Remote;
  return std::nullopt;
}

int congestion_free_threshold(double lambda, int capacity) {
  int t = static_cast<int>(std::floor((1.0 - lambda) * capacity + 1e-9));
  if (t < 0) t = 0;
  if (t > capacity) t = capacity;
  return t;
}

namespace {

ScaledValue round_scaled(double x) { return static_cast<ScaledValue>(std::llround(x)); }

}  // namespace

ValidationResult validate_instance(const RawInstance& raw) {
  std::vector<std::string> errors;
  std::ostringstream msg;
  auto fail = [&](const std::ostringstream& m) { errors.push_back(m.str()); };

  const int m = static_cast<int>(raw.movements.size());
  const int n = static_cast<int>(raw.slots.size());

  const auto& p = raw.params;
  if (!(p.lambda >= 0.0 && p.lambda <= 1.0) || !std::isfinite(p.lambda)) {
    std::ostringstream e;
    e << "lambda outside [0,1]: " << p.lambda;
    fail(e);
  }
  if (!(p.g >= 0.0) || !std::isfinite(p.g)) {
    std::ostringstream e;
    e << "congestion cost g must be non-negative and finite: " << p.g;
    fail(e);
  }
  if (!(p.delta > 0.0) || !std::isfinite(p.delta)) {
    std::ostringstream e;
    e << "delta must be positive: " << p.delta;
    fail(e);
  }
  if (!(p.default_alpha >= 0.0 && p.default_alpha <= 1.0)) {
    std::ostringstream e;
    e << "default_alpha outside [0,1]: " << p.default_alpha;
    fail(e);
  }
  if (p.scale < 1) {
    std::ostringstream e;
    e << "scale must be a positive integer: " << p.scale;
    fail(e);
  }

  for (int j = 0; j < n; ++j) {
    const Slot& s = raw.slots[j];
    if (s.slot_id != j) {
      std::ostringstream e;
      e << "slot ids must be dense 0-based in file order: expected " << j << ", got " << s.slot_id;
      fail(e);
    }
    if (s.capacity < 1) {
      std::ostringstream e;
      e << "slot " << j << ": capacity must be >= 1, got " << s.capacity;
      fail(e);
    }
  }

  for (std::size_t c = 0; c < raw.cities.size(); ++c) {
    const City& city = raw.cities[c];
    if (city.city_id != static_cast<int>(c)) {
      std::ostringstream e;
      e << "city ids must be dense 0-based in file order: expected " << c << ", got " << city.city_id;
      fail(e);
    }
    if (!std::isfinite(city.spi)) {
      std::ostringstream e;
      e << "city " << c << ": spi must be finite";
      fail(e);
    }
    if (city.population < 1) {
      std::ostringstream e;
      e << "city " << c << ": population must be >= 1, got " << city.population;
      fail(e);
    }
  }

  for (int i = 0; i < m; ++i) {
    const Movement& mv = raw.movements[i];
    if (mv.movement_id != i) {
      std::ostringstream e;
      e << "movement ids must be dense 0-based in file order: expected " << i << ", got "
        << mv.movement_id;
      fail(e);
    }
    if (mv.city_id < 0 || mv.city_id >= static_cast<int>(raw.cities.size())) {
      std::ostringstream e;
      e << "movement " << i << ": dangling city reference " << mv.city_id;
      fail(e);
    }
    if (mv.requested_slot < 0 || mv.requested_slot >= n) {
      std::ostringstream e;
      e << "movement " << i << ": requested slot " << mv.requested_slot << " is not a valid slot id";
      fail(e);
    }
    if (mv.alpha && !(*mv.alpha >= 0.0 && *mv.alpha <= 1.0)) {
      std::ostringstream e;
      e << "movement " << i << ": alpha outside [0,1]: " << *mv.alpha;
      fail(e);
    }
  }

  if (raw.valuations.rows != m || raw.valuations.cols != n) {
    std::ostringstream e;
    e << "valuation matrix dimension mismatch: got " << raw.valuations.rows << "x"
      << raw.valuations.cols << ", expected " << m << "x" << n;
    fail(e);
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        double v = raw.valuations.at(i, j);
        if (!std::isfinite(v)) {
          std::ostringstream e;
          e << "non-finite valuation at (" << i << "," << j << ")";
          fail(e);
        } else if (v < 0.0) {
          std::ostringstream e;
          e << "negative valuation at (" << i << "," << j << ")";
          fail(e);
        }
      }
  }

  if (raw.rcof_override) {
    if (raw.rcof_override->size() != static_cast<std::size_t>(m)) {
      std::ostringstream e;
      e << "rcof override length " << raw.rcof_override->size() << " does not match " << m
        << " movements";
      fail(e);
    } else {
      for (int i = 0; i < m; ++i) {
        double r = (*raw.rcof_override)[i];
        if (!(r >= 0.0 && r <= 1.0)) {
          std::ostringstream e;
          e << "rcof override for movement " << i << " outside [0,1]: " << r;
          fail(e);
        }
      }
    }
  }

  if (!errors.empty()) return {std::nullopt, std::move(errors)};

  Instance inst;
  inst.slots = raw.slots;
  inst.movements = raw.movements;
  inst.cities = raw.cities;
  inst.valuations = raw.valuations;
  inst.params = raw.params;

  for (Slot& s : inst.slots) s.threshold = congestion_free_threshold(p.lambda, s.capacity);

  if (raw.rcof_override) {
    inst.rcof = *raw.rcof_override;
  } else if (m > 0) {
    inst.rcof = compute_rcof(inst.movements, inst.cities, p.delta, p.default_alpha);
  }

  inst.scaled_weights = WeightMatrix(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      inst.scaled_weights.at(i, j) =
          round_scaled(static_cast<double>(p.scale) * inst.rcof[i] * inst.valuations.at(i, j));
  inst.scaled_g = round_scaled(static_cast<double>(p.scale) * p.g);

  return {std::move(inst), {}};
}

Instance Instance::with_g(double new_g) const {
  if (!(new_g >= 0.0) || !std::isfinite(new_g))
    throw std::invalid_argument("congestion cost g must be non-negative and finite");
  Instance copy = *this;
  copy.params.g = new_g;
  copy.scaled_g = static_cast<ScaledValue>(std::llround(static_cast<double>(params.scale) * new_g));
  return copy;
}

Instance Instance::with_reported_valuations(int movement, const std::vector<double>& row) const {
  if (movement < 0 || movement >= num_movements())
    throw std::invalid_argument("invalid movement id");
  if (row.size() != static_cast<std::size_t>(num_slots()))
    throw std::invalid_argument("reported valuation row has wrong length");
  Instance copy = *this;
  for (int j = 0; j < num_slots(); ++j) {
    double v = row[j];
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("reported valuations must be non-negative and finite");
    copy.valuations.at(movement, j) = v;
    copy.scaled_weights.at(movement, j) =
        static_cast<ScaledValue>(std::llround(static_cast<double>(params.scale) * rcof[movement] * v));
  }
  return copy;
}

}  // namespace airslot
