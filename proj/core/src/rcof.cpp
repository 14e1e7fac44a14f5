#include "airslot/rcof.hpp"

#include <algorithm>
#include <stdexcept>

namespace airslot {

std::vector<double> compute_rcof(const std::vector<Movement>& movements,
                                 const std::vector<City>& cities, double delta,
                                 double default_alpha) {
  if (movements.empty()) throw std::invalid_argument("compute_rcof: empty movement set");
  if (!(delta > 0.0)) throw std::invalid_argument("compute_rcof: delta must be positive");

  const int m = static_cast<int>(movements.size());
  std::vector<double> spi(m), pop(m);
  for (int i = 0; i < m; ++i) {
    const Movement& mv = movements[i];
    if (mv.city_id < 0 || mv.city_id >= static_cast<int>(cities.size()))
      throw std::invalid_argument("compute_rcof: dangling city reference");
    spi[i] = cities[mv.city_id].spi;
    pop[i] = static_cast<double>(cities[mv.city_id].population);
  }

  // Max/min and the normalising sums range over the movements, so a city
  // flying several movements contributes once per movement.
  const double spi_max = *std::max_element(spi.begin(), spi.end());
  const double pop_min = *std::min_element(pop.begin(), pop.end());
  double spi_sum = 0.0, pop_sum = 0.0;
  for (int i = 0; i < m; ++i) {
    spi_sum += spi_max - spi[i];
    pop_sum += pop[i] - pop_min;
  }

  std::vector<double> rho(m);
  for (int i = 0; i < m; ++i) {
    double alpha = movements[i].alpha.value_or(default_alpha);
    double spi_term = (spi_max - spi[i] + delta) / (spi_sum + delta);
    double pop_term = (pop[i] - pop_min + delta) / (pop_sum + delta);
    rho[i] = alpha * spi_term + (1.0 - alpha) * pop_term;
    // Each numerator is one non-negative summand of its denominator, so
    // both terms lie in (0, 1]; clamp only guards float round-off.
    rho[i] = std::clamp(rho[i], 0.0, 1.0);
  }
  return rho;
}

}  // namespace airslot
