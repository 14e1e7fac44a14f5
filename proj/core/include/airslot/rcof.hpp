#pragma once

#include <vector>

#include "airslot/types.hpp"

namespace airslot {

/// Remote city opportunity factor for every movement:
///
///   rho_i = alpha_i * (spi_max - spi_i + delta) / (sum_M (spi_max - spi_k) + delta)
///         + (1 - alpha_i) * (pop_i - pop_min + delta) / (sum_M (pop_k - pop_min) + delta)
///
/// The max, min and both sums range over the multiset of the movements'
/// cities (a city flying k movements contributes k terms). Values lie in
/// [0, 1]; lower SPI and larger population weakly increase rho.
///
/// Throws std::invalid_argument on an empty movement set, a dangling city
/// reference, or delta <= 0.
std::vector<double> compute_rcof(const std::vector<Movement>& movements,
                                 const std::vector<City>& cities, double delta,
                                 double default_alpha);

}  // namespace airslot
