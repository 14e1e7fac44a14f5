#pragma once

#include <optional>
#include <vector>

#include "airslot/allocator.hpp"
#include "airslot/instance.hpp"
#include "airslot/types.hpp"

namespace airslot {

/// Optimal scaled welfare of the instance with one movement deleted; the
/// reference point of the marginal-contribution payment.
ScaledValue welfare_without(const Instance& instance, int movement);

/// Scaled payment before division by rho:
///   P_i = h_i - (sum_{k != i} w_k(A) - scaled_g * sum_j e_j(A)),
/// an exact integer. The quoted payment in INR is P_i / (scale * rho_i),
/// or 0 when rho_i = 0. Exactness tests compare the integers.
struct PaymentVector {
  std::vector<double> payment;             // p_i, INR
  std::vector<ScaledValue> scaled_payment; // P_i, pre-division
  std::vector<int> tiny_rho_movements;     // rho_i < 1e-9 but nonzero, flagged
};

/// Payment for one movement given the mechanism's optimal allocation.
/// Verifies that `allocation` attains the instance optimum (objective
/// mismatch throws std::invalid_argument).
double payment(const Instance& instance, const Allocation& allocation, int movement);

/// Payments for every movement: one full solve plus one sub-solve per
/// movement. Sub-solves are independent and run concurrently; the result
/// is identical to sequential execution.
PaymentVector all_payments(const Instance& instance);

struct UtilityReport {
  std::vector<double> utility;               // u_i = v_i(A) - p_i
  std::optional<double> mean_allocated;      // absent when nothing is allocated
  std::optional<double> class_mean[3];       // by CityClass, over allocated movements
};

UtilityReport utilities(const Instance& instance, const Allocation& allocation,
                        const std::vector<double>& payments);

/// Everything the mechanism reports for one instance.
struct MechanismResult {
  Allocation allocation;
  std::vector<double> payments;
  std::vector<ScaledValue> scaled_payments;
  std::vector<double> utilities;
  double social_utility = 0.0;
  ScaledValue scaled_social_utility = 0;
  std::vector<int> slot_congestion;
  std::optional<double> mean_utility_allocated;
  std::optional<double> class_mean_utility[3];
  std::vector<int> tiny_rho_movements;
};

/// Allocation, payments, utilities and congestion in one call.
MechanismResult run_mechanism(const Instance& instance);

}  // namespace airslot
