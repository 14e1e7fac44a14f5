#include "airslot/payments.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace airslot {

ScaledValue welfare_without(const Instance& instance, int movement) {
  SolveResult sub = solve_allocation_without(instance, movement);
  return scaled_objective_value(instance, sub.allocation);
}

namespace {

/// Welfare of everyone but `movement` inside allocation A, scaled:
/// sum_{k != i} w_k(A) - scaled_g * sum_j e_j(A).
ScaledValue others_welfare(const Instance& instance, const Allocation& allocation, int movement) {
  ScaledValue total = scaled_objective_value(instance, allocation);
  if (allocation.slot_of[movement])
    total -= instance.scaled_weights.at(movement, *allocation.slot_of[movement]);
  return total;
}

std::vector<ScaledValue> all_welfare_without(const Instance& instance) {
  const int m = instance.num_movements();
  std::vector<ScaledValue> h(m, 0);
  if (m == 0) return h;

  unsigned hw = std::thread::hardware_concurrency();
  int workers = static_cast<int>(hw == 0 ? 1 : hw);
  if (workers > m) workers = m;

  if (workers <= 1) {
    for (int i = 0; i < m; ++i) h[i] = welfare_without(instance, i);
    return h;
  }

  // Sub-solves are pure functions of the shared immutable instance, so
  // the assembled vector matches sequential execution no matter how the
  // movements are distributed over threads.
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    threads.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= m) return;
        try {
          h[i] = welfare_without(instance, i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
  return h;
}

PaymentVector payments_given(const Instance& instance, const Allocation& allocation,
                             const std::vector<ScaledValue>& h) {
  const int m = instance.num_movements();
  PaymentVector out;
  out.payment.resize(m, 0.0);
  out.scaled_payment.resize(m, 0);
  for (int i = 0; i < m; ++i) {
    ScaledValue p_scaled = h[i] - others_welfare(instance, allocation, i);
    out.scaled_payment[i] = p_scaled;
    double rho = instance.rcof[i];
    if (rho > 0.0) {
      out.payment[i] =
          static_cast<double>(p_scaled) / (static_cast<double>(instance.params.scale) * rho);
      if (rho < 1e-9) out.tiny_rho_movements.push_back(i);
    } else {
      out.payment[i] = 0.0;  // explicit zero branch of the payment rule
    }
  }
  return out;
}

}  // namespace

double payment(const Instance& instance, const Allocation& allocation, int movement) {
  if (movement < 0 || movement >= instance.num_movements())
    throw std::invalid_argument("invalid movement id");
  SolveResult full = solve_allocation(instance);
  if (scaled_objective_value(instance, allocation) !=
      scaled_objective_value(instance, full.allocation))
    throw std::invalid_argument("allocation is not optimal for the instance");

  if (instance.rcof[movement] <= 0.0) return 0.0;
  ScaledValue p_scaled =
      welfare_without(instance, movement) - others_welfare(instance, allocation, movement);
  return static_cast<double>(p_scaled) /
         (static_cast<double>(instance.params.scale) * instance.rcof[movement]);
}

PaymentVector all_payments(const Instance& instance) {
  SolveResult full = solve_allocation(instance);
  return payments_given(instance, full.allocation, all_welfare_without(instance));
}

UtilityReport utilities(const Instance& instance, const Allocation& allocation,
                        const std::vector<double>& payments) {
  const int m = instance.num_movements();
  if (allocation.num_movements() != m || payments.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("utilities: dimension mismatch");

  UtilityReport report;
  report.utility.resize(m, 0.0);
  double sum = 0.0;
  int count = 0;
  double class_sum[3] = {0, 0, 0};
  int class_count[3] = {0, 0, 0};
  for (int i = 0; i < m; ++i) {
    double value = allocation.slot_of[i] ? instance.valuations.at(i, *allocation.slot_of[i]) : 0.0;
    report.utility[i] = value - payments[i];
    if (allocation.slot_of[i]) {
      sum += report.utility[i];
      ++count;
      int cls = static_cast<int>(instance.cities[instance.movements[i].city_id].cls);
      class_sum[cls] += report.utility[i];
      ++class_count[cls];
    }
  }
  if (count > 0) report.mean_allocated = sum / count;
  for (int c = 0; c < 3; ++c)
    if (class_count[c] > 0) report.class_mean[c] = class_sum[c] / class_count[c];
  return report;
}

MechanismResult run_mechanism(const Instance& instance) {
  SolveResult full = solve_allocation(instance);
  PaymentVector pay = payments_given(instance, full.allocation, all_welfare_without(instance));
  UtilityReport util = utilities(instance, full.allocation, pay.payment);

  MechanismResult result;
  result.allocation = full.allocation;
  result.payments = std::move(pay.payment);
  result.scaled_payments = std::move(pay.scaled_payment);
  result.utilities = std::move(util.utility);
  result.scaled_social_utility = scaled_objective_value(instance, result.allocation);
  result.social_utility =
      static_cast<double>(result.scaled_social_utility) / static_cast<double>(instance.params.scale);
  result.slot_congestion.resize(instance.num_slots());
  for (int j = 0; j < instance.num_slots(); ++j)
    result.slot_congestion[j] = congestion_level(instance, result.allocation, j);
  result.mean_utility_allocated = util.mean_allocated;
  for (int c = 0; c < 3; ++c) result.class_mean_utility[c] = util.class_mean[c];
  result.tiny_rho_movements = std::move(pay.tiny_rho_movements);
  return result;
}

}  // namespace airslot
