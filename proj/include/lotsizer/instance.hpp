#ifndef LOTSIZER_INSTANCE_HPP
#define LOTSIZER_INSTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lotsizer/types.hpp"

namespace lotsizer {

enum class QuantityMode { kContinuous, kSingleBatch, kMultiBatch };

std::string to_string(QuantityMode mode);
std::optional<QuantityMode> quantity_mode_from_string(const std::string& s);

/// A period-indexed multi-product lot-sizing problem.
///
/// Demand is indexed (period, product). Setup cost may vary per period, so it
/// is stored as an n-by-m matrix; constructors that take a per-product vector
/// broadcast it across periods.
struct DlsInstance {
  int n_periods = 0;
  int n_products = 0;
  Matrix demand;                                      // n x m, >= 0
  std::vector<double> holding_cost;                   // m
  std::optional<std::vector<double>> shortage_cost;   // m; absent => shortages forbidden
  Matrix setup_cost;                                  // n x m
  std::optional<std::vector<double>> common_setup_cost;  // n
  std::optional<std::vector<double>> batch_size;         // m, > 0
  std::optional<double> production_limit;                // units per period
  int max_products_per_period = 0;                       // 0 => defaults to n_products
  std::optional<std::vector<double>> changeover_limit;   // n
  std::vector<double> initial_inventory;                 // m (empty => zeros)
  std::vector<double> initial_shortage;                  // m (empty => zeros)
  QuantityMode quantity_mode = QuantityMode::kContinuous;
  std::optional<std::vector<double>> min_quantity;       // m

  /// Effective per-period product cap (defaults to the product count).
  int product_cap() const { return max_products_per_period > 0 ? max_products_per_period : n_products; }

  double initial_inventory_of(int p) const {
    return initial_inventory.empty() ? 0.0 : initial_inventory[p];
  }
  double initial_shortage_of(int p) const {
    return initial_shortage.empty() ? 0.0 : initial_shortage[p];
  }
  bool has_common_setup() const;
  bool allows_shortage() const { return shortage_cost.has_value(); }

  /// Broadcasts a per-product setup cost vector across all periods.
  void set_setup_cost_per_product(const std::vector<double>& per_product);

  /// Throws ValidationError naming the first violated invariant.
  void validate() const;
};

/// Rate-based economic lot-scheduling problem data (constant daily demand).
struct ElspInstance {
  std::vector<double> setup_cost;        // currency per production period
  std::vector<double> piece_cost;        // currency per unit
  std::vector<double> production_rate;   // units per day
  std::vector<double> demand_rate;       // units per day
  std::vector<double> setup_time_hours;  // hours
  double period_length_days = 0.0;       // tau
  double horizon_days = 0.0;             // y, integer multiple of tau
  double holding_fraction = 0.10;        // f
  double hours_per_day = 8.0;
  double min_run_hours = 1.0;
  std::vector<double> initial_inventory;  // units (empty => zeros)

  int n_products() const { return static_cast<int>(setup_cost.size()); }
  int n_periods() const;  // horizon_days / period_length_days

  double initial_inventory_of(int p) const {
    return initial_inventory.empty() ? 0.0 : initial_inventory[p];
  }

  void validate() const;
};

/// Per-product parameters derived from an ELSP instance: per-period holding
/// cost, production caps and floors, and per-period demand.
struct ElspDerived {
  std::vector<double> holding_cost;      // f * piece_cost * tau
  std::vector<double> max_quantity;      // (tau - setup_days) * rate
  std::vector<double> min_quantity;      // min-run production
  std::vector<double> period_demand;     // demand_rate * tau
  std::vector<double> setup_time_days;   // setup_time_hours / hours_per_day
  int n_periods = 0;
};

ElspDerived elsp_derived_parameters(const ElspInstance& instance);

/// DLS view of an ELSP instance (continuous quantities, per-period demand
/// d*tau, derived holding costs). The shared-line time constraint is not
/// expressible here; it lives in the ELSP formulation itself.
DlsInstance elsp_to_dls(const ElspInstance& instance);

}  // namespace lotsizer

#endif  // LOTSIZER_INSTANCE_HPP
