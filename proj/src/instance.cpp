#include "lotsizer/instance.hpp"

#include <cmath>
#include <sstream>

namespace lotsizer {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

void require_size(const std::vector<double>& v, size_t n, const std::string& name) {
  if (v.size() != n) {
    std::ostringstream os;
    os << name << " has length " << v.size() << ", expected " << n;
    throw ValidationError(os.str());
  }
}

void require_nonneg(const std::vector<double>& v, const std::string& name) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0.0) {
      std::ostringstream os;
      os << name << "[" << i << "] is negative (" << v[i] << ")";
      throw ValidationError(os.str());
    }
  }
}

}  // namespace

std::string to_string(QuantityMode mode) {
  switch (mode) {
    case QuantityMode::kContinuous: return "continuous";
    case QuantityMode::kSingleBatch: return "single-batch";
    case QuantityMode::kMultiBatch: return "multi-batch";
  }
  return "continuous";
}

std::optional<QuantityMode> quantity_mode_from_string(const std::string& s) {
  if (s == "continuous") return QuantityMode::kContinuous;
  if (s == "single-batch") return QuantityMode::kSingleBatch;
  if (s == "multi-batch") return QuantityMode::kMultiBatch;
  return std::nullopt;
}

bool DlsInstance::has_common_setup() const {
  if (!common_setup_cost) return false;
  for (double c : *common_setup_cost)
    if (c != 0.0) return true;
  return false;
}

void DlsInstance::set_setup_cost_per_product(const std::vector<double>& per_product) {
  setup_cost = Matrix(n_periods, n_products);
  for (int t = 0; t < n_periods; ++t)
    for (int p = 0; p < n_products; ++p) setup_cost(t, p) = per_product[p];
}

void DlsInstance::validate() const {
  require(n_periods >= 1, "n_periods must be >= 1");
  require(n_products >= 1, "n_products must be >= 1");
  const size_t m = static_cast<size_t>(n_products);
  require(demand.rows() == n_periods && demand.cols() == n_products,
          "demand matrix shape does not match n_periods x n_products");
  for (int t = 0; t < n_periods; ++t)
    for (int p = 0; p < n_products; ++p)
      require(demand(t, p) >= 0.0, "demand must be nonnegative");
  require_size(holding_cost, m, "holding_cost");
  require_nonneg(holding_cost, "holding_cost");
  if (shortage_cost) {
    require_size(*shortage_cost, m, "shortage_cost");
    require_nonneg(*shortage_cost, "shortage_cost");
  }
  require(setup_cost.rows() == n_periods && setup_cost.cols() == n_products,
          "setup_cost matrix shape does not match n_periods x n_products");
  for (int t = 0; t < n_periods; ++t)
    for (int p = 0; p < n_products; ++p)
      require(setup_cost(t, p) >= 0.0, "setup_cost must be nonnegative");
  if (common_setup_cost) {
    require_size(*common_setup_cost, static_cast<size_t>(n_periods), "common_setup_cost");
    require_nonneg(*common_setup_cost, "common_setup_cost");
  }
  if (batch_size) {
    require_size(*batch_size, m, "batch_size");
    for (double b : *batch_size) require(b > 0.0, "batch_size must be positive");
  }
  if (production_limit) require(*production_limit >= 0.0, "production_limit must be nonnegative");
  require(max_products_per_period >= 0, "max_products_per_period must be >= 1 when given");
  if (changeover_limit) {
    require_size(*changeover_limit, static_cast<size_t>(n_periods), "changeover_limit");
    require_nonneg(*changeover_limit, "changeover_limit");
  }
  if (!initial_inventory.empty()) {
    require_size(initial_inventory, m, "initial_inventory");
    require_nonneg(initial_inventory, "initial_inventory");
  }
  if (!initial_shortage.empty()) {
    require_size(initial_shortage, m, "initial_shortage");
    require_nonneg(initial_shortage, "initial_shortage");
  }
  for (int p = 0; p < n_products; ++p)
    require(!(initial_inventory_of(p) > 0.0 && initial_shortage_of(p) > 0.0),
            "initial inventory and shortage cannot both be positive for one product");
  if (quantity_mode != QuantityMode::kContinuous)
    require(batch_size.has_value(), "batch mode requires batch_size");
  if (min_quantity) {
    require_size(*min_quantity, m, "min_quantity");
    require_nonneg(*min_quantity, "min_quantity");
    if (production_limit)
      for (double c : *min_quantity)
        require(c <= *production_limit, "min_quantity exceeds production_limit");
  }
}

int ElspInstance::n_periods() const {
  return static_cast<int>(std::lround(horizon_days / period_length_days));
}

void ElspInstance::validate() const {
  const size_t m = setup_cost.size();
  require(m >= 1, "at least one product required");
  require_size(piece_cost, m, "piece_cost");
  require_size(production_rate, m, "production_rate");
  require_size(demand_rate, m, "demand_rate");
  require_size(setup_time_hours, m, "setup_time_hours");
  require_nonneg(setup_cost, "setup_cost");
  require_nonneg(piece_cost, "piece_cost");
  require_nonneg(demand_rate, "demand_rate");
  require_nonneg(setup_time_hours, "setup_time_hours");
  for (double b : production_rate) require(b > 0.0, "production_rate must be positive");
  require(period_length_days > 0.0, "period_length_days must be positive");
  require(horizon_days > 0.0, "horizon_days must be positive");
  const double ratio = horizon_days / period_length_days;
  require(std::abs(ratio - std::lround(ratio)) < 1e-9,
          "horizon_days must be an integer multiple of period_length_days");
  require(holding_fraction >= 0.0, "holding_fraction must be nonnegative");
  require(hours_per_day > 0.0, "hours_per_day must be positive");
  require(min_run_hours >= 0.0, "min_run_hours must be nonnegative");
  if (!initial_inventory.empty()) {
    require_size(initial_inventory, m, "initial_inventory");
    require_nonneg(initial_inventory, "initial_inventory");
  }
}

ElspDerived elsp_derived_parameters(const ElspInstance& instance) {
  instance.validate();
  const int m = instance.n_products();
  const double tau = instance.period_length_days;
  ElspDerived out;
  out.n_periods = instance.n_periods();
  out.holding_cost.resize(m);
  out.max_quantity.resize(m);
  out.min_quantity.resize(m);
  out.period_demand.resize(m);
  out.setup_time_days.resize(m);
  for (int p = 0; p < m; ++p) {
    const double setup_days = instance.setup_time_hours[p] / instance.hours_per_day;
    if (setup_days >= tau) {
      std::ostringstream os;
      os << "product " << (p + 1) << ": setup time (" << setup_days
         << " days) leaves no producible time in a period of " << tau << " days";
      throw ValidationError(os.str());
    }
    out.setup_time_days[p] = setup_days;
    out.holding_cost[p] = instance.holding_fraction * instance.piece_cost[p] * tau;
    out.max_quantity[p] = (tau - setup_days) * instance.production_rate[p];
    out.min_quantity[p] =
        (instance.min_run_hours / instance.hours_per_day) * instance.production_rate[p];
    out.period_demand[p] = instance.demand_rate[p] * tau;
  }
  return out;
}

DlsInstance elsp_to_dls(const ElspInstance& instance) {
  const ElspDerived derived = elsp_derived_parameters(instance);
  const int n = derived.n_periods;
  const int m = instance.n_products();
  DlsInstance dls;
  dls.n_periods = n;
  dls.n_products = m;
  dls.demand = Matrix(n, m);
  for (int t = 0; t < n; ++t)
    for (int p = 0; p < m; ++p) dls.demand(t, p) = derived.period_demand[p];
  dls.holding_cost = derived.holding_cost;
  dls.set_setup_cost_per_product(instance.setup_cost);
  dls.initial_inventory = instance.initial_inventory;
  dls.min_quantity = derived.min_quantity;
  dls.validate();
  return dls;
}

}  // namespace lotsizer
