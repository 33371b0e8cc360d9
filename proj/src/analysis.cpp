#include "lotsizer/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace lotsizer {

FeasibilityReport check_elsp_feasibility(const ElspInstance& instance) {
  instance.validate();
  const int m = instance.n_products();
  const double tau = instance.period_length_days;

  FeasibilityReport report;
  report.period_days = tau;
  report.utilization.resize(m);
  bool rates_ok = true;
  for (int p = 0; p < m; ++p) {
    report.utilization[p] = instance.demand_rate[p] / instance.production_rate[p];
    report.max_utilization = std::max(report.max_utilization, report.utilization[p]);
    if (report.utilization[p] > 1.0) rates_ok = false;
    const double net_first_cycle = instance.demand_rate[p] * tau - instance.initial_inventory_of(p);
    if (net_first_cycle > 0.0) report.demand_time_days += net_first_cycle / instance.production_rate[p];
    report.setup_time_days += instance.setup_time_hours[p] / instance.hours_per_day;
  }
  report.total_required_days = report.demand_time_days + report.setup_time_days;
  report.feasible = rates_ok && report.total_required_days <= tau + kQuantityTol;
  return report;
}

double safety_buffer(double z, double mean_demand, double sd_demand, double mean_lead,
                     double sd_lead) {
  if (z < 0.0 || mean_demand < 0.0 || sd_demand < 0.0 || mean_lead < 0.0 || sd_lead < 0.0)
    throw ValidationError("safety_buffer arguments must be nonnegative");
  return z * std::sqrt(mean_demand * mean_demand * sd_lead * sd_lead +
                       mean_lead * mean_lead * sd_demand * sd_demand);
}

double eoq(double mean_demand, double setup_cost, double holding_cost) {
  if (mean_demand < 0.0 || setup_cost < 0.0)
    throw ValidationError("eoq arguments must be nonnegative");
  if (holding_cost <= 0.0) throw ValidationError("eoq requires a positive holding cost");
  return std::sqrt(2.0 * mean_demand * setup_cost / holding_cost);
}

}  // namespace lotsizer
