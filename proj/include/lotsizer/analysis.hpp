#ifndef LOTSIZER_ANALYSIS_HPP
#define LOTSIZER_ANALYSIS_HPP

#include <vector>

#include "lotsizer/instance.hpp"

namespace lotsizer {

/// First-cycle capacity check for an ELSP instance: time to produce the first
/// period's net demand plus setup time must fit in one period.
struct FeasibilityReport {
  std::vector<double> utilization;  // d_p / b_p per product
  double max_utilization = 0.0;
  double demand_time_days = 0.0;
  double setup_time_days = 0.0;
  double total_required_days = 0.0;
  double period_days = 0.0;
  bool feasible = false;
};

FeasibilityReport check_elsp_feasibility(const ElspInstance& instance);

/// Safety buffer z * sqrt(d^2 sd_lead^2 + lead^2 sd_demand^2).
double safety_buffer(double z, double mean_demand, double sd_demand, double mean_lead,
                     double sd_lead);

/// Economic order quantity sqrt(2 d co / ch).
double eoq(double mean_demand, double setup_cost, double holding_cost);

}  // namespace lotsizer

#endif  // LOTSIZER_ANALYSIS_HPP
