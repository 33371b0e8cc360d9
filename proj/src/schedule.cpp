#include "lotsizer/schedule.hpp"

#include <cmath>
#include <sstream>

namespace lotsizer {

namespace {

bool is_one(double v) { return std::abs(v - 1.0) <= kQuantityTol; }
bool is_zero(double v) { return std::abs(v) <= kQuantityTol; }

void require_shape(const Matrix& m, int rows, int cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    std::ostringstream os;
    os << name << " has shape " << m.rows() << "x" << m.cols() << ", expected " << rows << "x"
       << cols;
    throw ValidationError(os.str());
  }
}

}  // namespace

std::string Violation::describe() const {
  std::ostringstream os;
  os << constraint;
  if (period >= 0) os << " at t" << (period + 1);
  if (product >= 0) os << " p" << (product + 1);
  os << ": lhs " << format_number(lhs) << " vs rhs " << format_number(rhs);
  return os.str();
}

void propagate_inventory(const DlsInstance& instance, const Matrix& quantities,
                         Matrix& inventory_out, Matrix& shortage_out) {
  const int n = instance.n_periods;
  const int m = instance.n_products;
  require_shape(quantities, n, m, "quantities");
  inventory_out = Matrix(n, m);
  shortage_out = Matrix(n, m);
  for (int p = 0; p < m; ++p) {
    double net = instance.initial_inventory_of(p) - instance.initial_shortage_of(p);
    for (int t = 0; t < n; ++t) {
      if (quantities(t, p) < -kQuantityTol) throw ValidationError("quantities must be nonnegative");
      net += quantities(t, p) - instance.demand(t, p);
      inventory_out(t, p) = net > 0.0 ? net : 0.0;
      shortage_out(t, p) = net < 0.0 ? -net : 0.0;
    }
  }
}

CostBreakdown evaluate_cost(const DlsInstance& instance, const Schedule& schedule) {
  const int n = instance.n_periods;
  const int m = instance.n_products;
  require_shape(schedule.inventory, n, m, "inventory");
  require_shape(schedule.shortage, n, m, "shortage");
  require_shape(schedule.changeover, n, m, "changeover");

  CostBreakdown costs;
  for (int p = 0; p < m; ++p) {
    double inv_sum = 0.0, short_sum = 0.0;
    for (int t = 0; t < n; ++t) {
      inv_sum += schedule.inventory(t, p);
      short_sum += schedule.shortage(t, p);
      costs.setup += instance.setup_cost(t, p) * schedule.changeover(t, p);
    }
    if (short_sum > kQuantityTol && !instance.allows_shortage()) {
      std::ostringstream os;
      os << "schedule has shortage for product " << (p + 1)
         << " but the instance forbids shortages";
      throw InfeasibleScheduleError(os.str());
    }
    costs.holding += instance.holding_cost[p] * inv_sum;
    if (instance.shortage_cost) costs.shortage += (*instance.shortage_cost)[p] * short_sum;
  }
  if (instance.common_setup_cost) {
    for (int t = 0; t < n; ++t) {
      bool any = false;
      for (int p = 0; p < m; ++p)
        if (schedule.changeover(t, p) > 0.5) any = true;
      if (any) costs.common_setup += (*instance.common_setup_cost)[t];
    }
  }
  costs.total = costs.holding + costs.shortage + costs.setup + costs.common_setup;
  return costs;
}

std::vector<Violation> check_schedule(const DlsInstance& instance, const Schedule& schedule) {
  const int n = instance.n_periods;
  const int m = instance.n_products;
  std::vector<Violation> out;
  require_shape(schedule.quantities, n, m, "quantities");
  require_shape(schedule.produce, n, m, "produce");
  require_shape(schedule.changeover, n, m, "changeover");
  require_shape(schedule.inventory, n, m, "inventory");
  require_shape(schedule.shortage, n, m, "shortage");

  for (int t = 0; t < n; ++t) {
    for (int p = 0; p < m; ++p) {
      const double q = schedule.quantities(t, p);
      const double x = schedule.produce(t, p);
      if (q < -kQuantityTol) out.push_back({"nonnegative_quantity", t, p, q, 0.0});
      if (schedule.inventory(t, p) < -kQuantityTol)
        out.push_back({"nonnegative_inventory", t, p, schedule.inventory(t, p), 0.0});
      if (schedule.shortage(t, p) < -kQuantityTol)
        out.push_back({"nonnegative_shortage", t, p, schedule.shortage(t, p), 0.0});
      if (!instance.allows_shortage() && schedule.shortage(t, p) > kQuantityTol)
        out.push_back({"shortage_forbidden", t, p, schedule.shortage(t, p), 0.0});

      // balance: (I_{t-1} - S_{t-1}) + q - d = I - S
      const double prev_net = t == 0 ? instance.initial_inventory_of(p) - instance.initial_shortage_of(p)
                                     : schedule.inventory(t - 1, p) - schedule.shortage(t - 1, p);
      const double lhs = prev_net + q - instance.demand(t, p);
      const double rhs = schedule.inventory(t, p) - schedule.shortage(t, p);
      if (std::abs(lhs - rhs) > kQuantityTol)
        out.push_back({"inventory_balance", t, p, lhs, rhs});

      // batch coupling and produce-flag linkage
      if (instance.quantity_mode == QuantityMode::kSingleBatch) {
        const double target = x * (*instance.batch_size)[p];
        if (!is_zero(x) && !is_one(x)) out.push_back({"binary_produce_flag", t, p, x, 0.0});
        if (std::abs(q - target) > kQuantityTol) out.push_back({"batch_size", t, p, q, target});
      } else if (instance.quantity_mode == QuantityMode::kMultiBatch) {
        const double batches = q / (*instance.batch_size)[p];
        if (std::abs(batches - std::round(batches)) > kQuantityTol)
          out.push_back({"batch_multiple", t, p, q, std::round(batches) * (*instance.batch_size)[p]});
        const bool produced = q > kQuantityTol;
        if (produced != (x > 0.5)) out.push_back({"produce_flag", t, p, x, produced ? 1.0 : 0.0});
      } else {
        const bool produced = q > kQuantityTol;
        if (produced != (x > 0.5)) out.push_back({"produce_flag", t, p, x, produced ? 1.0 : 0.0});
      }

      // changeover truth table: omega = x_t and not x_{t-1} (first period: omega = x)
      const bool x_now = x > 0.5;
      const bool x_prev = t > 0 && schedule.produce(t - 1, p) > 0.5;
      const double expected = (x_now && !x_prev) ? 1.0 : 0.0;
      if (std::abs(schedule.changeover(t, p) - expected) > kQuantityTol)
        out.push_back({"changeover_logic", t, p, schedule.changeover(t, p), expected});
    }

    // per-period aggregates
    double x_sum = 0.0, q_sum = 0.0, w_sum = 0.0;
    for (int p = 0; p < m; ++p) {
      x_sum += schedule.produce(t, p) > 0.5 ? 1.0 : 0.0;
      q_sum += schedule.quantities(t, p);
      w_sum += schedule.changeover(t, p) > 0.5 ? 1.0 : 0.0;
    }
    const bool exactly_one =
        instance.product_cap() == 1 && instance.quantity_mode == QuantityMode::kSingleBatch;
    if (exactly_one) {
      if (x_sum != 1.0) out.push_back({"one_product_per_period", t, -1, x_sum, 1.0});
    } else if (x_sum > instance.product_cap() + kQuantityTol) {
      out.push_back({"max_products_per_period", t, -1, x_sum,
                     static_cast<double>(instance.product_cap())});
    }
    if (instance.production_limit && q_sum > *instance.production_limit + kQuantityTol)
      out.push_back({"production_limit", t, -1, q_sum, *instance.production_limit});
    if (instance.changeover_limit && w_sum > (*instance.changeover_limit)[t] + kQuantityTol)
      out.push_back({"changeover_limit", t, -1, w_sum, (*instance.changeover_limit)[t]});
  }
  return out;
}

std::vector<Violation> check_elsp_schedule(const ElspInstance& instance,
                                           const Schedule& schedule) {
  const ElspDerived derived = elsp_derived_parameters(instance);
  const int n = derived.n_periods;
  const int m = instance.n_products();
  std::vector<Violation> out;
  require_shape(schedule.quantities, n, m, "quantities");
  require_shape(schedule.produce, n, m, "produce");
  require_shape(schedule.changeover, n, m, "changeover");

  const double tau = instance.period_length_days;
  for (int t = 0; t < n; ++t) {
    double time_used = 0.0;
    for (int p = 0; p < m; ++p) {
      const double q = schedule.quantities(t, p);
      const double days = schedule.produce(t, p);
      const double w = schedule.changeover(t, p);
      if (q < -kQuantityTol) out.push_back({"nonnegative_quantity", t, p, q, 0.0});
      if (std::abs(days * instance.production_rate[p] - q) > kQuantityTol * instance.production_rate[p])
        out.push_back({"production_rate", t, p, days * instance.production_rate[p], q});
      if (!is_zero(w) && !is_one(w)) out.push_back({"binary_changeover", t, p, w, 0.0});
      if (q > derived.max_quantity[p] + kQuantityTol)
        out.push_back({"max_quantity", t, p, q, derived.max_quantity[p]});
      if (w > 0.5 && q < derived.min_quantity[p] - kQuantityTol)
        out.push_back({"min_quantity", t, p, q, derived.min_quantity[p]});
      if (w < 0.5 && q > kQuantityTol) out.push_back({"setup_required", t, p, q, 0.0});
      time_used += days + (w > 0.5 ? derived.setup_time_days[p] : 0.0);
    }
    if (time_used > tau + kQuantityTol) out.push_back({"max_time", t, -1, time_used, tau});
  }

  // balance with per-period demand d*tau; shortages are not allowed
  for (int p = 0; p < m; ++p) {
    double net = instance.initial_inventory_of(p);
    for (int t = 0; t < n; ++t) {
      net += schedule.quantities(t, p) - derived.period_demand[p];
      if (net < -kQuantityTol) {
        out.push_back({"demand_coverage", t, p, net, 0.0});
        break;
      }
      if (std::abs(schedule.inventory(t, p) - net) > kQuantityTol)
        out.push_back({"inventory_balance", t, p, schedule.inventory(t, p), net});
    }
  }
  return out;
}

}  // namespace lotsizer
