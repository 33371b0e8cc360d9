#ifndef LOTSIZER_SCHEDULE_HPP
#define LOTSIZER_SCHEDULE_HPP

#include <string>
#include <vector>

#include "lotsizer/instance.hpp"
#include "lotsizer/types.hpp"

namespace lotsizer {

/// A production plan plus the inventory/shortage trajectories it induces.
/// produce is binary for DLS schedules and fractional days-of-production for
/// ELSP schedules; changeover is always binary.
struct Schedule {
  Matrix quantities;   // Q, n x m
  Matrix produce;      // X
  Matrix changeover;   // omega
  Matrix inventory;    // I
  Matrix shortage;     // S

  Schedule() = default;
  Schedule(int n, int m)
      : quantities(n, m), produce(n, m), changeover(n, m), inventory(n, m), shortage(n, m) {}

  int n_periods() const { return quantities.rows(); }
  int n_products() const { return quantities.cols(); }
};

struct CostBreakdown {
  double holding = 0.0;
  double shortage = 0.0;
  double setup = 0.0;
  double common_setup = 0.0;
  double total = 0.0;
};

/// One violated constraint at a (period, product) cell; period/product are
/// 0-based, -1 when the constraint is not cell-specific.
struct Violation {
  std::string constraint;
  int period = -1;
  int product = -1;
  double lhs = 0.0;
  double rhs = 0.0;

  std::string describe() const;
};

/// Propagates quantities through the balance equation. Net stock after each
/// period is split into inventory = max(net, 0) and shortage = max(-net, 0),
/// so the two are never simultaneously positive.
void propagate_inventory(const DlsInstance& instance, const Matrix& quantities,
                         Matrix& inventory_out, Matrix& shortage_out);

/// Sums holding/shortage/setup/common-setup costs of a schedule. Throws
/// InfeasibleScheduleError if shortage occurs while the instance forbids it.
CostBreakdown evaluate_cost(const DlsInstance& instance, const Schedule& schedule);

/// Returns every constraint of the instance's active mode that the schedule
/// violates; empty means the schedule is feasible.
std::vector<Violation> check_schedule(const DlsInstance& instance, const Schedule& schedule);

/// ELSP counterpart of check_schedule: verifies the shared-line time budget,
/// the rate coupling between days and quantities, and the quantity caps.
std::vector<Violation> check_elsp_schedule(const ElspInstance& instance,
                                           const Schedule& schedule);

}  // namespace lotsizer

#endif  // LOTSIZER_SCHEDULE_HPP
