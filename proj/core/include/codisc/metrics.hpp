#pragma once

#include <optional>
#include <string>
#include <vector>

#include "codisc/errors.hpp"

namespace codisc {

enum class SolveStatus { Sat, Unsat, BudgetExceeded };

std::string to_string(SolveStatus s);
SolveStatus solve_status_from_string(const std::string& s);

// Per-instance outcome. `time` is either wall seconds or the deterministic
// conflict-count proxy; both feed PAR-2 the same way.
struct MetricsRecord {
  std::string instance_id;
  SolveStatus status = SolveStatus::BudgetExceeded;
  double time = 0.0;
};

// Piecewise-constant primal/dual bounds; value on [t_k, t_{k+1}) is the
// bound recorded at t_k.
struct BoundTrajectory {
  struct Event {
    double t;
    double primal;
    double dual;
  };
  std::vector<Event> events;  // t non-decreasing, within [0, horizon]
  double horizon = 0.0;
};

// Mean runtime with timeouts charged 2*tau. An instance counts as solved
// iff its status is decided and time <= tau (closed bound).
double par2(const std::vector<MetricsRecord>& records, double tau);

int count_timeouts(const std::vector<MetricsRecord>& records, double tau);

// Integral of primal(t) - dual(t) over [0, horizon].
double pd_integral(const BoundTrajectory& traj);

// Radar-chart normalization 1 - (value-min)/(2*(max-min)); maps min -> 1.0
// and max -> 0.5. Degenerate max == min returns 1.0.
double radar_normalize(double value, double min_value, double max_value);

std::vector<MetricsRecord> read_metrics_csv(const std::string& path);
void write_metrics_csv(const std::string& path, const std::vector<MetricsRecord>& records);
BoundTrajectory read_trajectory_csv(const std::string& path, double horizon);

}  // namespace codisc
