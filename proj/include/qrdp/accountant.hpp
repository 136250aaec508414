#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrdp/budget.hpp"
#include "qrdp/channels.hpp"
#include "qrdp/measurement.hpp"
#include "qrdp/parallel.hpp"
#include "qrdp/renyi.hpp"
#include "qrdp/state.hpp"

namespace qrdp {

// Strictly ascending list of orders the ledger tracks; may end at infinity.
class AlphaGrid {
public:
  explicit AlphaGrid(std::vector<RenyiOrder> orders);
  static AlphaGrid default_grid();

  const std::vector<RenyiOrder>& orders() const noexcept { return orders_; }
  std::size_t size() const noexcept { return orders_.size(); }

private:
  std::vector<RenyiOrder> orders_;
};

enum class RecordMode { intuitive, exact };

// One mechanism invocation to be accounted. Exact mode additionally needs the
// concrete neighbor pair and measurement it was run against.
struct QpuTask {
  std::string task_id;
  NoiseSpec noise;
  double d = 0.1;
  int qpu = 1;
  std::optional<NeighborPair> pair;
  std::optional<Povm> povm;
  std::optional<RecordMode> mode;  // per-task override of the workload mode
};

// Per-order budgets of a single task.
std::vector<double> task_budgets(const QpuTask& task, const AlphaGrid& grid, RecordMode mode);

struct LedgerEntry {
  std::string task_id;
  bool adaptive = false;
  std::vector<double> eps;  // one per grid order
};

// Additive budget ledger over a fixed alpha grid. Totals are replayable from
// the history; adaptive composition carries the same arithmetic and differs
// only in the audit tag.
class Ledger {
public:
  explicit Ledger(AlphaGrid grid);

  void record(const QpuTask& task, RecordMode mode);
  void record_adaptive(const QpuTask& task, RecordMode mode);
  // For callers that already evaluated the budgets (parallel rounds).
  void record_budgets(const std::string& task_id, std::vector<double> eps, bool adaptive);

  const AlphaGrid& grid() const noexcept { return grid_; }
  const std::vector<double>& totals() const noexcept { return totals_; }
  const std::vector<LedgerEntry>& history() const noexcept { return history_; }

  std::vector<double> replay_totals() const;

private:
  void add(const QpuTask& task, RecordMode mode, bool adaptive);

  AlphaGrid grid_;
  std::vector<double> totals_;
  std::vector<LedgerEntry> history_;
};

struct BestDp {
  DpBudget budget;
  RenyiOrder alpha;
};

// Minimum (eps, delta) over the grid's conversions; ties go to the smaller
// order.
BestDp best_dp(const Ledger& ledger, double delta);

// Round-structured schedule across k QPUs; within one round each QPU runs at
// most one task.
struct WorkloadSpec {
  int k_qpus = 1;
  std::vector<std::vector<QpuTask>> rounds;

  void validate() const;
};

struct RoundReport {
  std::vector<double> round_eps;       // this round's sum, per order
  std::vector<double> cumulative_eps;  // ledger totals after the round
  BestDp best;
};

struct SimulationReport {
  AlphaGrid grid;
  double delta = 0.0;
  std::vector<RoundReport> rounds;
};

// Accounts every round of the workload: per-round budgets (tasks evaluated
// in parallel, merged in task order), the cumulative ledger, and the best
// (eps, delta) conversion after each round.
SimulationReport simulate_rounds(const WorkloadSpec& workload, const AlphaGrid& grid, double delta,
                                 RecordMode default_mode = RecordMode::intuitive,
                                 ExecMode exec = default_exec_mode());

}  // namespace qrdp
