#include "qrdp/accountant.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "qrdp/errors.hpp"

namespace qrdp {

AlphaGrid::AlphaGrid(std::vector<RenyiOrder> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) raise(errc::param_out_of_range, "alpha grid must be nonempty");
  for (std::size_t i = 1; i < orders_.size(); ++i)
    if (!(orders_[i - 1] < orders_[i]))
      raise(errc::param_out_of_range, "alpha grid must be strictly ascending");
}

AlphaGrid AlphaGrid::default_grid() {
  std::vector<RenyiOrder> orders;
  for (double a : {1.25, 1.5, 2.0, 3.0, 4.0, 8.0, 16.0, 32.0, 64.0})
    orders.push_back(RenyiOrder::finite(a));
  orders.push_back(RenyiOrder::infinity());
  return AlphaGrid(std::move(orders));
}

std::vector<double> task_budgets(const QpuTask& task, const AlphaGrid& grid, RecordMode mode) {
  const RecordMode effective = task.mode.value_or(mode);
  std::vector<double> eps;
  eps.reserve(grid.size());
  if (effective == RecordMode::exact) {
    if (!task.pair.has_value() || !task.povm.has_value())
      raise(errc::missing_exact_inputs,
            "task '" + task.task_id + "' lacks the neighbor pair or POVM exact mode needs");
    for (const auto& alpha : grid.orders())
      eps.push_back(exact_budget(*task.pair, task.noise, *task.povm, alpha));
  } else {
    const double pure = qdp_epsilon(task.noise, task.d);
    for (const auto& alpha : grid.orders()) eps.push_back(dp_to_rdp(pure, alpha));
  }
  return eps;
}

Ledger::Ledger(AlphaGrid grid) : grid_(std::move(grid)), totals_(grid_.size(), 0.0) {}

void Ledger::record_budgets(const std::string& task_id, std::vector<double> eps, bool adaptive) {
  if (eps.size() != grid_.size())
    raise(errc::length_mismatch, "budget vector length " + std::to_string(eps.size()) +
                                     " does not match grid size " + std::to_string(grid_.size()));
  history_.push_back(LedgerEntry{task_id, adaptive, std::move(eps)});
  totals_ = replay_totals();
}

void Ledger::add(const QpuTask& task, RecordMode mode, bool adaptive) {
  record_budgets(task.task_id, task_budgets(task, grid_, mode), adaptive);
}

void Ledger::record(const QpuTask& task, RecordMode mode) { add(task, mode, /*adaptive=*/false); }

void Ledger::record_adaptive(const QpuTask& task, RecordMode mode) {
  add(task, mode, /*adaptive=*/true);
}

std::vector<double> Ledger::replay_totals() const {
  // Summed in ascending value order per grid index, so the totals depend on
  // the multiset of contributions and not on recording order.
  std::vector<double> totals(grid_.size(), 0.0);
  std::vector<double> addends;
  addends.reserve(history_.size());
  for (std::size_t j = 0; j < totals.size(); ++j) {
    addends.clear();
    for (const auto& entry : history_) addends.push_back(entry.eps[j]);
    std::sort(addends.begin(), addends.end());
    for (double a : addends) totals[j] += a;
  }
  return totals;
}

BestDp best_dp(const Ledger& ledger, double delta) {
  if (!(delta > 0.0) || !(delta < 1.0))
    raise(errc::delta_out_of_range, "delta must lie in (0, 1), got " + std::to_string(delta));
  BestDp best{DpBudget{std::numeric_limits<double>::infinity(), delta}, RenyiOrder::infinity()};
  bool found = false;
  const auto& orders = ledger.grid().orders();
  for (std::size_t j = 0; j < orders.size(); ++j) {
    const DpBudget candidate = rdp_to_dp(RdpBudget{orders[j], ledger.totals()[j]}, delta);
    // Strict < keeps the first (smallest) order on ties.
    if (!found || candidate.epsilon < best.budget.epsilon) {
      best = BestDp{candidate, orders[j]};
      found = true;
    }
  }
  return best;
}

void WorkloadSpec::validate() const {
  if (k_qpus < 1) raise(errc::param_out_of_range, "workload needs k_qpus >= 1");
  for (std::size_t r = 0; r < rounds.size(); ++r) {
    std::set<int> used;
    for (const auto& task : rounds[r]) {
      if (task.qpu < 1 || task.qpu > k_qpus)
        raise(errc::schedule_conflict, "round " + std::to_string(r + 1) + " task '" +
                                           task.task_id + "' targets QPU " +
                                           std::to_string(task.qpu) + " outside 1.." +
                                           std::to_string(k_qpus));
      if (!used.insert(task.qpu).second)
        raise(errc::schedule_conflict, "round " + std::to_string(r + 1) + " assigns QPU " +
                                           std::to_string(task.qpu) + " twice");
      if (!(task.d > 0.0) || task.d > 1.0)
        raise(errc::param_out_of_range, "task '" + task.task_id + "' has d outside (0, 1]");
    }
  }
}

SimulationReport simulate_rounds(const WorkloadSpec& workload, const AlphaGrid& grid, double delta,
                                 RecordMode default_mode, ExecMode exec) {
  workload.validate();
  if (!(delta > 0.0) || !(delta < 1.0))
    raise(errc::delta_out_of_range, "delta must lie in (0, 1)");

  SimulationReport report{grid, delta, {}};
  Ledger ledger(grid);
  for (const auto& round : workload.rounds) {
    // Budgets for the round's tasks are independent; evaluate in parallel and
    // merge in task order so the report is deterministic.
    std::vector<std::vector<double>> per_task(round.size());
    for_each_index(round.size(), exec, [&](std::size_t t) {
      per_task[t] = task_budgets(round[t], grid, default_mode);
    });

    std::vector<double> round_eps(grid.size(), 0.0);
    for (std::size_t t = 0; t < round.size(); ++t) {
      for (std::size_t j = 0; j < grid.size(); ++j) round_eps[j] += per_task[t][j];
      ledger.record_budgets(round[t].task_id, std::move(per_task[t]), /*adaptive=*/false);
    }

    RoundReport rr{std::move(round_eps), ledger.totals(), best_dp(ledger, delta)};
    report.rounds.push_back(std::move(rr));
  }
  return report;
}

}  // namespace qrdp
