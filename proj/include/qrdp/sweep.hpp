#pragma once

#include <string>
#include <vector>

#include "qrdp/budget.hpp"
#include "qrdp/channels.hpp"
#include "qrdp/parallel.hpp"
#include "qrdp/renyi.hpp"
#include "qrdp/state.hpp"

namespace qrdp {

enum class SweptParam { p, gamma, lambda };

const char* swept_param_name(SweptParam p);
SweptParam parse_swept_param(const std::string& name);

// One mechanism family with a single free parameter swept over [lo, hi].
struct SweepSpec {
  NoiseSpec base;
  SweptParam param = SweptParam::p;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
  std::vector<RenyiOrder> alphas;
  double d = 0.1;

  void validate() const;
  // Grid point i; steps == 1 degenerates to lo.
  double param_value(int i) const;
};

NoiseSpec with_param(const NoiseSpec& base, SweptParam param, double value);

struct BudgetRow {
  double param;
  RenyiOrder alpha;
  double eps_hat;
};

// eps_hat over the (param, alpha) grid; rows ordered by param then alpha.
// Grid cells are independent, so the OpenMP path matches the serial one
// bit-for-bit.
std::vector<BudgetRow> budget_sweep(const SweepSpec& spec, ExecMode mode = default_exec_mode());

struct UtilityRow {
  double param;
  RenyiOrder alpha;
  double eps_hat;
  double fidelity;  // repeated across the alphas of one param point
};

// Adds F(rho_ref, noisy rho_ref) to each grid row. Requires steps >= 2 and a
// qubit reference state.
std::vector<UtilityRow> utility_sweep(const SweepSpec& spec, const DensityMatrix& rho_ref,
                                      ExecMode mode = default_exec_mode());

}  // namespace qrdp
