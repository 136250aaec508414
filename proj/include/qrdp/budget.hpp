#pragma once

#include <cstdint>
#include <utility>

#include "qrdp/channels.hpp"
#include "qrdp/measurement.hpp"
#include "qrdp/parallel.hpp"
#include "qrdp/renyi.hpp"
#include "qrdp/state.hpp"

namespace qrdp {

struct RdpBudget {
  RenyiOrder alpha;
  double epsilon;  // +inf marks a support violation / unbounded budget
};

struct DpBudget {
  double epsilon;
  double delta;
};

// Per-instance budget: the order-alpha divergence between the measured
// outcome distributions of the two noisy neighbor states. One-sided, in the
// rho || sigma direction.
double exact_budget(const NeighborPair& pair, const NoiseSpec& noise, const Povm& povm,
                    RenyiOrder alpha);

// Closed-form pure-DP budget of the mechanism at trace-distance bound d:
//   gad: ln[1 + 2 d s / (1 - s)],            s = sqrt(1-gamma)
//   pad: ln[1 + 2 d s / (1 - s)],            s = sqrt(1-gamma) sqrt(1-lambda)
//   dep: ln[1 + ((1-p)/p) d D]
// Returns +inf when the denominator vanishes (no damping at all), 0 at d = 0.
double qdp_epsilon(const NoiseSpec& noise, double d);

// Tight conversion from a pure-DP budget to an order-alpha budget:
//   eps_hat(alpha) = eps - (1/(alpha-1)) ln[(1 + e^-eps) / (1 + e^-(2 alpha - 1) eps)].
// The infinity order returns eps; near alpha = 1 a series branch avoids the
// 0/0 form and converges to eps * tanh(eps / 2).
double dp_to_rdp(double eps, RenyiOrder alpha);

// dp_to_rdp(qdp_epsilon(noise, d), alpha): the state- and measurement-free
// budget that upper-bounds every per-instance budget at the same d.
RdpBudget intuitive_budget(const NoiseSpec& noise, double d, RenyiOrder alpha);

// (eps + ln(1/delta)/(alpha-1), delta); infinity order passes eps through.
DpBudget rdp_to_dp(const RdpBudget& budget, double delta);

// Event-probability bounds implied by an (alpha, eps) budget:
//   lower = e^-eps * q^(alpha/(alpha-1)),  upper = (e^eps * q)^((alpha-1)/alpha),
// upper capped at 1.
std::pair<double, double> probability_bounds(double eps, double alpha, double q);

// Randomized lower bound on the worst-case per-instance budget for the pair:
// samples `trials` random POVMs (2..4 outcomes) and keeps the maximum
// divergence. Deterministic for a fixed seed regardless of thread count.
double search_budget(const NeighborPair& pair, const NoiseSpec& noise, RenyiOrder alpha,
                     int trials, std::uint64_t seed, ExecMode mode = default_exec_mode());

}  // namespace qrdp
