#include "qrdp/budget.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qrdp/errors.hpp"
#include "qrdp/parallel.hpp"
#include "qrdp/random.hpp"

namespace qrdp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_d(double d) {
  if (!(d >= 0.0) || d > 1.0)
    raise(errc::param_out_of_range, "d must lie in [0, 1], got " + std::to_string(d));
}

}  // namespace

double exact_budget(const NeighborPair& pair, const NoiseSpec& noise, const Povm& povm,
                    RenyiOrder alpha) {
  const DensityMatrix noisy_rho = apply_noise(noise, pair.rho());
  const DensityMatrix noisy_sigma = apply_noise(noise, pair.sigma());
  const ProbVector p = outcome_distribution(noisy_rho, povm);
  const ProbVector q = outcome_distribution(noisy_sigma, povm);
  return renyi_divergence(p, q, alpha);
}

double qdp_epsilon(const NoiseSpec& noise, double d) {
  check_d(d);
  if (d == 0.0) return 0.0;
  switch (noise.kind) {
    case NoiseKind::gad: {
      const double s = std::sqrt(1.0 - noise.gamma);
      if (s == 1.0) return kInf;
      return std::log1p(2.0 * d * s / (1.0 - s));
    }
    case NoiseKind::pad: {
      const double s = std::sqrt(1.0 - noise.gamma) * std::sqrt(1.0 - noise.lambda);
      if (s == 1.0) return kInf;
      return std::log1p(2.0 * d * s / (1.0 - s));
    }
    case NoiseKind::dep: {
      if (noise.p == 0.0) return kInf;
      return std::log1p((1.0 - noise.p) / noise.p * d * static_cast<double>(noise.dim));
    }
    case NoiseKind::pd:
      // Pure dephasing never separates the diagonals, so no finite pure-DP
      // budget exists for it; only the damped mechanisms have closed forms.
      raise(errc::param_out_of_range, "no closed-form budget for a bare pd mechanism");
  }
  raise(errc::param_out_of_range, "unknown noise kind");
}

double dp_to_rdp(double eps, RenyiOrder alpha) {
  if (!(eps >= 0.0)) raise(errc::param_out_of_range, "eps must be >= 0, got " + std::to_string(eps));
  if (eps == 0.0) return 0.0;
  if (std::isinf(eps)) return kInf;
  if (alpha.is_infinite()) return eps;

  const double a = alpha.is_one() ? 1.0 : alpha.value();
  const double u = a - 1.0;
  const double em = std::exp(-eps);  // e^-eps
  if (u < 1e-6) {
    // Series around alpha = 1: the closed form is 0/0 there. With
    // s = e^-eps / (1 + e^-eps),
    //   eps_hat = eps (1 - 2 s) + 2 eps^2 s (1 - s) (alpha - 1) + O((alpha-1)^2),
    // whose leading term is eps * tanh(eps / 2).
    const double s = em / (1.0 + em);
    return eps * (1.0 - 2.0 * s) + 2.0 * eps * eps * s * (1.0 - s) * u;
  }
  const double correction = std::log((1.0 + em) / (1.0 + std::exp(-(2.0 * a - 1.0) * eps))) / u;
  return eps - correction;
}

RdpBudget intuitive_budget(const NoiseSpec& noise, double d, RenyiOrder alpha) {
  return RdpBudget{alpha, dp_to_rdp(qdp_epsilon(noise, d), alpha)};
}

DpBudget rdp_to_dp(const RdpBudget& budget, double delta) {
  if (!(delta > 0.0) || !(delta < 1.0))
    raise(errc::delta_out_of_range, "delta must lie in (0, 1), got " + std::to_string(delta));
  if (budget.alpha.is_infinite()) return DpBudget{budget.epsilon, delta};
  if (budget.alpha.is_one()) return DpBudget{kInf, delta};
  return DpBudget{budget.epsilon + std::log(1.0 / delta) / (budget.alpha.value() - 1.0), delta};
}

std::pair<double, double> probability_bounds(double eps, double alpha, double q) {
  if (!(eps >= 0.0)) raise(errc::param_out_of_range, "eps must be >= 0");
  if (!(alpha > 1.0)) raise(errc::param_out_of_range, "alpha must be > 1");
  if (!(q >= 0.0) || q > 1.0) raise(errc::param_out_of_range, "q must lie in [0, 1]");
  const double lower = std::exp(-eps) * std::pow(q, alpha / (alpha - 1.0));
  const double upper = std::min(1.0, std::pow(std::exp(eps) * q, (alpha - 1.0) / alpha));
  return {lower, upper};
}

double search_budget(const NeighborPair& pair, const NoiseSpec& noise, RenyiOrder alpha,
                     int trials, std::uint64_t seed, ExecMode mode) {
  if (trials < 1) raise(errc::param_out_of_range, "trials must be >= 1");
  std::vector<double> results(static_cast<std::size_t>(trials));
  for_each_index(results.size(), mode, [&](std::size_t i) {
    Rng rng = Rng::for_trial(seed, i);
    const std::size_t outcomes = 2 + rng.uniform_index(3);
    const Povm povm = random_povm(pair.rho().dim(), outcomes, rng);
    results[i] = exact_budget(pair, noise, povm, alpha);
  });
  return *std::max_element(results.begin(), results.end());
}

}  // namespace qrdp
