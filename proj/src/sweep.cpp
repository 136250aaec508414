#include "qrdp/sweep.hpp"

#include <cmath>
#include <string>

#include "qrdp/errors.hpp"
#include "qrdp/fidelity.hpp"

namespace qrdp {

const char* swept_param_name(SweptParam p) {
  switch (p) {
    case SweptParam::p: return "p";
    case SweptParam::gamma: return "gamma";
    case SweptParam::lambda: return "lambda";
  }
  return "?";
}

SweptParam parse_swept_param(const std::string& name) {
  if (name == "p") return SweptParam::p;
  if (name == "gamma") return SweptParam::gamma;
  if (name == "lambda") return SweptParam::lambda;
  raise(errc::bad_document, "unknown sweep parameter '" + name + "'");
}

void SweepSpec::validate() const {
  if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo < hi))
    raise(errc::param_out_of_range, "sweep range must satisfy 0 <= lo < hi <= 1, got [" +
                                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
  if (steps < 1) raise(errc::param_out_of_range, "sweep needs at least 1 step");
  if (alphas.empty()) raise(errc::param_out_of_range, "sweep needs at least one order");
  if (!(d >= 0.0) || d > 1.0) raise(errc::param_out_of_range, "d must lie in [0, 1]");
  switch (base.kind) {
    case NoiseKind::pd:
      // Bare dephasing has no closed-form budget; sweep lambda through pad.
      raise(errc::param_out_of_range, "pd sweeps are not supported, use pad with gamma fixed");
    case NoiseKind::gad:
      if (param == SweptParam::lambda)
        raise(errc::param_out_of_range, "lambda is not a parameter of gad");
      break;
    case NoiseKind::dep:
      if (param != SweptParam::p)
        raise(errc::param_out_of_range, "dep only sweeps p");
      break;
    case NoiseKind::pad: break;
  }
}

double SweepSpec::param_value(int i) const {
  if (steps == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

NoiseSpec with_param(const NoiseSpec& base, SweptParam param, double value) {
  switch (param) {
    case SweptParam::p:
      switch (base.kind) {
        case NoiseKind::gad: return NoiseSpec::gad(value, base.gamma);
        case NoiseKind::pad: return NoiseSpec::pad(value, base.gamma, base.lambda);
        case NoiseKind::dep: return NoiseSpec::dep(value, base.dim);
        case NoiseKind::pd: raise(errc::param_out_of_range, "pd has no p parameter");
      }
      break;
    case SweptParam::gamma:
      switch (base.kind) {
        case NoiseKind::gad: return NoiseSpec::gad(base.p, value);
        case NoiseKind::pad: return NoiseSpec::pad(base.p, value, base.lambda);
        default: raise(errc::param_out_of_range, "gamma is not a parameter of this mechanism");
      }
      break;
    case SweptParam::lambda:
      switch (base.kind) {
        case NoiseKind::pd: return NoiseSpec::pd(value);
        case NoiseKind::pad: return NoiseSpec::pad(base.p, base.gamma, value);
        default: raise(errc::param_out_of_range, "lambda is not a parameter of this mechanism");
      }
      break;
  }
  raise(errc::param_out_of_range, "unsupported sweep parameter");
}

std::vector<BudgetRow> budget_sweep(const SweepSpec& spec, ExecMode mode) {
  spec.validate();
  const std::size_t n_alpha = spec.alphas.size();
  std::vector<BudgetRow> rows(static_cast<std::size_t>(spec.steps) * n_alpha,
                              BudgetRow{0.0, RenyiOrder::infinity(), 0.0});
  for_each_index(static_cast<std::size_t>(spec.steps), mode, [&](std::size_t i) {
    const double value = spec.param_value(static_cast<int>(i));
    const NoiseSpec noise = with_param(spec.base, spec.param, value);
    const double eps = qdp_epsilon(noise, spec.d);
    for (std::size_t j = 0; j < n_alpha; ++j) {
      rows[i * n_alpha + j] =
          BudgetRow{value, spec.alphas[j], dp_to_rdp(eps, spec.alphas[j])};
    }
  });
  return rows;
}

std::vector<UtilityRow> utility_sweep(const SweepSpec& spec, const DensityMatrix& rho_ref,
                                      ExecMode mode) {
  spec.validate();
  if (spec.steps < 2) raise(errc::param_out_of_range, "utility sweep needs at least 2 steps");
  if (rho_ref.dim() != 2) raise(errc::not_qubit, "utility sweep needs a qubit reference state");
  const std::size_t n_alpha = spec.alphas.size();
  std::vector<UtilityRow> rows(static_cast<std::size_t>(spec.steps) * n_alpha,
                               UtilityRow{0.0, RenyiOrder::infinity(), 0.0, 0.0});
  for_each_index(static_cast<std::size_t>(spec.steps), mode, [&](std::size_t i) {
    const double value = spec.param_value(static_cast<int>(i));
    const NoiseSpec noise = with_param(spec.base, spec.param, value);
    const double eps = qdp_epsilon(noise, spec.d);
    const double fid = schumacher_fidelity(rho_ref, apply_noise(noise, rho_ref));
    for (std::size_t j = 0; j < n_alpha; ++j) {
      rows[i * n_alpha + j] =
          UtilityRow{value, spec.alphas[j], dp_to_rdp(eps, spec.alphas[j]), fid};
    }
  });
  return rows;
}

}  // namespace qrdp
