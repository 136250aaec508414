#include "qrdp/state.hpp"

#include <cmath>
#include <string>

#include "qrdp/eig.hpp"
#include "qrdp/errors.hpp"
#include "qrdp/tolerances.hpp"

namespace qrdp {

static ComplexMatrix checked(const ComplexMatrix& m, bool renormalize) {
  if (!m.all_finite()) raise(errc::not_hermitian, "state has non-finite entries");
  const double herm_dev = m.hermiticity_deviation();
  if (herm_dev > tols().herm)
    raise(errc::not_hermitian, "max |rho - rho^dagger| entry is " + std::to_string(herm_dev));

  ComplexMatrix work = m;
  const double tr = work.trace().real();
  const double drift = std::abs(tr - 1.0);
  if (renormalize && drift > tols().trace_one && drift <= tols().trace_renorm && tr > 0.0) {
    work *= Complex{1.0 / tr, 0.0};
  } else if (drift > tols().trace_one) {
    raise(errc::trace_not_one, "Tr(rho) = " + std::to_string(tr) + ", deviation " +
                                   std::to_string(drift));
  }

  const auto eigs = hermitian_eigenvalues(work);
  if (!eigs.empty() && eigs.front() < -tols().psd)
    raise(errc::not_psd, "minimum eigenvalue " + std::to_string(eigs.front()) + " below -" +
                             std::to_string(tols().psd));
  return work;
}

DensityMatrix DensityMatrix::validate(const ComplexMatrix& m) {
  return DensityMatrix(checked(m, /*renormalize=*/false));
}

DensityMatrix DensityMatrix::validate_lenient(const ComplexMatrix& m) {
  return DensityMatrix(checked(m, /*renormalize=*/true));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    raise(errc::dimension_mismatch, "trace distance needs equal dims, got " +
                                        std::to_string(rho.dim()) + " and " +
                                        std::to_string(sigma.dim()));
  const auto eigs = hermitian_eigenvalues(rho.mat() - sigma.mat());
  double sum = 0.0;
  for (double l : eigs) sum += std::abs(l);
  return 0.5 * sum;
}

NeighborPair::NeighborPair(DensityMatrix rho, DensityMatrix sigma, double d_bound)
    : rho_(std::move(rho)), sigma_(std::move(sigma)), d_bound_(d_bound) {
  if (rho_.dim() != sigma_.dim())
    raise(errc::dimension_mismatch, "neighbor states must share one dimension");
  if (!(d_bound > 0.0) || d_bound > 1.0)
    raise(errc::param_out_of_range, "d_bound must lie in (0, 1], got " + std::to_string(d_bound));
  const double tau = trace_distance(rho_, sigma_);
  if (tau > d_bound + tols().neighbor_slack)
    raise(errc::param_out_of_range, "trace distance " + std::to_string(tau) +
                                        " exceeds certified bound d = " + std::to_string(d_bound));
}

}  // namespace qrdp
