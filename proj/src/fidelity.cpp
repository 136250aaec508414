#include "qrdp/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrdp/eig.hpp"
#include "qrdp/errors.hpp"

namespace qrdp {

namespace {

double clamp_unit(double f) {
  if (f > 1.0 && f <= 1.0 + 1e-9) return 1.0;
  if (f < 0.0 && f >= -1e-9) return 0.0;
  return f;
}

}  // namespace

double schumacher_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    raise(errc::dimension_mismatch, "fidelity needs equal dims, got " + std::to_string(rho.dim()) +
                                        " and " + std::to_string(sigma.dim()));
  const ComplexMatrix root = psd_sqrt(rho.mat());
  const ComplexMatrix inner = root * sigma.mat() * root;
  const ComplexMatrix outer = psd_sqrt(inner);
  const double tr = outer.trace().real();
  return clamp_unit(tr * tr);
}

BlochVector bloch_vector(const DensityMatrix& rho) {
  if (rho.dim() != 2)
    raise(errc::not_qubit, "Bloch vector needs a qubit, got dim " + std::to_string(rho.dim()));
  const Complex off = rho.mat()(0, 1);
  return BlochVector{2.0 * off.real(), -2.0 * off.imag(),
                     rho.mat()(0, 0).real() - rho.mat()(1, 1).real()};
}

double bloch_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const BlochVector r = bloch_vector(rho);
  const BlochVector s = bloch_vector(sigma);
  const double dot = r.x * s.x + r.y * s.y + r.z * s.z;
  // Pure states sit numerically a hair outside the ball; clamp the radicand.
  const double pr = std::max(0.0, 1.0 - r.norm_sq());
  const double ps = std::max(0.0, 1.0 - s.norm_sq());
  return clamp_unit(0.5 * (1.0 + dot + std::sqrt(pr * ps)));
}

}  // namespace qrdp
