#pragma once

#include "qrdp/state.hpp"

namespace qrdp {

// Qubit state as a point in the Bloch ball.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm_sq() const noexcept { return x * x + y * y + z * z; }
};

// F(rho, sigma) = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, computed through
// the Hermitian eigendecomposition both times. Clamped to [0, 1] on 1e-9
// overshoot from round-off.
double schumacher_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// x = 2 Re(rho_01), y = -2 Im(rho_01), z = rho_00 - rho_11. Qubits only.
BlochVector bloch_vector(const DensityMatrix& rho);

// F = (1 + r.s + sqrt((1 - |r|^2)(1 - |s|^2))) / 2 on the Bloch vectors;
// agrees with schumacher_fidelity on qubits and is the cheap cross-check.
double bloch_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qrdp
