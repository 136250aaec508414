#pragma once

#include <cstddef>

namespace qrdp {

// Numerical tolerances shared across the library. Validation thresholds live
// here so every module checks the same quantities against the same limits.
struct Tolerances {
  double herm = 1e-10;          // max |H - H^dagger| entry for Hermitian checks
  double psd = 1e-10;           // eigenvalues >= -psd count as nonnegative
  double recon = 1e-9;          // eigendecomposition reconstruction error
  double trace_one = 1e-9;      // |Tr(rho) - 1| for strict state validation
  double trace_renorm = 1e-6;   // lenient validation renormalizes drift up to this
  double completeness = 1e-9;   // Kraus completeness / POVM resolution of identity
  double prob_clamp = 1e-12;    // probabilities >= -prob_clamp clamp to 0
  double imag_residue = 1e-10;  // allowed imaginary part of Tr(M rho)
  double neighbor_slack = 1e-9; // slack on the certified trace-distance bound
  double jacobi_off = 1e-12;    // off-diagonal Frobenius norm at convergence
  int jacobi_max_sweeps = 100;
  std::size_t max_tensor_dim = std::size_t{1} << 10;
};

inline const Tolerances& tols() {
  static const Tolerances t{};
  return t;
}

}  // namespace qrdp
