#pragma once

#include <vector>

#include "qrdp/matrix.hpp"

namespace qrdp {

struct EigResult {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns paired with values; H = V diag(values) V^dagger
};

// Cyclic Jacobi diagonalization specialized to complex Hermitian matrices.
// Converges when the off-diagonal Frobenius norm drops below the configured
// threshold; throws NoConvergence past the sweep cap and NotHermitian when
// the input fails the Hermiticity check.
EigResult hermitian_eig(const ComplexMatrix& h);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

// Hermitian PSD square root via eigendecomposition. Eigenvalues in
// [-tol_psd, 0) are clamped to 0; anything below that is NotPsd.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

}  // namespace qrdp
