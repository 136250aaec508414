#pragma once

#include "qrdp/matrix.hpp"

namespace qrdp {

// Validated density matrix: Hermitian, positive semi-definite, unit trace.
// Instances are immutable once constructed and safe to share across threads.
class DensityMatrix {
public:
  // Strict validation; names the violated invariant on failure.
  static DensityMatrix validate(const ComplexMatrix& m);
  // Renormalizes trace drift up to tols().trace_renorm before validating;
  // intended for states coming out of repeated channel application.
  static DensityMatrix validate_lenient(const ComplexMatrix& m);

  const ComplexMatrix& mat() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }

private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

// (sum_i |lambda_i(rho - sigma)|) / 2, in [0, 1].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// A pair of states together with a caller-certified trace-distance bound d.
// The bound is metadata the accountant relies on, so construction checks it.
class NeighborPair {
public:
  NeighborPair(DensityMatrix rho, DensityMatrix sigma, double d_bound);

  const DensityMatrix& rho() const noexcept { return rho_; }
  const DensityMatrix& sigma() const noexcept { return sigma_; }
  double d_bound() const noexcept { return d_bound_; }

  ComplexMatrix difference() const { return rho_.mat() - sigma_.mat(); }

private:
  DensityMatrix rho_;
  DensityMatrix sigma_;
  double d_bound_;
};

}  // namespace qrdp
