#pragma once

#include <cstddef>
#include <vector>

#include "qrdp/matrix.hpp"
#include "qrdp/state.hpp"

namespace qrdp {

// POVM: Hermitian PSD elements resolving the identity.
class Povm {
public:
  Povm(std::size_t dim, std::vector<ComplexMatrix> elements);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
  std::size_t outcomes() const noexcept { return elements_.size(); }

private:
  std::size_t dim_;
  std::vector<ComplexMatrix> elements_;
};

// Outcome distribution: entries clamped at -1e-12, normalized to sum 1.
class ProbVector {
public:
  static ProbVector from_raw(std::vector<double> probs);

  const std::vector<double>& probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

private:
  explicit ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {}
  std::vector<double> probs_;
};

// Projectors |i><i| for i = 0..dim-1.
Povm computational_basis_povm(std::size_t dim);

// p_m = Tr(M_m rho). Throws ImaginaryProbability when the trace has an
// imaginary residue above tolerance (signals an invalid POVM or state).
ProbVector outcome_distribution(const DensityMatrix& rho, const Povm& povm);

}  // namespace qrdp
