#include "qrdp/measurement.hpp"

#include <cmath>
#include <string>

#include "qrdp/eig.hpp"
#include "qrdp/errors.hpp"
#include "qrdp/tolerances.hpp"

namespace qrdp {

Povm::Povm(std::size_t dim, std::vector<ComplexMatrix> elements)
    : dim_(dim), elements_(std::move(elements)) {
  if (elements_.empty()) raise(errc::bad_document, "POVM needs at least one element");
  ComplexMatrix sum(dim_);
  for (std::size_t m = 0; m < elements_.size(); ++m) {
    const auto& el = elements_[m];
    if (el.dim() != dim_)
      raise(errc::dimension_mismatch, "POVM element " + std::to_string(m) + " has dim " +
                                          std::to_string(el.dim()));
    const double herm_dev = el.hermiticity_deviation();
    if (herm_dev > tols().herm)
      raise(errc::not_hermitian,
            "POVM element " + std::to_string(m) + " deviates from Hermitian by " +
                std::to_string(herm_dev));
    const auto eigs = hermitian_eigenvalues(el);
    if (!eigs.empty() && eigs.front() < -tols().psd)
      raise(errc::not_psd, "POVM element " + std::to_string(m) + " has eigenvalue " +
                               std::to_string(eigs.front()));
    sum += el;
  }
  const double dev = sum.max_abs_diff(ComplexMatrix::identity(dim_));
  if (dev > tols().completeness)
    raise(errc::channel_not_trace_preserving,
          "POVM elements sum deviates from identity by " + std::to_string(dev));
}

ProbVector ProbVector::from_raw(std::vector<double> probs) {
  double sum = 0.0;
  for (double& p : probs) {
    if (p < -tols().prob_clamp)
      raise(errc::not_psd, "probability " + std::to_string(p) + " below clamp threshold");
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > tols().trace_one)
    raise(errc::trace_not_one, "probabilities sum to " + std::to_string(sum));
  for (double& p : probs) p /= sum;
  return ProbVector(std::move(probs));
}

Povm computational_basis_povm(std::size_t dim) {
  if (dim < 1) raise(errc::param_out_of_range, "POVM dimension must be >= 1");
  std::vector<ComplexMatrix> elements;
  elements.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    ComplexMatrix proj(dim);
    proj(i, i) = Complex{1.0, 0.0};
    elements.push_back(std::move(proj));
  }
  return Povm(dim, std::move(elements));
}

ProbVector outcome_distribution(const DensityMatrix& rho, const Povm& povm) {
  if (rho.dim() != povm.dim())
    raise(errc::dimension_mismatch, "state dim " + std::to_string(rho.dim()) +
                                        " does not match POVM dim " + std::to_string(povm.dim()));
  std::vector<double> probs;
  probs.reserve(povm.outcomes());
  for (const auto& el : povm.elements()) {
    const Complex t = (el * rho.mat()).trace();
    if (std::abs(t.imag()) > tols().imag_residue)
      raise(errc::imaginary_probability,
            "Tr(M rho) has imaginary residue " + std::to_string(t.imag()));
    probs.push_back(t.real());
  }
  return ProbVector::from_raw(std::move(probs));
}

}  // namespace qrdp
