#include "qrdp/random.hpp"

#include <cmath>

#include "qrdp/eig.hpp"
#include "qrdp/errors.hpp"

namespace qrdp {

namespace {

// splitmix64; a full-period mixer that is trivially reproducible everywhere.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
  return Rng(mix(seed ^ mix(trial + 1)));
}

std::uint64_t Rng::next_u64() {
  state_ = mix(state_);
  return state_;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex{re, im};
}

std::size_t Rng::uniform_index(std::size_t n) {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

static ComplexMatrix ginibre(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = rng.complex_gaussian();
  return g;
}

DensityMatrix random_density_matrix(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= Complex{1.0 / tr, 0.0};
  return DensityMatrix::validate_lenient(rho);
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix h(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    h(r, r) = Complex{rng.gaussian(), 0.0};
    for (std::size_t c = r + 1; c < dim; ++c) {
      const Complex v = rng.complex_gaussian();
      h(r, c) = v;
      h(c, r) = std::conj(v);
    }
  }
  return h;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix g = ginibre(dim, rng);
  // Gram-Schmidt over columns.
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex overlap{0.0, 0.0};
      for (std::size_t r = 0; r < dim; ++r) overlap += std::conj(g(r, prev)) * g(r, c);
      for (std::size_t r = 0; r < dim; ++r) g(r, c) -= overlap * g(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(g(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) g(r, c) /= norm;
  }
  return g;
}

Povm random_povm(std::size_t dim, std::size_t outcomes, Rng& rng) {
  std::vector<ComplexMatrix> parts;
  parts.reserve(outcomes);
  ComplexMatrix total(dim);
  for (std::size_t k = 0; k < outcomes; ++k) {
    const ComplexMatrix g = ginibre(dim, rng);
    ComplexMatrix a = g * g.adjoint();
    total += a;
    parts.push_back(std::move(a));
  }

  // Whitening factor S^-1/2.
  const EigResult eig = hermitian_eig(total);
  ComplexMatrix inv_sqrt(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < dim; ++k)
        acc += eig.vectors(r, k) * (1.0 / std::sqrt(eig.values[k])) * std::conj(eig.vectors(c, k));
      inv_sqrt(r, c) = acc;
    }

  std::vector<ComplexMatrix> elements;
  elements.reserve(outcomes);
  for (auto& a : parts) {
    ComplexMatrix m = inv_sqrt * a * inv_sqrt;
    // Symmetrize round-off before validation.
    for (std::size_t r = 0; r < dim; ++r) {
      m(r, r) = Complex{m(r, r).real(), 0.0};
      for (std::size_t c = r + 1; c < dim; ++c) {
        const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
        m(r, c) = avg;
        m(c, r) = std::conj(avg);
      }
    }
    elements.push_back(std::move(m));
  }
  return Povm(dim, std::move(elements));
}

NeighborPair random_neighbor_pair(std::size_t dim, double d, Rng& rng) {
  const DensityMatrix rho = random_density_matrix(dim, rng);
  const DensityMatrix chi = random_density_matrix(dim, rng);
  const double tau = trace_distance(rho, chi);
  double t = 1.0;
  if (tau > 0.0) t = std::min(1.0, rng.uniform() * d / tau);
  ComplexMatrix mixed = rho.mat();
  mixed *= Complex{1.0 - t, 0.0};
  ComplexMatrix scaled_chi = chi.mat();
  scaled_chi *= Complex{t, 0.0};
  mixed += scaled_chi;
  return NeighborPair(rho, DensityMatrix::validate_lenient(mixed), d);
}

std::vector<double> random_distribution(std::size_t n, Rng& rng) {
  std::vector<double> probs(n);
  double sum = 0.0;
  for (double& p : probs) {
    p = rng.uniform() + 1e-9;  // bounded away from empty support
    sum += p;
  }
  for (double& p : probs) p /= sum;
  return probs;
}

std::vector<std::vector<double>> random_stochastic_kernel(std::size_t rows, std::size_t cols,
                                                          Rng& rng) {
  std::vector<std::vector<double>> kernel(rows);
  for (auto& row : kernel) row = random_distribution(cols, rng);
  return kernel;
}

}  // namespace qrdp
