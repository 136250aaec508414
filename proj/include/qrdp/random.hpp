#pragma once

#include <cstdint>
#include <vector>

#include "qrdp/matrix.hpp"
#include "qrdp/measurement.hpp"
#include "qrdp/state.hpp"

namespace qrdp {

// Deterministic generator with hand-rolled distributions. std distributions
// are implementation-defined, and sweep/search results must reproduce
// bit-for-bit across platforms and thread counts.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Derives an independent stream for a trial index; used to make parallel
  // batches order-independent.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next_u64();
  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);   // [lo, hi)
  double gaussian();                      // Box-Muller, unit normal
  Complex complex_gaussian();
  std::size_t uniform_index(std::size_t n);  // {0, ..., n-1}

private:
  std::uint64_t state_;
};

// Ginibre construction G G^dagger / Tr, full rank almost surely.
DensityMatrix random_density_matrix(std::size_t dim, Rng& rng);

// Random Hermitian with Gaussian entries (not a state).
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

// Unitary from Gram-Schmidt on a Ginibre matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

// Draws k random PSD parts A_i and whitens: M_i = S^-1/2 A_i S^-1/2 with
// S = sum A_i, so the elements resolve the identity.
Povm random_povm(std::size_t dim, std::size_t outcomes, Rng& rng);

// sigma = (1-t) rho + t chi with t scaled so the trace distance stays <= d.
NeighborPair random_neighbor_pair(std::size_t dim, double d, Rng& rng);

std::vector<double> random_distribution(std::size_t n, Rng& rng);

std::vector<std::vector<double>> random_stochastic_kernel(std::size_t rows, std::size_t cols,
                                                          Rng& rng);

}  // namespace qrdp
