#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qrdp/matrix.hpp"
#include "qrdp/state.hpp"

namespace qrdp {

// CPTP map given by Kraus operators. Completeness (sum E_k^dagger E_k = I)
// is checked at construction.
class KrausChannel {
public:
  KrausChannel(std::size_t dim, std::vector<ComplexMatrix> ops);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ComplexMatrix>& ops() const noexcept { return ops_; }

  // max entry |sum E_k^dagger E_k - I|
  double completeness_deviation() const;

private:
  std::size_t dim_;
  std::vector<ComplexMatrix> ops_;
};

enum class NoiseKind { gad, pd, pad, dep };

const char* noise_kind_name(NoiseKind k);

// Parameterized noise mechanism. gad/pd/pad act on single qubits (embedded
// by tensor product on larger states); dep is the affine map p*I/D + (1-p)rho
// on the full state.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::dep;
  double p = 0.0;
  double gamma = 0.0;
  double lambda = 0.0;
  std::size_t dim = 2;  // dep only: must equal the target state dimension

  static NoiseSpec gad(double p, double gamma);
  static NoiseSpec pd(double lambda);
  static NoiseSpec pad(double p, double gamma, double lambda);
  static NoiseSpec dep(double p, std::size_t dim);

  std::string describe() const;
};

// Generalized amplitude damping on one qubit: four Kraus operators
// E0 = sqrt(p) diag(1, sqrt(1-g)), E1 = sqrt(p) [[0, sqrt(g)], [0, 0]],
// E2 = sqrt(1-p) diag(sqrt(1-g), 1), E3 = sqrt(1-p) [[0, 0], [sqrt(g), 0]].
KrausChannel gad_channel(double p, double gamma);

// Phase damping on one qubit: E0 = diag(1, sqrt(1-l)), E1 = diag(0, sqrt(l)).
KrausChannel pd_channel(double lambda);

// Phase damping followed by generalized amplitude damping, as one Kraus set
// (all products G_i * P_j).
KrausChannel pad_channel(double p, double gamma, double lambda);

// Depolarizing map p*I/D + (1-p)*rho, applied exactly in affine form.
DensityMatrix dep_apply(const DensityMatrix& rho, double p, std::size_t dim);

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

// Lifts a single-qubit channel to an n-qubit register by tensoring each
// Kraus operator with identities around the target qubit (qubit 0 is the
// leftmost tensor factor).
KrausChannel embed_on_qubit(const KrausChannel& ch, std::size_t n_qubits, std::size_t qubit);

// Dispatches on the noise kind; gad/pd/pad target `qubit` of a register.
DensityMatrix apply_noise(const NoiseSpec& spec, const DensityMatrix& rho, std::size_t qubit = 0);

}  // namespace qrdp
