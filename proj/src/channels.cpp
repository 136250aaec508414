#include "qrdp/channels.hpp"

#include <cmath>
#include <sstream>

#include "qrdp/errors.hpp"
#include "qrdp/tolerances.hpp"

namespace qrdp {

namespace {

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0) || v > 1.0)
    raise(errc::param_out_of_range, std::string(name) + " must lie in [0, 1], got " +
                                        std::to_string(v));
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

KrausChannel::KrausChannel(std::size_t dim, std::vector<ComplexMatrix> ops)
    : dim_(dim), ops_(std::move(ops)) {
  if (ops_.empty()) raise(errc::channel_not_trace_preserving, "channel has no Kraus operators");
  for (const auto& op : ops_)
    if (op.dim() != dim_)
      raise(errc::dimension_mismatch, "Kraus operator dim " + std::to_string(op.dim()) +
                                          " does not match channel dim " + std::to_string(dim_));
  const double dev = completeness_deviation();
  if (dev > tols().completeness)
    raise(errc::channel_not_trace_preserving,
          "sum E_k^dagger E_k deviates from identity by " + std::to_string(dev));
}

double KrausChannel::completeness_deviation() const {
  ComplexMatrix sum(dim_);
  for (const auto& op : ops_) sum += op.adjoint() * op;
  return sum.max_abs_diff(ComplexMatrix::identity(dim_));
}

const char* noise_kind_name(NoiseKind k) {
  switch (k) {
    case NoiseKind::gad: return "gad";
    case NoiseKind::pd: return "pd";
    case NoiseKind::pad: return "pad";
    case NoiseKind::dep: return "dep";
  }
  return "?";
}

NoiseSpec NoiseSpec::gad(double p, double gamma) {
  check_unit_interval(p, "p");
  check_unit_interval(gamma, "gamma");
  return NoiseSpec{NoiseKind::gad, p, gamma, 0.0, 2};
}

NoiseSpec NoiseSpec::pd(double lambda) {
  check_unit_interval(lambda, "lambda");
  return NoiseSpec{NoiseKind::pd, 0.0, 0.0, lambda, 2};
}

NoiseSpec NoiseSpec::pad(double p, double gamma, double lambda) {
  check_unit_interval(p, "p");
  check_unit_interval(gamma, "gamma");
  check_unit_interval(lambda, "lambda");
  return NoiseSpec{NoiseKind::pad, p, gamma, lambda, 2};
}

NoiseSpec NoiseSpec::dep(double p, std::size_t dim) {
  check_unit_interval(p, "p");
  if (dim < 1) raise(errc::param_out_of_range, "dep dimension must be >= 1");
  return NoiseSpec{NoiseKind::dep, p, 0.0, 0.0, dim};
}

std::string NoiseSpec::describe() const {
  std::ostringstream os;
  os << noise_kind_name(kind) << "(";
  switch (kind) {
    case NoiseKind::gad: os << "p=" << p << ", gamma=" << gamma; break;
    case NoiseKind::pd: os << "lambda=" << lambda; break;
    case NoiseKind::pad: os << "p=" << p << ", gamma=" << gamma << ", lambda=" << lambda; break;
    case NoiseKind::dep: os << "p=" << p << ", D=" << dim; break;
  }
  os << ")";
  return os.str();
}

KrausChannel gad_channel(double p, double gamma) {
  check_unit_interval(p, "p");
  check_unit_interval(gamma, "gamma");
  const double sp = std::sqrt(p);
  const double sq = std::sqrt(1.0 - p);
  const double sg = std::sqrt(gamma);
  const double s1g = std::sqrt(1.0 - gamma);
  std::vector<ComplexMatrix> ops;
  ops.push_back(ComplexMatrix::from_rows({{sp, 0.0}, {0.0, sp * s1g}}));
  ops.push_back(ComplexMatrix::from_rows({{0.0, sp * sg}, {0.0, 0.0}}));
  ops.push_back(ComplexMatrix::from_rows({{sq * s1g, 0.0}, {0.0, sq}}));
  ops.push_back(ComplexMatrix::from_rows({{0.0, 0.0}, {sq * sg, 0.0}}));
  return KrausChannel(2, std::move(ops));
}

KrausChannel pd_channel(double lambda) {
  check_unit_interval(lambda, "lambda");
  const double s1l = std::sqrt(1.0 - lambda);
  const double sl = std::sqrt(lambda);
  std::vector<ComplexMatrix> ops;
  ops.push_back(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, s1l}}));
  ops.push_back(ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, sl}}));
  return KrausChannel(2, std::move(ops));
}

KrausChannel pad_channel(double p, double gamma, double lambda) {
  const KrausChannel gad = gad_channel(p, gamma);
  const KrausChannel pd = pd_channel(lambda);
  // PD acts first, so the composed operators are G_i * P_j.
  std::vector<ComplexMatrix> ops;
  ops.reserve(gad.ops().size() * pd.ops().size());
  for (const auto& g : gad.ops())
    for (const auto& q : pd.ops()) ops.push_back(g * q);
  return KrausChannel(2, std::move(ops));
}

DensityMatrix dep_apply(const DensityMatrix& rho, double p, std::size_t dim) {
  check_unit_interval(p, "p");
  if (dim != rho.dim())
    raise(errc::dimension_mismatch, "dep D = " + std::to_string(dim) +
                                        " does not match state dim " + std::to_string(rho.dim()));
  ComplexMatrix out = rho.mat();
  out *= Complex{1.0 - p, 0.0};
  const double uniform = p / static_cast<double>(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) += uniform;
  return DensityMatrix::validate_lenient(out);
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim())
    raise(errc::dimension_mismatch, "channel dim " + std::to_string(ch.dim()) +
                                        " does not match state dim " + std::to_string(rho.dim()));
  ComplexMatrix out(ch.dim());
  for (const auto& op : ch.ops()) out += op * rho.mat() * op.adjoint();
  return DensityMatrix::validate_lenient(out);
}

KrausChannel embed_on_qubit(const KrausChannel& ch, std::size_t n_qubits, std::size_t qubit) {
  if (ch.dim() != 2) raise(errc::dimension_mismatch, "only single-qubit channels can be embedded");
  if (qubit >= n_qubits)
    raise(errc::param_out_of_range, "qubit index " + std::to_string(qubit) + " out of range for " +
                                        std::to_string(n_qubits) + " qubits");
  const std::size_t pre = std::size_t{1} << qubit;
  const std::size_t post = std::size_t{1} << (n_qubits - 1 - qubit);
  std::vector<ComplexMatrix> ops;
  ops.reserve(ch.ops().size());
  for (const auto& op : ch.ops()) {
    ComplexMatrix lifted = tensor_product(ComplexMatrix::identity(pre), op);
    lifted = tensor_product(lifted, ComplexMatrix::identity(post));
    ops.push_back(std::move(lifted));
  }
  return KrausChannel(pre * 2 * post, std::move(ops));
}

DensityMatrix apply_noise(const NoiseSpec& spec, const DensityMatrix& rho, std::size_t qubit) {
  if (spec.kind == NoiseKind::dep) return dep_apply(rho, spec.p, spec.dim);

  KrausChannel base = [&] {
    switch (spec.kind) {
      case NoiseKind::gad: return gad_channel(spec.p, spec.gamma);
      case NoiseKind::pd: return pd_channel(spec.lambda);
      default: return pad_channel(spec.p, spec.gamma, spec.lambda);
    }
  }();

  if (rho.dim() == 2 && qubit == 0) return apply_channel(base, rho);
  if (!is_power_of_two(rho.dim()))
    raise(errc::dimension_mismatch, "qubit channels need a power-of-two state dimension, got " +
                                        std::to_string(rho.dim()));
  std::size_t n_qubits = 0;
  for (std::size_t d = rho.dim(); d > 1; d >>= 1) ++n_qubits;
  return apply_channel(embed_on_qubit(base, n_qubits, qubit), rho);
}

}  // namespace qrdp
