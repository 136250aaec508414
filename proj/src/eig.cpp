#include "qrdp/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qrdp/errors.hpp"
#include "qrdp/tolerances.hpp"

namespace qrdp {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  double sum = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& h) {
  const double dev = h.hermiticity_deviation();
  if (dev > tols().herm)
    raise(errc::not_hermitian,
          "max |H - H^dagger| entry is " + std::to_string(dev) + " (limit " +
              std::to_string(tols().herm) + ")");
  if (!h.all_finite()) raise(errc::not_hermitian, "matrix has non-finite entries");

  const std::size_t n = h.dim();

  // Work on the exactly-Hermitian average so the diagonal stays real.
  ComplexMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));

  ComplexMatrix v = ComplexMatrix::identity(n);

  if (n > 1) {
    bool converged = off_diagonal_norm(a) <= tols().jacobi_off;
    int sweep = 0;
    while (!converged && sweep < tols().jacobi_max_sweeps) {
      ++sweep;
      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const Complex apq = a(p, q);
          const double m = std::abs(apq);
          if (m == 0.0) continue;

          // Phase factor reduces the (p,q) block to a real symmetric one;
          // then the usual stable Jacobi rotation zeroes it.
          const Complex phase = apq / m;
          const double app = a(p, p).real();
          const double aqq = a(q, q).real();
          const double tau = (aqq - app) / (2.0 * m);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const Complex sp = s * phase;          // s * e^{i theta}
          const Complex spc = std::conj(sp);     // s * e^{-i theta}

          // Right-multiply by the rotation: columns p and q.
          for (std::size_t i = 0; i < n; ++i) {
            const Complex aip = a(i, p);
            const Complex aiq = a(i, q);
            a(i, p) = c * aip - spc * aiq;
            a(i, q) = s * aip + c * (std::conj(phase) * aiq);
          }
          // Left-multiply by its adjoint: rows p and q.
          for (std::size_t j = 0; j < n; ++j) {
            const Complex apj = a(p, j);
            const Complex aqj = a(q, j);
            a(p, j) = c * apj - sp * aqj;
            a(q, j) = s * apj + c * (phase * aqj);
          }
          a(p, q) = Complex{0.0, 0.0};
          a(q, p) = Complex{0.0, 0.0};
          a(p, p) = Complex{a(p, p).real(), 0.0};
          a(q, q) = Complex{a(q, q).real(), 0.0};

          // Accumulate eigenvectors.
          for (std::size_t i = 0; i < n; ++i) {
            const Complex vip = v(i, p);
            const Complex viq = v(i, q);
            v(i, p) = c * vip - spc * viq;
            v(i, q) = s * vip + c * (std::conj(phase) * viq);
          }
        }
      }
      converged = off_diagonal_norm(a) <= tols().jacobi_off;
    }
    if (!converged)
      raise(errc::no_convergence, "Jacobi sweeps exhausted (" +
                                      std::to_string(tols().jacobi_max_sweeps) +
                                      "), off-diagonal norm " + std::to_string(off_diagonal_norm(a)));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigResult res{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    res.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[k]);
  }
  return res;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eig(h).values;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  const EigResult eig = hermitian_eig(h);
  const std::size_t n = h.dim();

  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    double lambda = eig.values[k];
    if (lambda < -tols().psd)
      raise(errc::not_psd, "eigenvalue " + std::to_string(lambda) + " below -" +
                               std::to_string(tols().psd));
    // The square root amplifies round-off near zero (sqrt(1e-17) ~ 3e-9), so
    // the whole tolerance band around zero maps to zero, not just the
    // negative half.
    if (lambda < tols().psd) lambda = 0.0;
    roots[k] = std::sqrt(lambda);
  }

  // S = V sqrt(Lambda) V^dagger, symmetrized to kill rotation round-off.
  ComplexMatrix s(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k)
        acc += eig.vectors(r, k) * roots[k] * std::conj(eig.vectors(c, k));
      s(r, c) = acc;
    }
  for (std::size_t r = 0; r < n; ++r) {
    s(r, r) = Complex{s(r, r).real(), 0.0};
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (s(r, c) + std::conj(s(c, r)));
      s(r, c) = avg;
      s(c, r) = std::conj(avg);
    }
  }
  return s;
}

}  // namespace qrdp
