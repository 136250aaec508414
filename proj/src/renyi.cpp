#include "qrdp/renyi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qrdp/errors.hpp"
#include "qrdp/tolerances.hpp"

namespace qrdp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Above this order the direct power sum can overflow/underflow, so the sum
// moves to log space.
constexpr double kLogSpaceOrder = 32.0;

void check_lengths(const ProbVector& p, const ProbVector& q) {
  if (p.size() != q.size())
    raise(errc::length_mismatch, "distributions have lengths " + std::to_string(p.size()) +
                                     " and " + std::to_string(q.size()));
}

}  // namespace

RenyiOrder RenyiOrder::finite(double a) {
  if (!(a > 1.0) || !std::isfinite(a))
    raise(errc::param_out_of_range, "finite Renyi order must be > 1, got " + std::to_string(a));
  return RenyiOrder(Kind::finite, a);
}

RenyiOrder RenyiOrder::parse(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return infinity();
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    raise(errc::param_out_of_range, "cannot parse Renyi order '" + text + "'");
  }
  if (pos != text.size())
    raise(errc::param_out_of_range, "cannot parse Renyi order '" + text + "'");
  if (v == 1.0) return one();
  return finite(v);
}

double RenyiOrder::value() const {
  if (kind_ != Kind::finite) raise(errc::param_out_of_range, "order has no finite value");
  return value_;
}

bool operator<(const RenyiOrder& a, const RenyiOrder& b) {
  auto rank = [](const RenyiOrder& o) { return o.is_one() ? 0 : (o.is_finite() ? 1 : 2); };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  if (a.is_finite()) return a.value_ < b.value_;
  return false;
}

bool operator==(const RenyiOrder& a, const RenyiOrder& b) {
  return !(a < b) && !(b < a);
}

std::string RenyiOrder::to_string() const {
  if (is_one()) return "1";
  if (is_infinite()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", value_);
  return buf;
}

double renyi_divergence(const ProbVector& p, const ProbVector& q, RenyiOrder alpha) {
  check_lengths(p, q);
  if (alpha.is_one()) return kl_divergence(p, q);
  if (alpha.is_infinite()) return max_divergence(p, q);
  const double a = alpha.value();

  if (a < kLogSpaceOrder) {
    double sum = 0.0;
    for (std::size_t m = 0; m < p.size(); ++m) {
      if (p[m] == 0.0) continue;
      if (q[m] == 0.0) return kInf;
      sum += std::pow(p[m], a) * std::pow(q[m], 1.0 - a);
    }
    return std::log(sum) / (a - 1.0);
  }

  // Log-sum-exp over a*ln(P_m) + (1-a)*ln(Q_m).
  std::vector<double> exponents;
  exponents.reserve(p.size());
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (p[m] == 0.0) continue;
    if (q[m] == 0.0) return kInf;
    exponents.push_back(a * std::log(p[m]) + (1.0 - a) * std::log(q[m]));
  }
  const double peak = *std::max_element(exponents.begin(), exponents.end());
  double sum = 0.0;
  for (double e : exponents) sum += std::exp(e - peak);
  return (peak + std::log(sum)) / (a - 1.0);
}

double kl_divergence(const ProbVector& p, const ProbVector& q) {
  check_lengths(p, q);
  double sum = 0.0;
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (p[m] == 0.0) continue;
    if (q[m] == 0.0) return kInf;
    sum += p[m] * std::log(p[m] / q[m]);
  }
  return sum;
}

double max_divergence(const ProbVector& p, const ProbVector& q) {
  check_lengths(p, q);
  double best = -kInf;
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (p[m] == 0.0) continue;
    if (q[m] == 0.0) return kInf;
    best = std::max(best, std::log(p[m] / q[m]));
  }
  return best;
}

ProbVector postprocess(const ProbVector& p, const std::vector<std::vector<double>>& kernel) {
  if (kernel.size() != p.size())
    raise(errc::not_stochastic, "kernel has " + std::to_string(kernel.size()) +
                                    " rows for " + std::to_string(p.size()) + " inputs");
  const std::size_t out_size = kernel.empty() ? 0 : kernel.front().size();
  if (out_size == 0) raise(errc::not_stochastic, "kernel rows must be nonempty");

  for (std::size_t r = 0; r < kernel.size(); ++r) {
    if (kernel[r].size() != out_size)
      raise(errc::not_stochastic, "kernel row " + std::to_string(r) + " has ragged length");
    double row_sum = 0.0;
    for (double v : kernel[r]) {
      if (v < -tols().prob_clamp)
        raise(errc::not_stochastic, "kernel entry " + std::to_string(v) + " is negative");
      row_sum += v;
    }
    if (std::abs(row_sum - 1.0) > tols().trace_one)
      raise(errc::not_stochastic, "kernel row " + std::to_string(r) + " sums to " +
                                      std::to_string(row_sum));
  }

  std::vector<double> out(out_size, 0.0);
  for (std::size_t r = 0; r < kernel.size(); ++r)
    for (std::size_t c = 0; c < out_size; ++c) out[c] += p[r] * kernel[r][c];
  return ProbVector::from_raw(std::move(out));
}

}  // namespace qrdp
