#pragma once

#include <string>
#include <vector>

#include "qrdp/measurement.hpp"

namespace qrdp {

// Order parameter for Renyi divergences: a finite order strictly above 1,
// the alpha -> 1 limit (KL), or the alpha -> infinity endpoint (max-divergence).
class RenyiOrder {
public:
  static RenyiOrder finite(double a);
  static RenyiOrder one() { return RenyiOrder(Kind::one, 1.0); }
  static RenyiOrder infinity() { return RenyiOrder(Kind::infinity, 0.0); }

  // Accepts "inf", "1", or a finite order > 1.
  static RenyiOrder parse(const std::string& text);

  bool is_one() const noexcept { return kind_ == Kind::one; }
  bool is_infinite() const noexcept { return kind_ == Kind::infinity; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  double value() const;  // finite orders only

  // Total order: one < finite (by value) < infinity.
  friend bool operator<(const RenyiOrder& a, const RenyiOrder& b);
  friend bool operator==(const RenyiOrder& a, const RenyiOrder& b);

  std::string to_string() const;

private:
  enum class Kind { one, finite, infinity };
  RenyiOrder(Kind k, double v) : kind_(k), value_(v) {}
  Kind kind_;
  double value_;
};

// D_alpha(P || Q) = (1/(alpha-1)) ln sum_m P_m^alpha Q_m^(1-alpha).
// Terms with P_m = 0 contribute nothing; P_m > 0 with Q_m = 0 gives +inf.
// Dispatches to kl_divergence at order one and max_divergence at infinity.
double renyi_divergence(const ProbVector& p, const ProbVector& q, RenyiOrder alpha);

// sum_m P_m ln(P_m / Q_m), with 0 ln(0/q) = 0.
double kl_divergence(const ProbVector& p, const ProbVector& q);

// max over supported m of ln(P_m / Q_m).
double max_divergence(const ProbVector& p, const ProbVector& q);

// Pushforward P * kernel through a row-stochastic kernel.
ProbVector postprocess(const ProbVector& p, const std::vector<std::vector<double>>& kernel);

}  // namespace qrdp
