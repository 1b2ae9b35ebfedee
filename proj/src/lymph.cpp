#include "drapsim/lymph.hpp"

#include <cmath>
#include <stdexcept>

namespace drapsim {

namespace {
void validate(const CostParams& p) {
  if (!(p.alpha > 0.0) || !(p.beta > 0.0) || !(p.big_n >= 1.0)) {
    throw std::domain_error("CostParams requires alpha > 0, beta > 0, N >= 1");
  }
}
}  // namespace

double total_cost(double n, const CostParams& p) {
  validate(p);
  if (n < 1.0) throw std::domain_error("total_cost requires n >= 1");
  return p.local_coeff * std::pow(n, p.alpha) +
         p.global_coeff * std::pow(p.big_n, p.gamma) / std::pow(n, p.beta);
}

double optimal_n(const CostParams& p) {
  validate(p);
  const double stationary =
      std::pow(p.global_coeff * p.beta * std::pow(p.big_n, p.gamma) /
                   (p.local_coeff * p.alpha),
               1.0 / (p.alpha + p.beta));
  return stationary < 1.0 ? 1.0 : stationary;
}

long brute_force_optimal_n(const CostParams& p, long n_max) {
  if (n_max < 1) throw std::domain_error("n_max must be >= 1");
  long best_n = 1;
  double best_cost = total_cost(1.0, p);
  for (long n = 2; n <= n_max; ++n) {
    const double c = total_cost(static_cast<double>(n), p);
    if (c < best_cost) {
      best_cost = c;
      best_n = n;
    }
  }
  return best_n;
}

double scaling_exponent(double alpha, double beta, double gamma) {
  if (alpha + beta == 0.0) {
    throw std::domain_error("scaling_exponent requires alpha + beta != 0");
  }
  return gamma / (alpha + beta);
}

ScalingRegime classify_scaling(double alpha, double beta, double gamma) {
  if (!(alpha + beta > 0.0)) {
    throw std::domain_error("classify_scaling requires alpha + beta > 0");
  }
  const double e = gamma / (alpha + beta);
  if (e < 0.0) return ScalingRegime::negative;
  if (e == 0.0) return ScalingRegime::constant;
  if (e == 1.0) return ScalingRegime::linear;
  if (e < 1.0) return ScalingRegime::sublinear;
  return ScalingRegime::superlinear;
}

std::string to_string(ScalingRegime regime) {
  switch (regime) {
    case ScalingRegime::sublinear: return "sublinear";
    case ScalingRegime::superlinear: return "superlinear";
    case ScalingRegime::linear: return "linear";
    case ScalingRegime::constant: return "constant";
    case ScalingRegime::negative: return "negative";
  }
  return "unknown";
}

}  // namespace drapsim
