#pragma once

#include <string>

namespace drapsim {

// Parameters of the two-level queue cost model
//   total(n) = local_coeff * n^alpha + global_coeff * N^gamma / n^beta
// where n is the clusters per aggregation node and N the clusters in the
// whole system.
struct CostParams {
  double alpha = 2.0;
  double beta = 1.0;
  double gamma = 1.0;
  double big_n = 1.0;
  double local_coeff = 1.0;
  double global_coeff = 1.0;
};

// Throws std::domain_error for n < 1.
double total_cost(double n, const CostParams& p);

// Stationary point ((global_coeff*beta*N^gamma)/(local_coeff*alpha))^(1/(alpha+beta)),
// clamped below at 1.
double optimal_n(const CostParams& p);

// Exhaustive integer argmin of total_cost over [1, n_max]; smallest n on ties.
// Independent oracle for optimal_n.
long brute_force_optimal_n(const CostParams& p, long n_max);

// gamma / (alpha + beta). Throws std::domain_error when alpha + beta == 0.
double scaling_exponent(double alpha, double beta, double gamma);

enum class ScalingRegime { sublinear, superlinear, linear, constant, negative };

ScalingRegime classify_scaling(double alpha, double beta, double gamma);

std::string to_string(ScalingRegime regime);

}  // namespace drapsim
