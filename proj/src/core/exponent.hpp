#pragma once

#include <span>
#include <vector>

#include "core/keyboard.hpp"

namespace monkey {

// The characteristic root and every constant of the counting-function
// bounds: R0 solves sum_i R0^{-alpha_i} = 1, beta is the power-law exponent
// magnitude (the log-log slope is -beta), b is the induction constant of the
// lower bound, and C1 = b/R0, C2 = R0/(R0-1) bound ranks in terms of base
// values.
struct ExponentReport {
  double r0 = 0.0;        // unique root > 1
  double beta = 0.0;      // 1/u, strictly > 1
  double u = 0.0;         // root of sum_i q_i^u = 1 on (0,1); u == 1/beta
  double b = 0.0;         // 0 < b < 1
  double c1 = 0.0;        // b / R0
  double c2 = 0.0;        // R0 / (R0 - 1)
  double residual = 0.0;  // sum_i q_i^u - 1 at the solved root, signed
  std::vector<double> alphas;
};

// Solves sum_i q_i^u = 1 for u on (0,1). The sum is continuous and strictly
// decreasing in u with limits K-1 at 0+ and -s at 1, so the root exists and
// is unique; bisection to 1e-15 width plus a short Newton polish leaves
// |residual| <= 1e-13. Throws InvariantError if the solved beta is not
// strictly above 1 (the model proves it is).
ExponentReport solve_root(const Keyboard& kb);

// Limit of the recursion b_{i+1} = b_i * sum_{alpha_j <= i} R0^{-alpha_j},
// b_1 = 1/R0. The sequence is constant once i >= alpha_K, so the result is
// the exact finite product; no convergence tolerance is involved.
double compute_b(double r0, std::span<const double> alphas);

// Closed form for the equal-probability keyboard: log(1-s)/log K - 1.
// Returns -beta (a value below -1 that tends to -1 as K grows).
double miller_exponent(std::size_t k, double space_prob);

}  // namespace monkey
