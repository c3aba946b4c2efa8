#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/enumerate.hpp"
#include "core/exponent.hpp"
#include "core/keyboard.hpp"

namespace monkey {

// Euler's constant, 20 digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Differential entropy of Beta(3,2), pinned from the closed form
// 9/4 - ln 12; the test suite re-derives it by quadrature of -h ln h for
// h(x) = 12 x^2 (1-x).
inline constexpr double kBeta32DiffEntropy = -0.23490664978800031023;

struct ShaoHahnReport {
  std::size_t k = 0;
  double statistic = 0.0;     // (1/K) sum_i log(K D_i)
  double radix_k_mean = 0.0;  // (1/K) sum_i log_K D_i
  // Theoretical limit of the statistic (generalized entropy minus Euler's
  // constant); absent for quantile-table distributions.
  std::optional<double> entropy_limit;
  // (1/K) sum_i log_K q_i for the keyboard q_i = c D_{i:K}; present only
  // when a letter-mass fraction was supplied.
  std::optional<double> mu_bar;
};

ShaoHahnReport shao_hahn_statistic(const SpacingsSample& sample);
ShaoHahnReport shao_hahn_statistic(const SpacingsSample& sample,
                                   double letter_mass);

// Mean radix-K log letter probability; bounds -beta from below.
double mu_bar(const Keyboard& kb);

struct Prop1Report {
  double mu_bar = 0.0;
  double minus_beta = 0.0;
  bool holds = false;
  // (1 + a_2 + ... + a_K) / (K log_{R0} K); at least 1 by the
  // geometric-harmonic mean inequality, exactly 1 on equal probabilities.
  double ratio = 0.0;
};

// Checks mu_bar <= -beta (tolerance 1e-12) together with ratio >= 1 - 1e-12.
Prop1Report verify_proposition1(const Keyboard& kb);

struct LogLogSeries {
  std::vector<std::uint64_t> ranks;  // strictly increasing
  std::vector<double> log_rank;      // natural log
  std::vector<double> log_base;      // natural log, non-increasing
  std::string source;                // generating keyboard descriptor
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares of log base on log rank over points with
// rank >= min_rank (use 2 to drop the null word). Needs at least 10 points
// and a non-degenerate spread of log ranks.
FitResult fit_loglog_slope(const LogLogSeries& series, std::uint64_t min_rank);

enum class FigureKind { kEqualProbs, kUniformSpacings, kBeta32Spacings };

// Builds the keyboard for one reference panel (equal probabilities, uniform
// spacings or Beta(3,2) spacings), ranks the top n base values, and returns
// the log-log series. Defaults K=26, c=0.82, n=475255 reproduce the
// three-panel reference configuration.
LogLogSeries figure1_data(FigureKind kind, std::size_t k = 26, double c = 0.82,
                          std::uint64_t n = 475255, std::uint64_t seed = 1,
                          const TopNOptions& options = {});

struct SweepRow {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  double beta = 0.0;
  double mu_bar = 0.0;
  double abs_err = 0.0;  // |beta - 1|
};

struct SweepTable {
  std::vector<SweepRow> rows;  // ordered by (k, seed)
  // Median |beta - 1| per alphabet size, in K order.
  std::vector<std::pair<std::size_t, double>> medians;
};

// For each alphabet size and seed: sample spacings, build the keyboard,
// solve the exponent, and record beta and mu_bar. Cells are independent and
// run on a small worker pool; the table order is canonical regardless of
// completion order. Per-cell seeds are base_seed, base_seed+1, ...
SweepTable convergence_sweep(const DistributionSpec& spec,
                             std::span<const std::size_t> ks,
                             std::uint32_t seeds_per_k, double letter_mass,
                             std::uint64_t base_seed = 1,
                             unsigned workers = 0);

}  // namespace monkey
