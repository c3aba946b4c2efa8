// Pilot-run utility. The Monte-Carlo tolerances frozen into the test suite
// (log-spacings statistic, fitted log-log slopes, sweep medians) were pinned
// from this tool's output; rerun it to regenerate them. Usage:
//
//   monkey_pilot shao  <uniform|beta32> <K> <nseeds>
//   monkey_pilot slope <uniform|beta32> <K> <c> <N> <nseeds>
//   monkey_pilot sweep <seeds_per_k>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "core/analysis.hpp"
#include "core/enumerate.hpp"
#include "core/exponent.hpp"
#include "core/keyboard.hpp"

using namespace monkey;

namespace {

DistributionSpec parse_dist(const char* name) {
  if (std::strcmp(name, "uniform") == 0) return DistributionSpec::uniform();
  if (std::strcmp(name, "beta32") == 0)
    return DistributionSpec::beta_three_two();
  std::fprintf(stderr, "unknown distribution: %s\n", name);
  std::exit(1);
}

int run_shao(int argc, char** argv) {
  if (argc < 3) return 1;
  const DistributionSpec spec = parse_dist(argv[0]);
  const std::size_t k = std::strtoull(argv[1], nullptr, 10);
  const int n_seeds = std::atoi(argv[2]);

  double sum = 0.0, max_dev = 0.0, limit = 0.0;
  for (int seed = 1; seed <= n_seeds; ++seed) {
    const auto sample = sample_spacings(spec, k, seed);
    const auto rep = shao_hahn_statistic(sample);
    limit = rep.entropy_limit.value();
    const double dev = rep.statistic - limit;
    sum += rep.statistic;
    max_dev = std::max(max_dev, std::abs(dev));
    std::printf("seed %2d  statistic % .10f  dev % .3e\n", seed, rep.statistic,
                dev);
  }
  const double mean = sum / n_seeds;
  std::printf("limit         % .10f\n", limit);
  std::printf("mean          % .10f\n", mean);
  std::printf("mean dev      % .3e\n", mean - limit);
  std::printf("max seed dev  % .3e\n", max_dev);
  return 0;
}

int run_slope(int argc, char** argv) {
  if (argc < 5) return 1;
  const DistributionSpec spec = parse_dist(argv[0]);
  const std::size_t k = std::strtoull(argv[1], nullptr, 10);
  const double c = std::atof(argv[2]);
  const std::uint64_t n = std::strtoull(argv[3], nullptr, 10);
  const int n_seeds = std::atoi(argv[4]);
  const FigureKind kind = spec.kind() == DistKind::kUniform
                              ? FigureKind::kUniformSpacings
                              : FigureKind::kBeta32Spacings;

  double max_dev = 0.0;
  for (int seed = 1; seed <= n_seeds; ++seed) {
    const auto sample = sample_spacings(spec, k, seed);
    const Keyboard kb = keyboard_from_spacings(sample, c);
    const double minus_beta = -solve_root(kb).beta;
    const auto series = figure1_data(kind, k, c, n, seed);
    const auto fit = fit_loglog_slope(series, 2);
    const double dev = fit.slope - minus_beta;
    max_dev = std::max(max_dev, std::abs(dev));
    std::printf("seed %2d  slope % .6f  -beta % .6f  dev % .4f  r2 %.6f\n",
                seed, fit.slope, minus_beta, dev, fit.r_squared);
  }
  std::printf("max |slope - (-beta)|  %.4f\n", max_dev);
  return 0;
}

int run_sweep(int argc, char** argv) {
  if (argc < 1) return 1;
  const std::uint32_t seeds = std::strtoul(argv[0], nullptr, 10);
  const std::vector<std::size_t> ks{10, 100, 1000};
  const auto table =
      convergence_sweep(DistributionSpec::uniform(), ks, seeds, 0.82, 1);
  for (const auto& [k, median] : table.medians)
    std::printf("K %4zu  median |beta-1|  %.6f\n", k, median);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: monkey_pilot shao|slope|sweep ...\n");
    return 1;
  }
  const std::string mode = argv[1];
  if (mode == "shao") return run_shao(argc - 2, argv + 2);
  if (mode == "slope") return run_slope(argc - 2, argv + 2);
  if (mode == "sweep") return run_sweep(argc - 2, argv + 2);
  std::fprintf(stderr, "unknown mode: %s\n", mode.c_str());
  return 1;
}
