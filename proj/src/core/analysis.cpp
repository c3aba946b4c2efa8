#include "core/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>

#include "core/errors.hpp"
#include "core/numeric.hpp"

namespace monkey {

namespace {

ShaoHahnReport statistic_impl(const SpacingsSample& sample,
                              std::optional<double> letter_mass) {
  const auto d = sample.values();
  const double k = static_cast<double>(d.size());
  const double log_k = std::log(k);

  KahanSum scaled, raw;
  for (double v : d) {
    scaled.add(std::log(k * v));
    raw.add(std::log(v));
  }

  ShaoHahnReport rep;
  rep.k = d.size();
  rep.statistic = scaled.value() / k;
  rep.radix_k_mean = raw.value() / (k * log_k);
  switch (sample.spec().kind()) {
    case DistKind::kUniform:
      // Generalized entropy of the uniform is 0.
      rep.entropy_limit = -kEulerGamma;
      break;
    case DistKind::kBetaThreeTwo:
      rep.entropy_limit = kBeta32DiffEntropy - kEulerGamma;
      break;
    case DistKind::kQuantileTable:
      break;  // no pinned constant for user-supplied tables
  }
  if (letter_mass) {
    if (!(*letter_mass > 0.0 && *letter_mass < 1.0))
      throw ValidationError("letter mass fraction c must lie strictly in (0,1)");
    KahanSum q_logs;  // q_i = c * D_i; summed directly, not via the identity
    for (double v : d) q_logs.add(std::log(*letter_mass * v));
    rep.mu_bar = q_logs.value() / (k * log_k);
  }
  return rep;
}

}  // namespace

ShaoHahnReport shao_hahn_statistic(const SpacingsSample& sample) {
  return statistic_impl(sample, std::nullopt);
}

ShaoHahnReport shao_hahn_statistic(const SpacingsSample& sample,
                                   double letter_mass) {
  return statistic_impl(sample, letter_mass);
}

double mu_bar(const Keyboard& kb) {
  const double k = static_cast<double>(kb.size());
  return kahan_total(kb.log_probs()) / (k * std::log(k));
}

Prop1Report verify_proposition1(const Keyboard& kb) {
  const ExponentReport exp_rep = solve_root(kb);
  Prop1Report rep;
  rep.mu_bar = mu_bar(kb);
  rep.minus_beta = -exp_rep.beta;
  const double k = static_cast<double>(kb.size());
  const double alpha_total = kahan_total(exp_rep.alphas);
  rep.ratio = alpha_total * std::log(exp_rep.r0) / (k * std::log(k));
  rep.holds = rep.mu_bar <= rep.minus_beta + 1e-12 && rep.ratio >= 1.0 - 1e-12;
  return rep;
}

FitResult fit_loglog_slope(const LogLogSeries& series,
                           std::uint64_t min_rank) {
  std::size_t count = 0;
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < series.ranks.size(); ++i) {
    if (series.ranks[i] < min_rank) continue;
    ++count;
    sx += series.log_rank[i];
    sy += series.log_base[i];
  }
  if (count < 10)
    throw ValidationError("slope fit needs at least 10 points at min_rank");
  const double mx = sx / static_cast<double>(count);
  const double my = sy / static_cast<double>(count);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < series.ranks.size(); ++i) {
    if (series.ranks[i] < min_rank) continue;
    const double dx = series.log_rank[i] - mx;
    const double dy = series.log_base[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0)
    throw ValidationError("slope fit is degenerate: all log ranks equal");

  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  const double ss_res = syy - fit.slope * sxy;
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

LogLogSeries figure1_data(FigureKind kind, std::size_t k, double c,
                          std::uint64_t n, std::uint64_t seed,
                          const TopNOptions& options) {
  Keyboard kb = [&]() -> Keyboard {
    switch (kind) {
      case FigureKind::kEqualProbs:
        return miller_keyboard(k, 1.0 - c);
      case FigureKind::kUniformSpacings:
        return keyboard_from_spacings(
            sample_spacings(DistributionSpec::uniform(), k, seed), c);
      case FigureKind::kBeta32Spacings:
        return keyboard_from_spacings(
            sample_spacings(DistributionSpec::beta_three_two(), k, seed), c);
    }
    throw ValidationError("unknown figure kind");
  }();

  const RankedWords ranked = top_n(kb, n, options);
  LogLogSeries series;
  series.ranks.reserve(ranked.size());
  series.log_rank.reserve(ranked.size());
  series.log_base.reserve(ranked.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    series.ranks.push_back(i + 1);
    series.log_rank.push_back(std::log(static_cast<double>(i + 1)));
    series.log_base.push_back(ranked.log_base(i));
  }
  switch (kind) {
    case FigureKind::kEqualProbs:
      series.source = "equal K=" + std::to_string(k);
      break;
    case FigureKind::kUniformSpacings:
      series.source =
          "uniform K=" + std::to_string(k) + " seed=" + std::to_string(seed);
      break;
    case FigureKind::kBeta32Spacings:
      series.source =
          "beta32 K=" + std::to_string(k) + " seed=" + std::to_string(seed);
      break;
  }
  return series;
}

SweepTable convergence_sweep(const DistributionSpec& spec,
                             std::span<const std::size_t> ks,
                             std::uint32_t seeds_per_k, double letter_mass,
                             std::uint64_t base_seed, unsigned workers) {
  for (std::size_t k : ks) {
    if (k < 2) throw ValidationError("sweep needs every K >= 2");
  }
  if (seeds_per_k == 0) throw ValidationError("sweep needs at least one seed");

  SweepTable table;
  table.rows.resize(ks.size() * seeds_per_k);

  // Independent pure cells; any worker may compute any cell. The first
  // failure wins and is rethrown with its (K, seed) attached.
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run_cells = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= table.rows.size() || failed.load()) return;
      const std::size_t k = ks[i / seeds_per_k];
      const std::uint64_t seed = base_seed + (i % seeds_per_k);
      try {
        try {
          const auto sample = sample_spacings(spec, k, seed);
          const Keyboard kb = keyboard_from_spacings(sample, letter_mass);
          const ExponentReport exp_rep = solve_root(kb);
          const double mb = mu_bar(kb);
          if (!(exp_rep.beta > 1.0) || mb > -exp_rep.beta + 1e-12) {
            throw InvariantError("sweep cell violated 1 < beta <= -mu_bar");
          }
          table.rows[i] = {k, seed, exp_rep.beta, mb,
                           std::abs(exp_rep.beta - 1.0)};
        } catch (const std::exception& e) {
          const std::string where = " [sweep cell K=" + std::to_string(k) +
                                    " seed=" + std::to_string(seed) + "]";
          if (dynamic_cast<const ValidationError*>(&e))
            throw ValidationError(e.what() + where);
          if (dynamic_cast<const ResourceError*>(&e))
            throw ResourceError(e.what() + where);
          throw InvariantError(e.what() + where);
        }
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!failed.exchange(true)) first_error = std::current_exception();
        return;
      }
    }
  };

  unsigned n_workers = workers ? workers : std::thread::hardware_concurrency();
  n_workers = std::max(1u, std::min<unsigned>(
                               n_workers,
                               static_cast<unsigned>(table.rows.size())));
  if (n_workers == 1) {
    run_cells();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(run_cells);
    for (auto& t : pool) t.join();
  }
  if (failed.load() && first_error) std::rethrow_exception(first_error);

  table.medians.reserve(ks.size());
  std::vector<double> errs(seeds_per_k);
  for (std::size_t gi = 0; gi < ks.size(); ++gi) {
    for (std::uint32_t j = 0; j < seeds_per_k; ++j)
      errs[j] = table.rows[gi * seeds_per_k + j].abs_err;
    std::sort(errs.begin(), errs.end());
    const std::size_t mid = errs.size() / 2;
    const double median = errs.size() % 2 == 1
                              ? errs[mid]
                              : 0.5 * (errs[mid - 1] + errs[mid]);
    table.medians.emplace_back(ks[gi], median);
  }
  return table;
}

}  // namespace monkey
