#include "monkey/monkey.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/analysis.hpp"
#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "core/exponent.hpp"
#include "core/keyboard.hpp"
#include "core/serialize.hpp"

#define MONKEY_VERSION_STRING "0.1.0"

struct monkey_spacings {
  monkey::SpacingsSample sample;
};

struct monkey_keyboard {
  monkey::Keyboard kb;
  // Provenance for serialization, known when built from a sampled division.
  std::optional<std::string> spec_name;
  std::uint64_t seed = 0;
};

struct monkey_ranked {
  monkey::RankedWords words;
};

struct monkey_series {
  monkey::LogLogSeries series;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

template <typename Fn>
monkey_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return MONKEY_OK;
  } catch (const monkey::ValidationError& e) {
    set_error(e.what());
    return MONKEY_ERR_INVALID_ARGUMENT;
  } catch (const monkey::ResourceError& e) {
    set_error(e.what());
    return MONKEY_ERR_RESOURCE;
  } catch (const monkey::InvariantError& e) {
    set_error(e.what());
    return MONKEY_ERR_INVARIANT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return MONKEY_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return MONKEY_ERR_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw monkey::ValidationError(what);
}

monkey::DistributionSpec make_spec(monkey_dist_kind kind,
                                   const double* grid_prob,
                                   const double* grid_value,
                                   size_t grid_len) {
  switch (kind) {
    case MONKEY_DIST_UNIFORM:
      return monkey::DistributionSpec::uniform();
    case MONKEY_DIST_BETA32:
      return monkey::DistributionSpec::beta_three_two();
    case MONKEY_DIST_TABLE: {
      require(grid_prob && grid_value && grid_len >= 2,
              "quantile table grids are required for the table distribution");
      monkey::QuantileTable table;
      table.prob.assign(grid_prob, grid_prob + grid_len);
      table.value.assign(grid_value, grid_value + grid_len);
      return monkey::DistributionSpec::quantile_table(std::move(table));
    }
  }
  throw monkey::ValidationError("unknown distribution kind");
}

monkey_status write_json(const std::string& json, char* buf, size_t cap,
                         size_t* needed) {
  require(needed != nullptr, "needed pointer is required");
  *needed = json.size() + 1;
  if (buf && cap >= *needed) std::memcpy(buf, json.c_str(), *needed);
  return MONKEY_OK;
}

monkey_exponent_report to_c(const monkey::ExponentReport& rep) {
  return {rep.r0, rep.beta, rep.u, rep.b, rep.c1, rep.c2, rep.residual};
}

}  // namespace

extern "C" {

const char* monkey_version(void) { return MONKEY_VERSION_STRING; }

const char* monkey_last_error(void) { return g_last_error.c_str(); }

monkey_status monkey_spacings_sample(monkey_dist_kind kind,
                                     const double* grid_prob,
                                     const double* grid_value, size_t grid_len,
                                     size_t k, uint64_t seed,
                                     monkey_spacings** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is required");
    auto spec = make_spec(kind, grid_prob, grid_value, grid_len);
    *out = new monkey_spacings{monkey::sample_spacings(spec, k, seed)};
  });
}

void monkey_spacings_free(monkey_spacings* s) { delete s; }

size_t monkey_spacings_count(const monkey_spacings* s) {
  return s ? s->sample.size() : 0;
}

static monkey_status copy_doubles(std::span<const double> xs, double* out,
                                  size_t cap) {
  return guarded([&] {
    require(out != nullptr, "output buffer is required");
    require(cap >= xs.size(), "output buffer is too small");
    std::memcpy(out, xs.data(), xs.size() * sizeof(double));
  });
}

monkey_status monkey_spacings_values(const monkey_spacings* s, double* out,
                                     size_t cap) {
  if (!s) return guarded([] { require(false, "null spacings handle"); });
  return copy_doubles(s->sample.values(), out, cap);
}

monkey_status monkey_spacings_sorted(const monkey_spacings* s, double* out,
                                     size_t cap) {
  if (!s) return guarded([] { require(false, "null spacings handle"); });
  return copy_doubles(s->sample.sorted(), out, cap);
}

monkey_status monkey_keyboard_create(const double* q, size_t k, double s,
                                     monkey_keyboard** out) {
  return guarded([&] {
    require(out != nullptr && q != nullptr, "q and output pointers required");
    *out = new monkey_keyboard{
        monkey::Keyboard(std::vector<double>(q, q + k), s), std::nullopt, 0};
  });
}

monkey_status monkey_keyboard_miller(size_t k, double s,
                                     monkey_keyboard** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is required");
    *out = new monkey_keyboard{monkey::miller_keyboard(k, s), std::nullopt, 0};
  });
}

monkey_status monkey_keyboard_from_spacings(const monkey_spacings* sample,
                                            double c, monkey_keyboard** out) {
  return guarded([&] {
    require(sample != nullptr && out != nullptr,
            "sample and output pointers required");
    *out = new monkey_keyboard{monkey::keyboard_from_spacings(sample->sample, c),
                               sample->sample.spec().name(),
                               sample->sample.seed()};
  });
}

void monkey_keyboard_free(monkey_keyboard* kb) { delete kb; }

size_t monkey_keyboard_size(const monkey_keyboard* kb) {
  return kb ? kb->kb.size() : 0;
}

double monkey_keyboard_space_prob(const monkey_keyboard* kb) {
  return kb ? kb->kb.space_prob() : std::numeric_limits<double>::quiet_NaN();
}

monkey_status monkey_keyboard_letter_probs(const monkey_keyboard* kb,
                                           double* out, size_t cap) {
  if (!kb) return guarded([] { require(false, "null keyboard handle"); });
  return copy_doubles(kb->kb.letter_probs(), out, cap);
}

monkey_status monkey_keyboard_alphas(const monkey_keyboard* kb, double* out,
                                     size_t cap) {
  if (!kb) return guarded([] { require(false, "null keyboard handle"); });
  return guarded([&] {
    require(out != nullptr, "output buffer is required");
    const auto a = kb->kb.alphas();
    require(cap >= a.size(), "output buffer is too small");
    std::memcpy(out, a.data(), a.size() * sizeof(double));
  });
}

monkey_status monkey_solve_root(const monkey_keyboard* kb,
                                monkey_exponent_report* out) {
  return guarded([&] {
    require(kb != nullptr && out != nullptr,
            "keyboard and output pointers required");
    *out = to_c(monkey::solve_root(kb->kb));
  });
}

monkey_status monkey_miller_exponent(size_t k, double s,
                                     double* out_minus_beta) {
  return guarded([&] {
    require(out_minus_beta != nullptr, "output pointer is required");
    *out_minus_beta = monkey::miller_exponent(k, s);
  });
}

monkey_status monkey_compute_b(double r0, const double* alphas, size_t k,
                               double* out_b) {
  return guarded([&] {
    require(alphas != nullptr && out_b != nullptr,
            "alphas and output pointers required");
    *out_b = monkey::compute_b(r0, {alphas, k});
  });
}

monkey_status monkey_top_n(const monkey_keyboard* kb, uint64_t n,
                           uint64_t max_frontier_or_zero,
                           monkey_ranked** out) {
  return guarded([&] {
    require(kb != nullptr && out != nullptr,
            "keyboard and output pointers required");
    monkey::TopNOptions options;
    if (max_frontier_or_zero) options.max_frontier = max_frontier_or_zero;
    *out = new monkey_ranked{monkey::top_n(kb->kb, n, options)};
  });
}

monkey_status monkey_brute_force_top_n(const monkey_keyboard* kb, uint64_t n,
                                       uint32_t max_len, monkey_ranked** out) {
  return guarded([&] {
    require(kb != nullptr && out != nullptr,
            "keyboard and output pointers required");
    *out = new monkey_ranked{monkey::brute_force_top_n(kb->kb, n, max_len)};
  });
}

void monkey_ranked_free(monkey_ranked* r) { delete r; }

uint64_t monkey_ranked_count(const monkey_ranked* r) {
  return r ? r->words.size() : 0;
}

double monkey_ranked_log_base(const monkey_ranked* r, uint64_t rank) {
  if (!r || rank < 1 || rank > r->words.size())
    return std::numeric_limits<double>::quiet_NaN();
  return r->words.log_base(rank - 1);
}

uint32_t monkey_ranked_word_length(const monkey_ranked* r, uint64_t rank) {
  if (!r || rank < 1 || rank > r->words.size()) return 0;
  return r->words.length(rank - 1);
}

monkey_status monkey_ranked_word(const monkey_ranked* r, uint64_t rank,
                                 uint32_t* out, size_t cap) {
  return guarded([&] {
    require(r != nullptr && out != nullptr,
            "ranked and output pointers required");
    require(rank >= 1 && rank <= r->words.size(), "rank out of range");
    const auto word = r->words.word(rank - 1);
    require(cap >= word.size(), "output buffer is too small");
    for (std::size_t i = 0; i < word.size(); ++i) out[i] = word[i] + 1;
  });
}

monkey_status monkey_count_words(const monkey_keyboard* kb, double t,
                                 double t_cap_or_zero,
                                 monkey_count_report* out) {
  return guarded([&] {
    require(kb != nullptr && out != nullptr,
            "keyboard and output pointers required");
    monkey::CountOptions options;
    if (t_cap_or_zero > 0.0) options.t_cap = t_cap_or_zero;
    const auto rep = monkey::count_words(kb->kb, t, options);
    *out = {rep.t, rep.n, rep.n_cum};
  });
}

monkey_status monkey_verify_csiszar(const monkey_keyboard* kb,
                                    const double* ts, size_t n_ts,
                                    double t_cap_or_zero,
                                    monkey_bound_row* rows, int* all_ok) {
  return guarded([&] {
    require(kb != nullptr && ts != nullptr && rows != nullptr &&
                all_ok != nullptr,
            "keyboard, thresholds, rows and all_ok pointers required");
    monkey::CountOptions options;
    if (t_cap_or_zero > 0.0) options.t_cap = t_cap_or_zero;
    const auto rep = monkey::verify_csiszar_bounds(kb->kb, {ts, n_ts}, options);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      const auto& r = rep.rows[i];
      rows[i] = {r.t, r.n, r.n_cum, r.lower, r.upper, r.ok ? 1 : 0};
    }
    *all_ok = rep.all_ok ? 1 : 0;
  });
}

monkey_status monkey_verify_rank_bounds(const monkey_keyboard* kb,
                                        const monkey_ranked* ranked,
                                        monkey_rank_bound_row* rows,
                                        int* all_ok) {
  return guarded([&] {
    require(kb != nullptr && ranked != nullptr && rows != nullptr &&
                all_ok != nullptr,
            "keyboard, ranked, rows and all_ok pointers required");
    const auto rep = monkey::verify_rank_bounds(kb->kb, ranked->words);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      const auto& r = rep.rows[i];
      rows[i] = {r.rank, r.log_base, r.lower, r.upper, r.ok ? 1 : 0};
    }
    *all_ok = rep.all_ok ? 1 : 0;
  });
}

monkey_status monkey_shao_hahn(const monkey_spacings* sample,
                               double letter_mass_or_zero,
                               monkey_shao_hahn_report* out) {
  return guarded([&] {
    require(sample != nullptr && out != nullptr,
            "sample and output pointers required");
    const auto rep =
        letter_mass_or_zero != 0.0
            ? monkey::shao_hahn_statistic(sample->sample, letter_mass_or_zero)
            : monkey::shao_hahn_statistic(sample->sample);
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    *out = {rep.k, rep.statistic, rep.radix_k_mean,
            rep.entropy_limit.value_or(nan), rep.mu_bar.value_or(nan)};
  });
}

monkey_status monkey_mu_bar(const monkey_keyboard* kb, double* out) {
  return guarded([&] {
    require(kb != nullptr && out != nullptr,
            "keyboard and output pointers required");
    *out = monkey::mu_bar(kb->kb);
  });
}

monkey_status monkey_verify_prop1(const monkey_keyboard* kb,
                                  monkey_prop1_report* out) {
  return guarded([&] {
    require(kb != nullptr && out != nullptr,
            "keyboard and output pointers required");
    const auto rep = monkey::verify_proposition1(kb->kb);
    *out = {rep.mu_bar, rep.minus_beta, rep.holds ? 1 : 0, rep.ratio};
  });
}

monkey_status monkey_figure_series(monkey_figure_kind kind, size_t k, double c,
                                   uint64_t n, uint64_t seed,
                                   monkey_series** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is required");
    monkey::FigureKind fk;
    switch (kind) {
      case MONKEY_FIGURE_EQUAL:
        fk = monkey::FigureKind::kEqualProbs;
        break;
      case MONKEY_FIGURE_UNIFORM:
        fk = monkey::FigureKind::kUniformSpacings;
        break;
      case MONKEY_FIGURE_BETA32:
        fk = monkey::FigureKind::kBeta32Spacings;
        break;
      default:
        throw monkey::ValidationError("unknown figure kind");
    }
    *out = new monkey_series{monkey::figure1_data(fk, k, c, n, seed)};
  });
}

void monkey_series_free(monkey_series* s) { delete s; }

uint64_t monkey_series_count(const monkey_series* s) {
  return s ? s->series.ranks.size() : 0;
}

monkey_status monkey_series_row(const monkey_series* s, uint64_t i,
                                uint64_t* rank, double* log_rank,
                                double* log_base) {
  return guarded([&] {
    require(s != nullptr, "null series handle");
    require(i < s->series.ranks.size(), "series row out of range");
    if (rank) *rank = s->series.ranks[i];
    if (log_rank) *log_rank = s->series.log_rank[i];
    if (log_base) *log_base = s->series.log_base[i];
  });
}

monkey_status monkey_fit_loglog(const monkey_series* s, uint64_t min_rank,
                                double* slope, double* intercept,
                                double* r_squared) {
  return guarded([&] {
    require(s != nullptr, "null series handle");
    const auto fit = monkey::fit_loglog_slope(s->series, min_rank);
    if (slope) *slope = fit.slope;
    if (intercept) *intercept = fit.intercept;
    if (r_squared) *r_squared = fit.r_squared;
  });
}

monkey_status monkey_convergence_sweep(monkey_dist_kind kind,
                                       const double* grid_prob,
                                       const double* grid_value,
                                       size_t grid_len, const size_t* ks,
                                       size_t n_ks, uint32_t seeds_per_k,
                                       double c, uint64_t base_seed,
                                       monkey_sweep_row* rows,
                                       double* medians) {
  return guarded([&] {
    require(ks != nullptr && rows != nullptr, "ks and rows pointers required");
    const auto spec = make_spec(kind, grid_prob, grid_value, grid_len);
    const auto table = monkey::convergence_sweep(spec, {ks, n_ks}, seeds_per_k,
                                                 c, base_seed);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const auto& r = table.rows[i];
      rows[i] = {r.k, r.seed, r.beta, r.mu_bar, r.abs_err};
    }
    if (medians) {
      for (std::size_t i = 0; i < table.medians.size(); ++i)
        medians[i] = table.medians[i].second;
    }
  });
}

monkey_status monkey_keyboard_to_json(const monkey_keyboard* kb, char* buf,
                                      size_t cap, size_t* needed) {
  return guarded([&] {
    require(kb != nullptr, "null keyboard handle");
    const std::string json =
        kb->spec_name ? monkey::to_json(kb->kb, *kb->spec_name, kb->seed)
                      : monkey::to_json(kb->kb);
    write_json(json, buf, cap, needed);
  });
}

monkey_status monkey_spacings_to_json(const monkey_spacings* s, char* buf,
                                      size_t cap, size_t* needed) {
  return guarded([&] {
    require(s != nullptr, "null spacings handle");
    write_json(monkey::to_json(s->sample), buf, cap, needed);
  });
}

monkey_status monkey_exponent_report_to_json(
    const monkey_exponent_report* report, char* buf, size_t cap,
    size_t* needed) {
  return guarded([&] {
    require(report != nullptr, "null report pointer");
    monkey::ExponentReport rep;
    rep.r0 = report->r0;
    rep.beta = report->beta;
    rep.u = report->u;
    rep.b = report->b;
    rep.c1 = report->c1;
    rep.c2 = report->c2;
    rep.residual = report->residual;
    write_json(monkey::to_json(rep), buf, cap, needed);
  });
}

}  // extern "C"
