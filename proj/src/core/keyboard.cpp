#include "core/keyboard.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "core/errors.hpp"
#include "core/numeric.hpp"

namespace monkey {

namespace {

void validate_table(const QuantileTable& t) {
  if (t.prob.size() != t.value.size() || t.prob.size() < 2) {
    throw ValidationError(
        "quantile table needs matching prob/value grids with at least 2 rows");
  }
  if (t.prob.front() != 0.0 || t.value.front() != 0.0 ||
      t.prob.back() != 1.0 || t.value.back() != 1.0) {
    throw ValidationError("quantile table endpoints must map 0->0 and 1->1");
  }
  for (std::size_t i = 1; i < t.prob.size(); ++i) {
    if (!(t.prob[i] > t.prob[i - 1]) || !(t.value[i] > t.value[i - 1])) {
      throw ValidationError(
          "quantile table must be strictly increasing in both coordinates");
    }
  }
}

double interpolate(const QuantileTable& t, double u) {
  auto it = std::upper_bound(t.prob.begin(), t.prob.end(), u);
  std::size_t hi = static_cast<std::size_t>(it - t.prob.begin());
  if (hi >= t.prob.size()) hi = t.prob.size() - 1;
  const std::size_t lo = hi - 1;
  // With the identity table this reduces to u bit-for-bit.
  return t.value[lo] + (u - t.prob[lo]) * (t.value[hi] - t.value[lo]) /
                           (t.prob[hi] - t.prob[lo]);
}

}  // namespace

DistributionSpec::DistributionSpec(DistKind kind,
                                   std::optional<QuantileTable> table)
    : kind_(kind), table_(std::move(table)) {}

DistributionSpec DistributionSpec::uniform() {
  return {DistKind::kUniform, std::nullopt};
}

DistributionSpec DistributionSpec::beta_three_two() {
  return {DistKind::kBetaThreeTwo, std::nullopt};
}

DistributionSpec DistributionSpec::quantile_table(QuantileTable table) {
  validate_table(table);
  return {DistKind::kQuantileTable, std::move(table)};
}

const QuantileTable& DistributionSpec::table() const {
  if (!table_) throw ValidationError("distribution carries no quantile table");
  return *table_;
}

std::string DistributionSpec::name() const {
  switch (kind_) {
    case DistKind::kUniform:
      return "uniform";
    case DistKind::kBetaThreeTwo:
      return "beta32";
    case DistKind::kQuantileTable:
      return "table";
  }
  return "?";
}

double DistributionSpec::draw(UnitRng& rng) const {
  switch (kind_) {
    case DistKind::kUniform:
      return rng.next();
    case DistKind::kBetaThreeTwo: {
      // Third smallest of four uniforms has density 12 x^2 (1-x) = Beta(3,2).
      std::array<double, 4> u{rng.next(), rng.next(), rng.next(), rng.next()};
      std::sort(u.begin(), u.end());
      return u[2];
    }
    case DistKind::kQuantileTable:
      return interpolate(*table_, rng.next());
  }
  throw InvariantError("unreachable distribution kind");
}

SpacingsSample::SpacingsSample(DistributionSpec spec, std::uint64_t seed,
                               std::vector<double> spacings)
    : spec_(std::move(spec)), seed_(seed), spacings_(std::move(spacings)) {
  if (spacings_.size() < 2) throw ValidationError("spacings need K >= 2");
  for (double d : spacings_) {
    if (!std::isfinite(d) || !(d > 0.0))
      throw ValidationError("every spacing must be positive");
  }
  const double defect = std::abs(kahan_total(spacings_) - 1.0);
  if (defect > 1e-12) throw ValidationError("spacings do not sum to 1");
  sorted_ = spacings_;
  std::sort(sorted_.begin(), sorted_.end(), std::greater<>());
}

SpacingsSample sample_spacings(const DistributionSpec& spec, std::size_t k,
                               std::uint64_t seed) {
  if (k < 2) throw ValidationError("spacings need K >= 2");
  UnitRng rng(seed);
  std::vector<double> variates(k - 1);
  std::vector<double> spacings(k);
  for (int attempt = 0; attempt < SpacingsSample::kMaxResampleAttempts;
       ++attempt) {
    for (double& v : variates) v = spec.draw(rng);
    std::sort(variates.begin(), variates.end());
    spacings.front() = variates.front();
    for (std::size_t i = 1; i + 1 < k; ++i)
      spacings[i] = variates[i] - variates[i - 1];
    spacings.back() = 1.0 - variates.back();
    const bool ok = std::all_of(spacings.begin(), spacings.end(),
                                [](double d) { return d > 0.0; });
    if (ok) return SpacingsSample(spec, seed, spacings);
  }
  throw ValidationError(
      "degenerate sample: tied variates produced a zero spacing in every "
      "resample attempt");
}

Keyboard::Keyboard(std::vector<double> letter_probs, double space_prob)
    : q_(std::move(letter_probs)), s_(space_prob) {
  if (q_.size() < 2) throw ValidationError("keyboard needs at least 2 letters");
  if (!(s_ > 0.0 && s_ < 1.0))
    throw ValidationError("space probability must lie strictly in (0,1)");
  for (double v : q_) {
    if (!std::isfinite(v) || !(v > 0.0))
      throw ValidationError("letter probabilities must be positive and finite");
  }
  std::sort(q_.begin(), q_.end(), std::greater<>());
  const double total = kahan_total(q_);
  const double scale = (1.0 - s_) / total;
  for (double& v : q_) v *= scale;
  log_q_.reserve(q_.size());
  for (double v : q_) log_q_.push_back(std::log(v));
  check();
}

std::span<const double> Keyboard::letter_probs() const {
  check();
  return q_;
}

void Keyboard::check() const {
  const double defect = std::abs(kahan_total(q_) + s_ - 1.0);
  if (defect > 1e-12)
    throw InvariantError("keyboard probabilities do not sum to 1");
  for (std::size_t i = 1; i < q_.size(); ++i) {
    if (q_[i] > q_[i - 1])
      throw InvariantError("keyboard letter probabilities out of order");
  }
  if (!(q_.front() < 1.0) || !(q_.back() > 0.0))
    throw InvariantError("keyboard letter probability out of (0,1)");
}

std::vector<double> Keyboard::alphas() const {
  std::vector<double> a(q_.size());
  a[0] = 1.0;
  for (std::size_t i = 1; i < q_.size(); ++i) a[i] = log_q_[i] / log_q_[0];
  return a;
}

Keyboard miller_keyboard(std::size_t k, double space_prob) {
  if (k < 2) throw ValidationError("keyboard needs at least 2 letters");
  if (!(space_prob > 0.0 && space_prob < 1.0))
    throw ValidationError("space probability must lie strictly in (0,1)");
  std::vector<double> q(k, (1.0 - space_prob) / static_cast<double>(k));
  return Keyboard(std::move(q), space_prob);
}

Keyboard keyboard_from_spacings(const SpacingsSample& sample,
                                double letter_mass) {
  if (!(letter_mass > 0.0 && letter_mass < 1.0))
    throw ValidationError("letter mass fraction c must lie strictly in (0,1)");
  std::vector<double> q;
  q.reserve(sample.size());
  for (double d : sample.sorted()) q.push_back(letter_mass * d);
  return Keyboard(std::move(q), 1.0 - letter_mass);
}

}  // namespace monkey
