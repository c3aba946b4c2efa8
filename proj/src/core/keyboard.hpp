#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/rng.hpp"

namespace monkey {

enum class DistKind { kUniform, kBetaThreeTwo, kQuantileTable };

// Monotone quantile grid mapping [0,1] onto [0,1], used to sample arbitrary
// spacing distributions by inverse-CDF interpolation. Both coordinates must
// be strictly increasing with endpoints (0,0) and (1,1). Whether the derived
// inverse-CDF slope stays bounded away from zero (the condition the
// log-spacings limit theorem needs) is up to the caller; it cannot be
// checked from finitely many grid points.
struct QuantileTable {
  std::vector<double> prob;
  std::vector<double> value;
};

class DistributionSpec {
 public:
  static DistributionSpec uniform();
  static DistributionSpec beta_three_two();
  static DistributionSpec quantile_table(QuantileTable table);

  DistKind kind() const { return kind_; }
  const QuantileTable& table() const;

  // Short machine-readable name: "uniform", "beta32" or "table".
  std::string name() const;

  // One variate on [0,1). Beta(3,2) uses the exact order-statistic
  // construction (third smallest of four uniforms), not numeric inversion.
  double draw(UnitRng& rng) const;

 private:
  DistributionSpec(DistKind kind, std::optional<QuantileTable> table);

  DistKind kind_;
  std::optional<QuantileTable> table_;
};

// K positive spacings of the unit interval induced by K-1 variates drawn
// from a spacing distribution ("broken stick"). Immutable after
// construction; safe to share across threads.
class SpacingsSample {
 public:
  static constexpr int kMaxResampleAttempts = 8;

  // Wraps explicit spacings (all positive, summing to 1 within 1e-12).
  // sample_spacings is the usual entry point; this exists for callers that
  // bring their own division of the interval.
  SpacingsSample(DistributionSpec spec, std::uint64_t seed,
                 std::vector<double> spacings);

  const DistributionSpec& spec() const { return spec_; }
  std::size_t size() const { return spacings_.size(); }
  std::uint64_t seed() const { return seed_; }

  // Spacings in positional order (left to right along the interval).
  std::span<const double> values() const { return spacings_; }
  // The same spacings sorted non-increasing.
  std::span<const double> sorted() const { return sorted_; }

 private:
  DistributionSpec spec_;
  std::uint64_t seed_;
  std::vector<double> spacings_;
  std::vector<double> sorted_;
};

// Draws K-1 variates, sorts them, and returns the K successive gaps
// (including both boundary segments). Deterministic in (spec, k, seed).
// Tied variates would produce a zero spacing; the draw is retried up to
// kMaxResampleAttempts times on the same stream, then fails loudly.
SpacingsSample sample_spacings(const DistributionSpec& spec, std::size_t k,
                               std::uint64_t seed);

// The monkey keyboard: K letter probabilities in non-increasing order plus
// one space probability, with q1 + ... + qK + s == 1. Construction sorts
// and renormalizes the letter mass; accessors re-assert the invariants.
class Keyboard {
 public:
  Keyboard(std::vector<double> letter_probs, double space_prob);

  std::size_t size() const { return q_.size(); }
  double space_prob() const { return s_; }

  std::span<const double> letter_probs() const;
  std::span<const double> log_probs() const { return log_q_; }

  // Exponents a_i with q_i == q1^{a_i}; a_1 == 1 exactly and the vector is
  // non-decreasing.
  std::vector<double> alphas() const;

  void check() const;

 private:
  std::vector<double> q_;      // non-increasing
  std::vector<double> log_q_;  // cached natural logs of q_
  double s_;
};

// All K letters share probability (1-s)/K.
Keyboard miller_keyboard(std::size_t k, double space_prob);

// q_i = c * D_{i:K} (descending spacings), s = 1 - c, for 0 < c < 1.
Keyboard keyboard_from_spacings(const SpacingsSample& sample,
                                double letter_mass);

}  // namespace monkey
