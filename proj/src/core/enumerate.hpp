#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/keyboard.hpp"
#include "core/numeric.hpp"

namespace monkey {

// Ranked words in columnar form; index i holds rank i+1. Rank 1 is always
// the null word (base value 1, log 0). Letters are zero-based indices into
// the keyboard, stored flat; all base values are carried as natural-log
// values so that deep words cannot underflow.
class RankedWords {
 public:
  std::size_t size() const { return log_base_.size(); }
  double log_base(std::size_t i) const { return log_base_[i]; }
  std::uint32_t length(std::size_t i) const {
    return static_cast<std::uint32_t>(offset_[i + 1] - offset_[i]);
  }
  std::span<const std::uint32_t> word(std::size_t i) const {
    return {letters_.data() + offset_[i], letters_.data() + offset_[i + 1]};
  }

 private:
  friend class RankedWordsBuilder;
  std::vector<double> log_base_;
  std::vector<std::uint64_t> offset_;  // size() + 1 entries
  std::vector<std::uint32_t> letters_;
};

class RankedWordsBuilder {
 public:
  explicit RankedWordsBuilder(std::uint64_t expected);
  void append(double log_base, std::span<const std::uint32_t> letters);
  RankedWords take();

 private:
  RankedWords out_;
};

struct TopNOptions {
  // Frontier entry budget. Each popped word pushes K children, so rank N at
  // alphabet size K needs about N*(K-1) entries; the default comfortably
  // covers the 475,255-point, K=26 reference run.
  std::uint64_t max_frontier = std::uint64_t{1} << 27;
};

// The N largest base values in the total order (log base descending, ties
// within kLogTieEps broken by dictionary order on letter indices), ranks
// 1..N. Best-first expansion from the null word: extending a word only
// shrinks its base value and a prefix precedes its extensions in dictionary
// order, so the frontier always contains the next word of the order.
RankedWords top_n(const Keyboard& kb, std::uint64_t n,
                  const TopNOptions& options = {});

// Independent oracle for top_n: enumerates every word of length <= max_len,
// sorts by the same total order, returns the first n. Fails with "too
// large" when the full enumeration would exceed an internal guard, and with
// "truncation unsafe" when the base value at rank n does not exceed
// q1^max_len (in which case words longer than max_len could be missing from
// the prefix).
RankedWords brute_force_top_n(const Keyboard& kb, std::uint64_t n,
                              std::uint32_t max_len);

struct CountOptions {
  double t_cap = 30.0;  // counts grow like R0^t; refuse far-out thresholds
  std::uint64_t node_budget = 100'000'000;  // pruned-enumeration size guard
};

struct CountReport {
  double t = 0.0;
  std::uint64_t n = 0;      // words with radix-q1 log base in (t-1, t]
  std::uint64_t n_cum = 0;  // words with radix-q1 log base <= t
};

// Exact integer counts by pruned depth-first enumeration of all alpha-sums
// <= t. Letters with equal probability are grouped, so the equal-probability
// keyboard costs O(t) nodes instead of O(K^t). 64-bit accumulation with
// explicit overflow checks; overflow raises ResourceError rather than
// wrapping.
CountReport count_words(const Keyboard& kb, double t,
                        const CountOptions& options = {});

struct BoundRow {
  double t = 0.0;
  std::uint64_t n = 0;
  std::uint64_t n_cum = 0;
  double lower = 0.0;  // b * R0^t, must stay strictly below n
  double upper = 0.0;  // R0^t, must stay at or above n
  bool ok = false;
};

struct BoundReport {
  std::vector<BoundRow> rows;
  bool all_ok = true;
};

// Checks b*R0^t < N(t) <= R0^t for every threshold. The lower comparison is
// strict; the upper one allows 1e-9 relative slack because it is tight
// (exact equality) at integer t on equal-probability keyboards.
BoundReport verify_csiszar_bounds(const Keyboard& kb,
                                  std::span<const double> ts,
                                  const CountOptions& options = {});

struct RankBoundRow {
  std::uint64_t rank = 0;
  double log_base = 0.0;
  double lower = 0.0;  // C1 * B_r^{-1/beta}
  double upper = 0.0;  // C2 * B_r^{-1/beta}
  bool ok = false;
};

struct RankBoundReport {
  std::vector<RankBoundRow> rows;
  bool all_ok = true;
};

// Checks C1*B_r^{-1/beta} < r < C2*B_r^{-1/beta} for every entry, evaluated
// in the log domain. The inequality is proven for r >= 2; rank 1 reduces to
// C1 < 1 < C2 and is reported alongside.
RankBoundReport verify_rank_bounds(const Keyboard& kb,
                                   const RankedWords& ranked);

}  // namespace monkey
