#include "core/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "core/errors.hpp"
#include "core/exponent.hpp"
#include "core/numeric.hpp"

namespace monkey {

namespace {

constexpr std::uint32_t kRoot = 0xffffffffu;

// Popped words, in rank order. Frontier candidates reference their parent
// here; a candidate's full letter sequence is its parent chain plus its own
// last letter.
struct ArenaNode {
  double log_base;
  std::uint32_t parent;
  std::uint32_t letter;
  std::uint32_t length;
};

struct Candidate {
  double log_base;
  std::uint32_t parent;  // kRoot only for the initial null word
  std::uint32_t letter;
};

void fill_letters(const std::vector<ArenaNode>& arena, const Candidate& c,
                  std::uint32_t length, std::vector<std::uint32_t>& out) {
  out.resize(length);
  if (length == 0) return;
  std::size_t pos = length;
  out[--pos] = c.letter;
  std::uint32_t p = c.parent;
  while (p != kRoot && arena[p].length > 0) {
    out[--pos] = arena[p].letter;
    p = arena[p].parent;
  }
}

// Heap "less": true when a ranks after b. Ties within kLogTieEps fall back
// to dictionary order on the letter sequences (a prefix precedes its
// extensions), which is exactly how the brute-force oracle sorts.
struct CandidateAfter {
  const std::vector<ArenaNode>* arena;

  std::uint32_t length_of(const Candidate& c) const {
    return c.parent == kRoot ? 0u : (*arena)[c.parent].length + 1u;
  }

  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.log_base < b.log_base - kLogTieEps) return true;
    if (b.log_base < a.log_base - kLogTieEps) return false;
    thread_local std::vector<std::uint32_t> wa, wb;
    fill_letters(*arena, a, length_of(a), wa);
    fill_letters(*arena, b, length_of(b), wb);
    return std::lexicographical_compare(wb.begin(), wb.end(), wa.begin(),
                                        wa.end());
  }
};

}  // namespace

RankedWordsBuilder::RankedWordsBuilder(std::uint64_t expected) {
  out_.log_base_.reserve(expected);
  out_.offset_.reserve(expected + 1);
  out_.offset_.push_back(0);
}

void RankedWordsBuilder::append(double log_base,
                                std::span<const std::uint32_t> letters) {
  out_.log_base_.push_back(log_base);
  out_.letters_.insert(out_.letters_.end(), letters.begin(), letters.end());
  out_.offset_.push_back(out_.letters_.size());
}

RankedWords RankedWordsBuilder::take() { return std::move(out_); }

RankedWords top_n(const Keyboard& kb, std::uint64_t n,
                  const TopNOptions& options) {
  if (n < 1) throw ValidationError("top_n needs n >= 1");
  if (n >= kRoot)  // ranked words are addressed with 32-bit arena indices
    throw ValidationError("top_n is limited to 2^32 - 2 ranks");
  kb.check();
  const auto log_q = kb.log_probs();
  const std::uint32_t k = static_cast<std::uint32_t>(kb.size());

  std::vector<ArenaNode> arena;
  arena.reserve(n);
  CandidateAfter after{&arena};
  std::priority_queue<Candidate, std::vector<Candidate>, CandidateAfter>
      frontier(after);
  frontier.push({0.0, kRoot, 0});

  while (arena.size() < n) {
    const Candidate best = frontier.top();
    frontier.pop();
    const std::uint32_t length = after.length_of(best);
    arena.push_back({best.log_base, best.parent, best.letter, length});
    if (arena.size() == n) break;
    if (frontier.size() + k > options.max_frontier) {
      throw ResourceError(
          "top_n frontier would exceed its memory budget of " +
          std::to_string(options.max_frontier) +
          " entries; raise TopNOptions::max_frontier");
    }
    const std::uint32_t me = static_cast<std::uint32_t>(arena.size() - 1);
    for (std::uint32_t letter = 0; letter < k; ++letter)
      frontier.push({best.log_base + log_q[letter], me, letter});
  }

  RankedWordsBuilder builder(n);
  std::vector<std::uint32_t> scratch;
  double prev = 1.0;  // above any log base
  for (std::size_t i = 0; i < arena.size(); ++i) {
    const ArenaNode& node = arena[i];
    if (i > 0 && node.log_base > prev + kLogTieEps)
      throw InvariantError("top_n produced an out-of-order base value");
    prev = node.log_base;
    fill_letters(arena, {node.log_base, node.parent, node.letter}, node.length,
                 scratch);
    builder.append(node.log_base, scratch);
  }
  return builder.take();
}

RankedWords brute_force_top_n(const Keyboard& kb, std::uint64_t n,
                              std::uint32_t max_len) {
  if (n < 1) throw ValidationError("brute_force_top_n needs n >= 1");
  kb.check();
  const auto log_q = kb.log_probs();
  const std::size_t k = kb.size();

  constexpr std::uint64_t kMaxWords = 10'000'000;
  std::uint64_t total = 1, tier = 1;
  for (std::uint32_t j = 0; j < max_len; ++j) {
    tier *= k;
    total += tier;
    if (total > kMaxWords)
      throw ResourceError("too large: exhaustive enumeration over " +
                          std::to_string(k) + "^" + std::to_string(max_len) +
                          " words exceeds the guard");
  }

  // Depth-first generation visits words in dictionary order, so the
  // generation index doubles as the canonical tie-break key.
  std::vector<double> log_base;
  std::vector<std::uint64_t> offset{0};
  std::vector<std::uint32_t> letters;
  log_base.reserve(total);
  offset.reserve(total + 1);
  std::vector<std::uint32_t> word;
  std::function<void(double)> emit = [&](double lb) {
    log_base.push_back(lb);
    letters.insert(letters.end(), word.begin(), word.end());
    offset.push_back(letters.size());
    if (word.size() == max_len) return;
    for (std::uint32_t letter = 0; letter < k; ++letter) {
      word.push_back(letter);
      emit(lb + log_q[letter]);
      word.pop_back();
    }
  };
  emit(0.0);

  if (n > log_base.size())
    throw ValidationError(
        "truncation unsafe: fewer than n words of length <= max_len exist");

  std::vector<std::uint64_t> order(log_base.size());
  std::iota(order.begin(), order.end(), 0);
  // Exact sort first (a strict weak order even in the face of near ties),
  // then re-sort each chained tie group by generation index.
  std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
    if (log_base[a] != log_base[b]) return log_base[a] > log_base[b];
    return a < b;
  });
  std::size_t lo = 0;
  while (lo < order.size()) {
    std::size_t hi = lo + 1;
    while (hi < order.size() &&
           log_base[order[hi - 1]] - log_base[order[hi]] <= kLogTieEps) {
      ++hi;
    }
    if (hi - lo > 1) std::sort(order.begin() + lo, order.begin() + hi);
    lo = hi;
  }

  // Everything not enumerated has base value at most q1^(max_len+1); the
  // stated contract demands the stronger margin B_n > q1^max_len.
  const double floor_log = static_cast<double>(max_len) * log_q.front();
  if (log_base[order[n - 1]] <= floor_log)
    throw ValidationError(
        "truncation unsafe: base value at rank n does not exceed q1^max_len");

  RankedWordsBuilder builder(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t w = order[i];
    builder.append(log_base[w],
                   {letters.data() + offset[w], letters.data() + offset[w + 1]});
  }
  return builder.take();
}

namespace {

// One pruned DFS over letter multisets answers every cumulative-count query
// at once. Letters with bitwise-equal probability are merged into groups;
// a multiset with n letters, m_g of them from group g of size c_g, stands
// for multinomial(n; m) * prod c_g^{m_g} distinct words, maintained
// incrementally with exact 64-bit arithmetic.
class CountGrid {
 public:
  CountGrid(const Keyboard& kb, std::span<const double> ts,
            const CountOptions& options) {
    kb.check();
    for (double t : ts) {
      if (!std::isfinite(t) || t < 0.0)
        throw ValidationError("count thresholds must be finite and >= 0");
      if (t > options.t_cap) {
        const double r0 = solve_root(kb).r0;
        char est[64];
        std::snprintf(est, sizeof est, "%.3g", std::pow(r0, t));
        throw ResourceError("count threshold t=" + std::to_string(t) +
                            " exceeds the cap " +
                            std::to_string(options.t_cap) +
                            "; roughly R0^t = " + est + " words");
      }
      queries_.push_back(t);
      queries_.push_back(t - 1.0);
    }
    std::sort(queries_.begin(), queries_.end());
    queries_.erase(std::unique(queries_.begin(), queries_.end()),
                   queries_.end());
    cum_.assign(queries_.size(), 0);
    if (queries_.empty()) return;

    // Group letters by exact alpha value (equal q gives bitwise-equal alpha).
    const auto alphas = kb.alphas();
    for (double a : alphas) {
      if (!groups_.empty() && groups_.back().alpha == a) {
        ++groups_.back().letters;
      } else {
        groups_.push_back({a, 1});
      }
    }

    t_max_eps_ = queries_.back() + kLogTieEps;
    budget_ = options.node_budget;
    counts_.assign(groups_.size(), 0);
    record(0.0, 1);  // the null word
    walk(0, 0.0, 0, 1);
    // Suffix accumulation: a sum recorded at slot i belongs to every
    // query >= that sum.
    std::uint64_t running = 0;
    for (std::size_t i = 0; i < cum_.size(); ++i) {
      if (__builtin_add_overflow(running, cum_[i], &running))
        throw ResourceError("word count exceeds 64-bit range");
      cum_[i] = running;
    }
  }

  // Cumulative count at a registered threshold (bitwise match required).
  std::uint64_t cum(double t) const {
    auto it = std::upper_bound(queries_.begin(), queries_.end(), t);
    if (it == queries_.begin()) return 0;
    if (*(it - 1) != t)
      throw InvariantError("count query for an unregistered threshold");
    return cum_[static_cast<std::size_t>(it - queries_.begin()) - 1];
  }

 private:
  struct Group {
    double alpha;
    std::uint64_t letters;
  };

  void record(double sum, std::uint64_t ways) {
    // First query that covers this sum, honoring the tie slack on <=.
    auto it = std::lower_bound(queries_.begin(), queries_.end(),
                               sum - kLogTieEps);
    if (it == queries_.end()) return;
    const std::size_t slot = static_cast<std::size_t>(it - queries_.begin());
    if (__builtin_add_overflow(cum_[slot], ways, &cum_[slot]))
      throw ResourceError("word count exceeds 64-bit range");
  }

  void walk(std::size_t first_group, double sum, std::uint64_t n_letters,
            std::uint64_t ways) {
    for (std::size_t g = first_group; g < groups_.size(); ++g) {
      const double next = sum + groups_[g].alpha;
      if (next > t_max_eps_) break;  // alphas ascend; later groups only grow
      if (budget_-- == 0)
        throw ResourceError(
            "count enumeration exceeded its node budget; lower t or raise "
            "CountOptions::node_budget");
      std::uint64_t w = ways;
      if (__builtin_mul_overflow(w, n_letters + 1, &w))
        throw ResourceError("word count exceeds 64-bit range");
      w /= counts_[g] + 1;  // exact: multinomials stay integral
      if (__builtin_mul_overflow(w, groups_[g].letters, &w))
        throw ResourceError("word count exceeds 64-bit range");
      record(next, w);
      ++counts_[g];
      walk(g, next, n_letters + 1, w);
      --counts_[g];
    }
  }

  std::vector<double> queries_;
  std::vector<std::uint64_t> cum_;
  std::vector<Group> groups_;
  std::vector<std::uint64_t> counts_;
  double t_max_eps_ = 0.0;
  std::uint64_t budget_ = 0;
};

}  // namespace

CountReport count_words(const Keyboard& kb, double t,
                        const CountOptions& options) {
  const CountGrid grid(kb, {&t, 1}, options);
  CountReport rep;
  rep.t = t;
  rep.n_cum = grid.cum(t);
  rep.n = rep.n_cum - grid.cum(t - 1.0);
  return rep;
}

BoundReport verify_csiszar_bounds(const Keyboard& kb,
                                  std::span<const double> ts,
                                  const CountOptions& options) {
  const ExponentReport exp_rep = solve_root(kb);
  const CountGrid grid(kb, ts, options);
  const double log_r0 = std::log(exp_rep.r0);

  BoundReport rep;
  rep.rows.reserve(ts.size());
  for (double t : ts) {
    BoundRow row;
    row.t = t;
    row.n_cum = grid.cum(t);
    row.n = row.n_cum - grid.cum(t - 1.0);
    row.upper = std::exp(t * log_r0);
    row.lower = exp_rep.b * row.upper;
    const double n = static_cast<double>(row.n);
    // Strict below, tight-at-equality above (with relative slack for the
    // exact-power cases where R0^t rounds a hair under the integer count).
    row.ok = row.lower < n && n <= row.upper * (1.0 + 1e-9);
    rep.all_ok = rep.all_ok && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

RankBoundReport verify_rank_bounds(const Keyboard& kb,
                                   const RankedWords& ranked) {
  const ExponentReport exp_rep = solve_root(kb);
  const double log_c1 = std::log(exp_rep.c1);
  const double log_c2 = std::log(exp_rep.c2);

  RankBoundReport rep;
  rep.rows.reserve(ranked.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    RankBoundRow row;
    row.rank = i + 1;
    row.log_base = ranked.log_base(i);
    const double spread = -row.log_base / exp_rep.beta;  // log B^{-1/beta}
    const double lower_log = log_c1 + spread;
    const double upper_log = log_c2 + spread;
    row.lower = std::exp(lower_log);
    row.upper = std::exp(upper_log);
    const double log_rank = std::log(static_cast<double>(row.rank));
    row.ok = lower_log < log_rank && log_rank < upper_log;
    rep.all_ok = rep.all_ok && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace monkey
