#include "core/exponent.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/numeric.hpp"

namespace monkey {

namespace {

double residual_at(std::span<const double> log_q, double u) {
  KahanSum s;
  for (double lq : log_q) s.add(std::exp(u * lq));
  return s.value() - 1.0;
}

double derivative_at(std::span<const double> log_q, double u) {
  KahanSum s;
  for (double lq : log_q) s.add(lq * std::exp(u * lq));
  return s.value();
}

}  // namespace

ExponentReport solve_root(const Keyboard& kb) {
  kb.check();
  const auto log_q = kb.log_probs();

  // Bracket (0,1) is a priori valid: residual is K-1 > 0 at 0+ and -s < 0
  // at 1. Bisect on the sign, then polish with Newton.
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 60 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (residual_at(log_q, mid) > 0.0 ? lo : hi) = mid;
  }
  double u = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double g = residual_at(log_q, u);
    const double dg = derivative_at(log_q, u);
    if (dg == 0.0) break;
    const double next = u - g / dg;
    if (!(next > 0.0 && next < 1.0)) break;
    if (next == u) break;
    u = next;
  }

  ExponentReport rep;
  rep.u = u;
  rep.beta = 1.0 / u;
  rep.r0 = std::exp(-u * log_q.front());
  rep.residual = residual_at(log_q, u);
  rep.alphas = kb.alphas();
  rep.b = compute_b(rep.r0, rep.alphas);
  rep.c1 = rep.b / rep.r0;
  rep.c2 = rep.r0 / (rep.r0 - 1.0);

  if (std::abs(rep.residual) > 1e-13)
    throw InvariantError("root solve left a residual above 1e-13");
  if (!(rep.beta > 1.0))
    throw InvariantError("solved exponent beta is not strictly above 1");
  return rep;
}

double compute_b(double r0, std::span<const double> alphas) {
  if (!(r0 > 1.0)) throw ValidationError("compute_b needs R0 > 1");
  if (alphas.empty() || std::abs(alphas.front() - 1.0) > 1e-12)
    throw ValidationError("alpha vector must start at 1");
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    if (alphas[i] < alphas[i - 1])
      throw ValidationError("alpha vector must be non-decreasing");
  }

  const double a_max = alphas.back();
  if (a_max > 1e4)
    throw ResourceError("alpha range too large for the b recursion");

  const double log_r0 = std::log(r0);
  double b = 1.0 / r0;
  // b_{i+1} = b_i once every alpha_j <= i, i.e. from i = ceil(alpha_K) on.
  // The boundary slack keeps integer-valued alphas computed in floating
  // point (e.g. q = q1^2 exactly) inside the partial sums they belong to.
  const int last = static_cast<int>(std::ceil(a_max - kLogTieEps));
  for (int i = 1; i < last; ++i) {
    KahanSum partial;
    for (double a : alphas) {
      if (a > static_cast<double>(i) + kLogTieEps) break;  // sorted
      partial.add(std::exp(-a * log_r0));
    }
    b *= partial.value();
  }
  if (!(b > 0.0 && b < 1.0))
    throw InvariantError("b recursion left (0,1)");
  return b;
}

double miller_exponent(std::size_t k, double space_prob) {
  if (k < 2) throw ValidationError("keyboard needs at least 2 letters");
  if (!(space_prob > 0.0 && space_prob < 1.0))
    throw ValidationError("space probability must lie strictly in (0,1)");
  return std::log(1.0 - space_prob) / std::log(static_cast<double>(k)) - 1.0;
}

}  // namespace monkey
