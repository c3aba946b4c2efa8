#pragma once

#include <span>

namespace monkey {

// Log-domain width within which two base values are treated as tied and
// ordered canonically. Exact ties (equal-probability keyboards, permuted
// letter products) land within a few ulp of each other; genuinely distinct
// values sit far outside this window for any realistic keyboard.
inline constexpr double kLogTieEps = 1e-9;

// Compensated (Kahan) summation. Keeps invariant checks on long probability
// vectors well inside the documented 1e-12 tolerances.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

inline double kahan_total(std::span<const double> xs) {
  KahanSum k;
  for (double x : xs) k.add(x);
  return k.value();
}

}  // namespace monkey
