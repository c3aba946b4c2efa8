#include "core/serialize.hpp"

#include <cstdio>
#include <span>

namespace monkey {

namespace {

std::string array_json(std::span<const double> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += fmt17(xs[i]);
  }
  out += "]";
  return out;
}

}  // namespace

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_json(const Keyboard& kb) {
  return "{\"q\": " + array_json(kb.letter_probs()) +
         ", \"s\": " + fmt17(kb.space_prob()) + "}";
}

std::string to_json(const Keyboard& kb, const std::string& spec_name,
                    std::uint64_t seed) {
  return "{\"q\": " + array_json(kb.letter_probs()) +
         ", \"s\": " + fmt17(kb.space_prob()) + ", \"spec\": \"" + spec_name +
         "\", \"seed\": " + std::to_string(seed) + "}";
}

std::string to_json(const SpacingsSample& sample) {
  return "{\"spec\": \"" + sample.spec().name() +
         "\", \"K\": " + std::to_string(sample.size()) +
         ", \"seed\": " + std::to_string(sample.seed()) +
         ", \"spacings\": " + array_json(sample.values()) +
         ", \"sorted_spacings\": " + array_json(sample.sorted()) + "}";
}

std::string to_json(const ExponentReport& report) {
  return "{\"R0\": " + fmt17(report.r0) + ", \"beta\": " + fmt17(report.beta) +
         ", \"b\": " + fmt17(report.b) + ", \"C1\": " + fmt17(report.c1) +
         ", \"C2\": " + fmt17(report.c2) +
         ", \"residual\": " + fmt17(report.residual) + "}";
}

}  // namespace monkey
