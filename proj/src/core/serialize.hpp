#pragma once

#include <string>

#include "core/exponent.hpp"
#include "core/keyboard.hpp"

namespace monkey {

// All numeric JSON output uses 17 significant digits so every double
// round-trips exactly through text.
std::string fmt17(double x);

// {"q": [...], "s": x}
std::string to_json(const Keyboard& kb);
// {"q": [...], "s": x, "spec": "...", "seed": n}
std::string to_json(const Keyboard& kb, const std::string& spec_name,
                    std::uint64_t seed);
// {"spec": "...", "K": n, "seed": n, "spacings": [...], "sorted_spacings": [...]}
std::string to_json(const SpacingsSample& sample);
// {"R0": ..., "beta": ..., "b": ..., "C1": ..., "C2": ..., "residual": ...}
std::string to_json(const ExponentReport& report);

}  // namespace monkey
