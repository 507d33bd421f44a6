#pragma once

#include "shg/series.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shg::cli {

// Exit codes: 0 success, 1 validation mismatch, 2 invalid configuration,
// 3 unwritable output.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

struct Mismatch {
  int target_v = 0;
  int gamma_power = 0;
  Rational assembled;
  Rational reference;
};

/// First coefficient mismatch between two term tables (absent keys count
/// as zero), or nullopt when they agree exactly.
std::optional<Mismatch> first_mismatch(
    const std::map<TermKey, Rational>& assembled,
    const std::map<TermKey, Rational>& reference);

/// Parses a "lo:hi:steps" sweep into the inclusive evaluation grid.
std::vector<double> parse_gamma_sweep(const std::string& text);

/// Reads a diagonal-weights JSON file ({"weights": [{"n":..,"c":..}, ...]}).
InputStateWeights load_weights_file(const std::string& path);

}  // namespace shg::cli
