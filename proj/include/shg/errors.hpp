#pragma once

#include <stdexcept>

namespace shg {

// Overlap of radical amplitudes taken over different (n, v); the states are
// orthogonal, so the product is not representable as a single rational.
struct MismatchedRadical : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Process whose operator word annihilates the SH register (running SH count
// goes negative).
struct InadmissibleProcess : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Diagram pair whose two sides output different net SH photon numbers.
struct InvalidPair : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyWeights : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mandel Q requested for a distribution with zero mean.
struct UndefinedQ : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace shg
