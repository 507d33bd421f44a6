#pragma once

#include "shg/errors.hpp"
#include "shg/numeric.hpp"

#include <compare>
#include <string>
#include <utility>

namespace shg {

enum class Mode { pump, sh };
enum class LadderKind { create, annihilate };

// Two-mode Fock state |pump_count, sh_count>. States reachable from |n,0>
// under the SHG interaction satisfy pump_count = n - 2*sh_count.
struct TwoModeFock {
  int pump_count = 0;
  int sh_count = 0;

  friend bool operator==(const TwoModeFock&, const TwoModeFock&) = default;
  friend auto operator<=>(const TwoModeFock&, const TwoModeFock&) = default;
};

/// Applies count equal ladder operators to one mode and returns the squared
/// prefactor together with the shifted state.
///
/// Annihilation past the vacuum yields squared amplitude 0; the returned
/// occupation is clamped at 0 in that case (harmless, the amplitude already
/// vanished).
std::pair<Rational, TwoModeFock> apply_ladder(TwoModeFock state, Mode mode,
                                              LadderKind kind, int count);

// Exact amplitude f = cofactor * sqrt(v! * n!/(n-2v)!) for a process taking
// |n,0> to |n-2v, v>. Any two processes connecting the same pair of states
// share the radical, so all physical overlaps resolve to plain rationals.
class RadicalAmplitude {
 public:
  RadicalAmplitude(int origin_n, int net_v, Rational cofactor);

  /// Builds the amplitude whose square is `squared`. Throws
  /// std::invalid_argument when `squared` is not cofactor^2 times the
  /// (n, v) radical for any rational cofactor.
  static RadicalAmplitude from_squared(int origin_n, int net_v,
                                       const Rational& squared);

  int origin_n() const { return origin_n_; }
  int net_v() const { return net_v_; }
  const Rational& cofactor() const { return cofactor_; }

  /// v! * n!/(n-2v)!  (0 when n < 2v).
  Rational radical_squared() const;
  Rational squared() const;
  bool is_zero() const { return cofactor_ == 0; }

 private:
  int origin_n_;
  int net_v_;
  Rational cofactor_;
};

/// Exact product of two amplitudes over the same (n, v): the shared radical
/// squares away and the result is rational. Throws MismatchedRadical when
/// the amplitudes belong to orthogonal output states.
Rational radical_mul(const RadicalAmplitude& a, const RadicalAmplitude& b);

}  // namespace shg
