#include "shg/fock.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace shg {

std::pair<Rational, TwoModeFock> apply_ladder(TwoModeFock state, Mode mode,
                                              LadderKind kind, int count) {
  if (count < 0) throw std::invalid_argument("apply_ladder: negative count");
  int& occupation = (mode == Mode::pump) ? state.pump_count : state.sh_count;
  Integer squared;
  if (kind == LadderKind::annihilate) {
    squared = falling_factorial(occupation, count);
    occupation = std::max(0, occupation - count);
  } else {
    // a^dag^c |m> = sqrt((m+1)...(m+c)) |m+c>
    squared = falling_factorial(occupation + count, count);
    occupation += count;
  }
  return {Rational(squared), state};
}

RadicalAmplitude::RadicalAmplitude(int origin_n, int net_v, Rational cofactor)
    : origin_n_(origin_n), net_v_(net_v), cofactor_(std::move(cofactor)) {
  if (origin_n_ < 0 || net_v_ < 0)
    throw std::invalid_argument("RadicalAmplitude: negative photon count");
  if (cofactor_ < 0)
    throw std::invalid_argument("RadicalAmplitude: negative cofactor");
  // Value is 0 iff cofactor is 0: a vanished radical zeroes the cofactor.
  if (radical_squared() == 0) cofactor_ = 0;
}

RadicalAmplitude RadicalAmplitude::from_squared(int origin_n, int net_v,
                                                const Rational& squared) {
  RadicalAmplitude amp(origin_n, net_v, Rational(0));
  if (squared == 0) return amp;
  const Rational rad2 = amp.radical_squared();
  if (rad2 == 0)
    throw std::invalid_argument(
        "RadicalAmplitude: nonzero square over a vanished radical");
  const auto cof = exact_sqrt(squared / rad2);
  if (!cof)
    throw std::invalid_argument(
        "RadicalAmplitude: square is not rational^2 times the (n,v) radical");
  amp.cofactor_ = *cof;
  return amp;
}

Rational RadicalAmplitude::radical_squared() const {
  return Rational(factorial(net_v_) *
                  falling_factorial(origin_n_, 2LL * net_v_));
}

Rational RadicalAmplitude::squared() const {
  return cofactor_ * cofactor_ * radical_squared();
}

Rational radical_mul(const RadicalAmplitude& a, const RadicalAmplitude& b) {
  if (a.origin_n() != b.origin_n() || a.net_v() != b.net_v())
    throw MismatchedRadical(
        "radical_mul: amplitudes over (n=" + std::to_string(a.origin_n()) +
        ",v=" + std::to_string(a.net_v()) + ") and (n=" +
        std::to_string(b.origin_n()) + ",v=" + std::to_string(b.net_v()) +
        ") overlap orthogonal outputs");
  return a.cofactor() * b.cofactor() * a.radical_squared();
}

}  // namespace shg
