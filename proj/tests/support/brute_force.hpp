#pragma once

// Test-side oracles: elementary-ladder-step application of raw operator
// words. Everything here works one creation/annihilation operator at a
// time via fock_core, independent of the block-factor formulas and of the
// process enumerator it is used to check.

#include "shg/fock.hpp"
#include "shg/process.hpp"

#include <utility>
#include <vector>

namespace shg::testing {

// Applies the word vertex by vertex to |n,0>, one ladder operator at a
// time. Returns the squared amplitude and the final state.
inline std::pair<Rational, TwoModeFock> apply_word_by_ladder(
    const std::vector<Vertex>& word, int n) {
  Rational squared = 1;
  TwoModeFock state{n, 0};
  for (const Vertex vertex : word) {
    if (vertex == Vertex::sh_create) {
      auto [s1, after_pump] =
          apply_ladder(state, Mode::pump, LadderKind::annihilate, 2);
      auto [s2, after_sh] =
          apply_ladder(after_pump, Mode::sh, LadderKind::create, 1);
      squared *= s1 * s2;
      state = after_sh;
    } else {
      auto [s1, after_pump] =
          apply_ladder(state, Mode::pump, LadderKind::create, 2);
      auto [s2, after_sh] =
          apply_ladder(after_pump, Mode::sh, LadderKind::annihilate, 1);
      squared *= s1 * s2;
      state = after_sh;
    }
    if (squared == 0) return {Rational(0), state};
  }
  return {squared, state};
}

// All 2^r operator words of length r, in binary counting order with
// sh_create = 0 bit at the earliest position.
inline std::vector<std::vector<Vertex>> all_words(int length) {
  std::vector<std::vector<Vertex>> words;
  words.reserve(static_cast<std::size_t>(1) << length);
  for (unsigned long mask = 0; mask < (1ul << length); ++mask) {
    std::vector<Vertex> word(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i)
      word[static_cast<std::size_t>(i)] = (mask >> i) & 1u
                                              ? Vertex::sh_annihilate
                                              : Vertex::sh_create;
    words.push_back(std::move(word));
  }
  return words;
}

// The independent admissibility filter: the running SH count stays >= 0.
inline bool running_count_ok(const std::vector<Vertex>& word) {
  int count = 0;
  for (const Vertex vertex : word) {
    count += (vertex == Vertex::sh_create) ? 1 : -1;
    if (count < 0) return false;
  }
  return true;
}

inline int word_net_sh(const std::vector<Vertex>& word) {
  int count = 0;
  for (const Vertex vertex : word)
    count += (vertex == Vertex::sh_create) ? 1 : -1;
  return count;
}

}  // namespace shg::testing
