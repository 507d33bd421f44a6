#pragma once

#include "shg/fock.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace shg {

// Elementary process encoded by its vertex blocks (k_1,...,k_l). Odd blocks
// (1-based) are SH-creation blocks, each unit applying a1^2 a2^dag; even
// blocks are SH-annihilation blocks, each unit applying (a1^dag)^2 a2.
// Consecutive identical vertices are merged by construction, so every block
// is >= 1. The empty vector is the identity process.
class ProcessVector {
 public:
  ProcessVector() = default;
  explicit ProcessVector(std::vector<int> blocks);

  const std::vector<int>& blocks() const { return blocks_; }
  bool is_identity() const { return blocks_.empty(); }

  /// Perturbative order r = sum of blocks.
  int order() const;
  /// Number of blocks l.
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// "(2,1,4,1)"; identity renders as "()".
  std::string to_string() const;

  friend bool operator==(const ProcessVector&, const ProcessVector&) = default;
  // (order, blocks) lexicographic; this is the canonical enumeration order.
  friend std::strong_ordering operator<=>(const ProcessVector& a,
                                          const ProcessVector& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<int> blocks_;
};

/// Alternating partial sums K_j = k_1 - k_2 + k_3 - ... : the running net
/// SH photon count after each block. Empty input yields an empty list.
std::vector<int> partial_sums(const ProcessVector& k);

/// True iff the running SH count never goes negative (all K_j >= 0), i.e.
/// the operator word does not annihilate the SH register. The identity
/// process is admissible.
bool is_admissible(const ProcessVector& k);

/// K_l: net SH photons created by the full process (0 for the identity).
int net_sh_photons(const ProcessVector& k);

/// max_j K_j: the peak SH occupation along the process (0 for the identity).
/// The amplitude at pump input n vanishes exactly when n < 2 * peak.
int peak_sh_photons(const ProcessVector& k);

/// Squared vertex factor of SH-creation block j (odd, 1-based):
/// K_j!/(K_j-k_j)! * [n-2(K_j-k_j)]!/(n-2K_j)!. Zero when n < 2K_j.
Rational sh_creation_factor_sq(int n, int j, const ProcessVector& k);

/// Squared vertex factor of SH-annihilation block j (even):
/// (K_j+k_j)!/K_j! * (n-2K_j)!/[n-2(K_j+k_j)]!. Zero on vacuum exhaustion.
Rational sh_annihilation_factor_sq(int n, int j, const ProcessVector& k);

/// Full process amplitude f_k(n, K_l) as a radical amplitude. Throws
/// InadmissibleProcess when the running SH count goes negative.
RadicalAmplitude process_amplitude(const ProcessVector& k, int n);

/// (f_k(n, K_l), |n-2K_l, K_l>); the pump count is clamped at 0 when the
/// amplitude vanished.
std::pair<RadicalAmplitude, TwoModeFock> apply_process(const ProcessVector& k,
                                                       int n);

enum class Vertex { sh_create, sh_annihilate };

/// Expands the block form into the operator word in time order (first
/// applied vertex first).
std::vector<Vertex> decode_word(const ProcessVector& k);

/// Run-length encodes a word back into a ProcessVector. The word must be
/// empty or start with sh_create; under the odd-block-creates convention
/// this encoding is a bijection.
ProcessVector encode_word(const std::vector<Vertex>& word);

}  // namespace shg
