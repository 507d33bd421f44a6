#include "shg/process.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shg {

ProcessVector::ProcessVector(std::vector<int> blocks)
    : blocks_(std::move(blocks)) {
  for (int b : blocks_)
    if (b < 1)
      throw std::invalid_argument("ProcessVector: block values must be >= 1");
}

int ProcessVector::order() const {
  return std::accumulate(blocks_.begin(), blocks_.end(), 0);
}

std::string ProcessVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(blocks_[i]);
  }
  out += ')';
  return out;
}

std::vector<int> partial_sums(const ProcessVector& k) {
  std::vector<int> sums;
  sums.reserve(k.blocks().size());
  int running = 0;
  int sign = +1;
  for (int block : k.blocks()) {
    running += sign * block;
    sums.push_back(running);
    sign = -sign;
  }
  return sums;
}

bool is_admissible(const ProcessVector& k) {
  int running = 0;
  int sign = +1;
  for (int block : k.blocks()) {
    running += sign * block;
    if (running < 0) return false;
    sign = -sign;
  }
  return true;
}

int net_sh_photons(const ProcessVector& k) {
  const auto sums = partial_sums(k);
  return sums.empty() ? 0 : sums.back();
}

int peak_sh_photons(const ProcessVector& k) {
  const auto sums = partial_sums(k);
  return sums.empty() ? 0 : *std::max_element(sums.begin(), sums.end());
}

namespace {

int block_at(const ProcessVector& k, int j) {
  if (j < 1 || j > k.block_count())
    throw std::invalid_argument("block index out of range");
  return k.blocks()[static_cast<std::size_t>(j - 1)];
}

}  // namespace

Rational sh_creation_factor_sq(int n, int j, const ProcessVector& k) {
  if (j % 2 != 1) throw std::invalid_argument("creation blocks have odd index");
  const int kj = block_at(k, j);
  const int Kj = partial_sums(k)[static_cast<std::size_t>(j - 1)];
  // K_j!/(K_j-k_j)! * [n-2(K_j-k_j)]!/(n-2K_j)!
  return Rational(falling_factorial(Kj, kj) *
                  falling_factorial(n - 2LL * (Kj - kj), 2LL * kj));
}

Rational sh_annihilation_factor_sq(int n, int j, const ProcessVector& k) {
  if (j % 2 != 0)
    throw std::invalid_argument("annihilation blocks have even index");
  const int kj = block_at(k, j);
  const int Kj = partial_sums(k)[static_cast<std::size_t>(j - 1)];
  // (K_j+k_j)!/K_j! * (n-2K_j)!/[n-2(K_j+k_j)]!
  return Rational(falling_factorial(Kj + kj, kj) *
                  falling_factorial(n - 2LL * Kj, 2LL * kj));
}

RadicalAmplitude process_amplitude(const ProcessVector& k, int n) {
  if (n < 0) throw std::invalid_argument("process_amplitude: negative n");
  if (!is_admissible(k))
    throw InadmissibleProcess("process " + k.to_string() +
                              " annihilates the SH vacuum");
  Rational squared = 1;
  for (int j = 1; j <= k.block_count(); ++j)
    squared *= (j % 2 == 1) ? sh_creation_factor_sq(n, j, k)
                            : sh_annihilation_factor_sq(n, j, k);
  return RadicalAmplitude::from_squared(n, net_sh_photons(k), squared);
}

std::pair<RadicalAmplitude, TwoModeFock> apply_process(const ProcessVector& k,
                                                       int n) {
  auto amplitude = process_amplitude(k, n);
  const int v = amplitude.net_v();
  TwoModeFock out{std::max(0, n - 2 * v), v};
  return {std::move(amplitude), out};
}

std::vector<Vertex> decode_word(const ProcessVector& k) {
  std::vector<Vertex> word;
  word.reserve(static_cast<std::size_t>(k.order()));
  for (int j = 1; j <= k.block_count(); ++j) {
    const Vertex vertex =
        (j % 2 == 1) ? Vertex::sh_create : Vertex::sh_annihilate;
    word.insert(word.end(), static_cast<std::size_t>(block_at(k, j)), vertex);
  }
  return word;
}

ProcessVector encode_word(const std::vector<Vertex>& word) {
  if (!word.empty() && word.front() != Vertex::sh_create)
    throw std::invalid_argument(
        "encode_word: word must start with an SH-creation vertex");
  std::vector<int> blocks;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t run = i + 1;
    while (run < word.size() && word[run] == word[i]) ++run;
    blocks.push_back(static_cast<int>(run - i));
    i = run;
  }
  return ProcessVector(std::move(blocks));
}

}  // namespace shg
