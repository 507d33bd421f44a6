#include "shg/diagram.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace shg {

DiagramPair::DiagramPair(ProcessVector ket_side, ProcessVector bra_side)
    : left_(std::move(ket_side)), right_(std::move(bra_side)) {
  if (!is_admissible(left_))
    throw InadmissibleProcess("DiagramPair: left side " + left_.to_string());
  if (!is_admissible(right_))
    throw InadmissibleProcess("DiagramPair: right side " + right_.to_string());
}

DiagramPair DiagramPair::canonical() const {
  return is_canonical() ? *this : DiagramPair(right_, left_);
}

namespace {

void compositions(int remaining, bool creation_block, int running,
                  std::vector<int>& prefix, std::vector<ProcessVector>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int block = 1; block <= remaining; ++block) {
    const int next = creation_block ? running + block : running - block;
    if (next < 0) break;  // larger blocks only sink deeper
    prefix.push_back(block);
    compositions(remaining - block, !creation_block, next, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ProcessVector> enumerate_processes(int order) {
  if (order < 0) throw std::invalid_argument("enumerate_processes: order < 0");
  std::vector<ProcessVector> out;
  std::vector<int> prefix;
  compositions(order, true, 0, prefix, out);
  return out;
}

std::vector<DiagramPair> enumerate_pairs(int total_order) {
  if (total_order < 0 || total_order % 2 != 0)
    throw std::invalid_argument("enumerate_pairs: order must be even and >= 0");
  std::vector<DiagramPair> out;
  for (int r = 0; 2 * r <= total_order; ++r) {
    const auto lefts = enumerate_processes(r);
    const auto rights = enumerate_processes(total_order - r);
    for (const auto& left : lefts) {
      const int v = net_sh_photons(left);
      for (const auto& right : rights) {
        if (net_sh_photons(right) != v) continue;
        if (2 * r == total_order && right < left) continue;  // keep canonical
        out.emplace_back(left, right);
      }
    }
  }
  return out;
}

SeriesTerm diagram_term(const DiagramPair& pair, int n) {
  if (!pair.outputs_match())
    throw InvalidPair("diagram_term: sides " + pair.left().to_string() +
                      " and " + pair.right().to_string() +
                      " output different net photon numbers");
  const int r = pair.left_order();
  const int rp = pair.right_order();
  const auto amp_left = process_amplitude(pair.left(), n);
  const auto amp_right = process_amplitude(pair.right(), n);
  // i^r (-i)^r' = (-1)^((r-r')/2); r = r' (mod 2) makes the term real.
  const int half = std::abs(r - rp) / 2;
  const int sign = (half % 2 == 0) ? 1 : -1;
  Rational coeff = Rational(pair.multiplicity() * sign) *
                   radical_mul(amp_left, amp_right) /
                   Rational(factorial(r) * factorial(rp));
  return SeriesTerm{net_sh_photons(pair.left()), pair.total_order(),
                    std::move(coeff)};
}

SeriesTerm probability_term(const ProcessVector& k, int n) {
  if (!is_admissible(k))
    throw InadmissibleProcess("probability_term: " + k.to_string());
  return diagram_term(DiagramPair(k, k), n);
}

}  // namespace shg
