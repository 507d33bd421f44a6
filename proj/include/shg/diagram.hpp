#pragma once

#include "shg/process.hpp"

#include <string>
#include <vector>

namespace shg {

// Process superposition: k on the ket side (left), k' on the bra side.
// Multiplicity 2 folds in the complex conjugate diagram; 1 when k = k'.
// Enumeration stores only canonical representatives, left <= right on
// (order, blocks); hand-built pairs keep their orientation.
class DiagramPair {
 public:
  DiagramPair(ProcessVector ket_side, ProcessVector bra_side);

  const ProcessVector& left() const { return left_; }
  const ProcessVector& right() const { return right_; }
  int left_order() const { return left_.order(); }
  int right_order() const { return right_.order(); }
  int total_order() const { return left_order() + right_order(); }
  int multiplicity() const { return left_ == right_ ? 1 : 2; }
  bool is_canonical() const { return !(right_ < left_); }
  DiagramPair canonical() const;
  bool outputs_match() const {
    return net_sh_photons(left_) == net_sh_photons(right_);
  }

  friend bool operator==(const DiagramPair&, const DiagramPair&) = default;

 private:
  ProcessVector left_;
  ProcessVector right_;
};

// One exact term of the distribution expansion: coefficient of
// gamma^gamma_power in Pr(n - 2*target_v, target_v; gamma).
struct SeriesTerm {
  int target_v = 0;
  int gamma_power = 0;
  Rational coefficient;
};

/// All admissible processes of the given order, in (order, blocks)
/// lexicographic order. Order 0 yields only the identity.
std::vector<ProcessVector> enumerate_processes(int order);

/// All canonical pairs with r + r' = total_order and matching net SH
/// photons, ordered by (r, left, right) ascending. total_order must be
/// even; odd orders admit no pairs since K_l fixes the parity of r.
std::vector<DiagramPair> enumerate_pairs(int total_order);

/// Exact contribution of the pair at pump input n, conjugate multiplicity
/// included: multiplicity * (-1)^((r-r')/2) / (r! r'!) * f_k f_k'. Throws
/// InvalidPair when the two sides output different net photon numbers.
SeriesTerm diagram_term(const DiagramPair& pair, int n);

/// Probability of generating K_l SH photons through the single process k:
/// the (k, k) diagonal term, f_k^2 / (r!)^2, always >= 0.
SeriesTerm probability_term(const ProcessVector& k, int n);

/// Fixed-width two-column rendering, ket side left, vertices bottom to top,
/// intermediate states labeled symbolically in n. Deterministic.
std::string render_ascii(const DiagramPair& pair);

/// Standalone tikz-feynhand source for the pair, following the wiggly-line /
/// plain-line / dot conventions. Deterministic.
std::string render_latex(const DiagramPair& pair);

/// Stable filename fragment, e.g. "R12_4__2-1-4-1" for the pair
/// {(4),(2,1,4,1)}; the identity side renders as "id".
std::string pair_slug(const DiagramPair& pair);

}  // namespace shg
