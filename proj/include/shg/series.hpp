#pragma once

#include "shg/diagram.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace shg {

using TermKey = std::pair<int, int>;  // (target_v, gamma_power)

// Truncated expansion of the SH photon-number distribution for a single
// pump Fock input |n,0>. Only nonzero coefficients are stored; the order-0
// slice is always coefficient 1 at v' = 0. The pump outcome is implied:
// n' = n - 2v'.
struct DistributionExpansion {
  int origin_n = 0;
  int max_order = 0;
  std::map<TermKey, Rational> terms;

  Rational coefficient(int target_v, int gamma_power) const;
  int max_target_v() const;  // floor(origin_n / 2)
};

/// Sums diagram_term over enumerate_pairs(R) for every even R <= max_order.
/// Exact and deterministic; coefficients that cancel to zero are dropped.
DistributionExpansion assemble_fock(int n, int max_order);

// Diagonal input-state weights c_{n,n} with the discarded tail accounted
// for: sum(retained) + tail_bound >= 1 and sum(retained) <= 1.
struct InputStateWeights {
  std::vector<std::pair<int, Real>> weights;  // (n, c_nn), ascending n
  int cutoff_n = 0;
  Real tail_bound = 0;
};

/// Poisson photon-number weights exp(-mu) mu^n / n! cut off once the
/// discarded tail mass drops below epsilon.
InputStateWeights coherent_weights(double mean_photons, double epsilon);

/// Geometric photon-number weights mu^n / (1+mu)^(n+1), same cutoff rule.
InputStateWeights thermal_weights(double mean_photons, double epsilon);

// Weighted mixture expansion: marginal SH coefficients as 50-digit reals,
// plus the exact per-origin tables the marginal was built from.
struct MixtureExpansion {
  InputStateWeights origin;
  int max_order = 0;
  std::map<TermKey, Real> terms;
  std::vector<std::pair<int, DistributionExpansion>> components;

  Real coefficient(int target_v, int gamma_power) const;
  int max_target_v() const;
};

MixtureExpansion assemble_mixture(const InputStateWeights& w, int max_order);

// Truncated-polynomial evaluation at one coupling value. remainder_estimate
// is the magnitude of the highest-order retained contribution for that v'
// (a heuristic, not a bound). Out-of-[0,1] probabilities are reported raw
// and flagged, never clamped.
struct EvalRow {
  int target_v = 0;
  double probability = 0.0;
  double remainder_estimate = 0.0;
  bool in_range = true;
};

std::vector<EvalRow> evaluate(const DistributionExpansion& e, double gamma);
std::vector<EvalRow> evaluate(const MixtureExpansion& e, double gamma);

// Moments of the truncated SH photon-number distribution. mandel_q is
// empty when the mean vanishes (gamma = 0).
struct MomentSummary {
  double mean = 0.0;
  double variance = 0.0;
  std::optional<double> mandel_q;
};

MomentSummary moments(const DistributionExpansion& e, double gamma);
MomentSummary moments(const MixtureExpansion& e, double gamma);

/// Strict accessor: throws UndefinedQ when the mean was zero.
double mandel_q(const MomentSummary& m);

}  // namespace shg
