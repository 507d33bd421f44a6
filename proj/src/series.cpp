#include "shg/series.hpp"

#include <algorithm>
#include <cmath>

namespace shg {

namespace {

constexpr int kMaxCutoff = 4096;  // mixture cutoff safety stop

template <typename Coeff>
Coeff lookup(const std::map<TermKey, Coeff>& terms, int v, int power) {
  const auto it = terms.find({v, power});
  return it == terms.end() ? Coeff(0) : it->second;
}

Real widen(const Rational& q) { return to_real(q); }
const Real& widen(const Real& r) { return r; }

// Shared polynomial evaluation: probabilities per v' with the highest-order
// retained contribution as the remainder heuristic.
template <typename Coeff>
std::vector<EvalRow> evaluate_terms(const std::map<TermKey, Coeff>& terms,
                                    int max_v, double gamma) {
  std::vector<EvalRow> rows;
  rows.reserve(static_cast<std::size_t>(max_v + 1));
  for (int v = 0; v <= max_v; ++v) {
    Real probability = 0;
    Real last_contribution = 0;
    int last_power = -1;
    for (auto it = terms.lower_bound({v, 0});
         it != terms.end() && it->first.first == v; ++it) {
      const int power = it->first.second;
      Real contribution = widen(it->second);
      for (int i = 0; i < power; ++i) contribution *= gamma;
      probability += contribution;
      if (power > last_power) {
        last_power = power;
        last_contribution = contribution;
      }
    }
    EvalRow row;
    row.target_v = v;
    row.probability = probability.convert_to<double>();
    row.remainder_estimate =
        std::abs(last_contribution.convert_to<double>());
    row.in_range = row.probability >= 0.0 && row.probability <= 1.0;
    rows.push_back(row);
  }
  return rows;
}

MomentSummary moments_of(const std::vector<EvalRow>& rows) {
  MomentSummary m;
  double second = 0.0;
  for (const auto& row : rows) {
    m.mean += row.target_v * row.probability;
    second += static_cast<double>(row.target_v) * row.target_v *
              row.probability;
  }
  m.variance = second - m.mean * m.mean;
  if (m.mean > 0.0) m.mandel_q = (m.variance - m.mean) / m.mean;
  return m;
}

InputStateWeights build_weights(double mean_photons, double epsilon,
                                bool coherent) {
  if (!(mean_photons > 0.0))
    throw InvalidParameter("mean photon number must be positive");
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw InvalidParameter("tail bound epsilon must lie in (0,1)");
  InputStateWeights w;
  const Real mu(mean_photons);
  Real weight = coherent ? Real(exp(-mu)) : Real(1) / (1 + mu);
  const Real ratio = coherent ? Real(0) : mu / (1 + mu);  // thermal only
  Real retained = 0;
  for (int n = 0; n < kMaxCutoff; ++n) {
    w.weights.emplace_back(n, weight);
    retained += weight;
    if (Real(1) - retained < Real(epsilon)) {
      w.cutoff_n = n;
      w.tail_bound = Real(1) - retained;
      if (w.tail_bound < 0) w.tail_bound = 0;
      return w;
    }
    weight = coherent ? Real(weight * mu / (n + 1)) : Real(weight * ratio);
  }
  throw InvalidParameter("tail bound not reached below the cutoff cap");
}

}  // namespace

Rational DistributionExpansion::coefficient(int target_v,
                                            int gamma_power) const {
  return lookup(terms, target_v, gamma_power);
}

int DistributionExpansion::max_target_v() const { return origin_n / 2; }

DistributionExpansion assemble_fock(int n, int max_order) {
  if (n < 0) throw std::invalid_argument("assemble_fock: n < 0");
  if (max_order < 0 || max_order % 2 != 0)
    throw std::invalid_argument("assemble_fock: order must be even and >= 0");
  DistributionExpansion e;
  e.origin_n = n;
  e.max_order = max_order;
  for (int total = 0; total <= max_order; total += 2) {
    for (const auto& pair : enumerate_pairs(total)) {
      SeriesTerm term = diagram_term(pair, n);
      if (term.coefficient == 0) continue;
      e.terms[{term.target_v, term.gamma_power}] += term.coefficient;
    }
  }
  std::erase_if(e.terms, [](const auto& kv) { return kv.second == 0; });
  return e;
}

InputStateWeights coherent_weights(double mean_photons, double epsilon) {
  return build_weights(mean_photons, epsilon, true);
}

InputStateWeights thermal_weights(double mean_photons, double epsilon) {
  return build_weights(mean_photons, epsilon, false);
}

Real MixtureExpansion::coefficient(int target_v, int gamma_power) const {
  return lookup(terms, target_v, gamma_power);
}

int MixtureExpansion::max_target_v() const {
  int max_v = 0;
  for (const auto& [n, component] : components)
    max_v = std::max(max_v, component.max_target_v());
  return max_v;
}

MixtureExpansion assemble_mixture(const InputStateWeights& w, int max_order) {
  if (w.weights.empty()) throw EmptyWeights("assemble_mixture: no weights");
  MixtureExpansion mixture;
  mixture.origin = w;
  mixture.max_order = max_order;
  for (const auto& [n, weight] : w.weights) {
    DistributionExpansion component = assemble_fock(n, max_order);
    for (const auto& [key, coeff] : component.terms)
      mixture.terms[key] += weight * to_real(coeff);
    mixture.components.emplace_back(n, std::move(component));
  }
  return mixture;
}

std::vector<EvalRow> evaluate(const DistributionExpansion& e, double gamma) {
  return evaluate_terms(e.terms, e.max_target_v(), gamma);
}

std::vector<EvalRow> evaluate(const MixtureExpansion& e, double gamma) {
  return evaluate_terms(e.terms, e.max_target_v(), gamma);
}

MomentSummary moments(const DistributionExpansion& e, double gamma) {
  return moments_of(evaluate(e, gamma));
}

MomentSummary moments(const MixtureExpansion& e, double gamma) {
  return moments_of(evaluate(e, gamma));
}

double mandel_q(const MomentSummary& m) {
  if (!m.mandel_q)
    throw UndefinedQ("Mandel Q is undefined for a zero-mean distribution");
  return *m.mandel_q;
}

}  // namespace shg
