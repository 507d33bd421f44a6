#pragma once

#include "shg/numeric.hpp"

#include <map>
#include <utility>
#include <vector>

namespace shg {

// H/gamma restricted to the invariant subspace span{|n-2v, v>}: a real
// symmetric matrix with zero diagonal and off-diagonal entries sqrt(w_v),
// w_v = (n-2v)(n-2v-1)(v+1), ordered by v.
struct TridiagonalHamiltonian {
  int origin_n = 0;
  int dimension = 1;
  std::vector<Integer> squared_couplings;  // w_v for v = 0 .. dimension-2
};

TridiagonalHamiltonian subspace_hamiltonian(int n);

/// Exact Taylor coefficients of Pr(n-2v', v'; gamma) up to gamma^max_order,
/// keyed by (v', power), nonzero entries only. Computed with no
/// diagrammatics: powers of the integer tridiagonal matrix obtained by a
/// diagonal similarity (superdiagonal w_v, subdiagonal 1), amplitude series
/// tracked as exact (re, im) rational pairs, and the similarity factors
/// restored as the integer d_v^2 = prod_{u<v} w_u.
std::map<std::pair<int, int>, Rational> taylor_oracle(int n, int max_order);

/// |<v'| exp(i gamma M) |0>|^2 via eigendecomposition of the small real
/// symmetric matrix. Numeric cross-check only; sums to 1 within 1e-12.
std::vector<double> float_evolve(int n, double gamma);

}  // namespace shg
