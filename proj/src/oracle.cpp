#include "shg/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace shg {

TridiagonalHamiltonian subspace_hamiltonian(int n) {
  if (n < 0) throw std::invalid_argument("subspace_hamiltonian: n < 0");
  TridiagonalHamiltonian ham;
  ham.origin_n = n;
  ham.dimension = n / 2 + 1;
  ham.squared_couplings.reserve(static_cast<std::size_t>(ham.dimension - 1));
  for (int v = 0; v + 1 < ham.dimension; ++v) {
    // <n-2(v+1), v+1| a1^2 a2^dag |n-2v, v>^2
    ham.squared_couplings.emplace_back(Integer(n - 2 * v) *
                                       Integer(n - 2 * v - 1) *
                                       Integer(v + 1));
  }
  return ham;
}

std::map<std::pair<int, int>, Rational> taylor_oracle(int n, int max_order) {
  if (max_order < 0 || max_order % 2 != 0)
    throw std::invalid_argument("taylor_oracle: order must be even and >= 0");
  const auto ham = subspace_hamiltonian(n);
  const int dim = ham.dimension;
  const auto& w = ham.squared_couplings;

  // column (T^p) e_0 for p = 0..max_order; T has w on the superdiagonal and
  // 1 on the subdiagonal, so the iteration stays in integers
  std::vector<std::vector<Integer>> col(
      static_cast<std::size_t>(max_order + 1),
      std::vector<Integer>(static_cast<std::size_t>(dim)));
  col[0][0] = 1;
  for (int p = 1; p <= max_order; ++p) {
    for (int v = 0; v < dim; ++v) {
      Integer acc = 0;
      if (v > 0) acc += col[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(v - 1)];
      if (v + 1 < dim)
        acc += w[static_cast<std::size_t>(v)] *
               col[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(v + 1)];
      col[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)] = acc;
    }
  }

  std::map<std::pair<int, int>, Rational> out;
  Integer scale_sq = 1;  // d_v^2 = prod_{u<v} w_u, cancels the radicals
  for (int v = 0; v < dim; ++v) {
    if (v > 0) scale_sq *= w[static_cast<std::size_t>(v - 1)];
    // amplitude series <v| exp(i gamma M) |0> / d_v as (re, im) pairs
    std::vector<Rational> re(static_cast<std::size_t>(max_order + 1));
    std::vector<Rational> im(static_cast<std::size_t>(max_order + 1));
    for (int p = 0; p <= max_order; ++p) {
      const Rational base =
          Rational(col[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)]) /
          Rational(factorial(p));
      switch (p % 4) {  // i^p
        case 0: re[static_cast<std::size_t>(p)] = base; break;
        case 1: im[static_cast<std::size_t>(p)] = base; break;
        case 2: re[static_cast<std::size_t>(p)] = -base; break;
        default: im[static_cast<std::size_t>(p)] = -base; break;
      }
    }
    for (int power = 0; power <= max_order; ++power) {
      Rational coeff = 0;
      for (int p = 0; p <= power; ++p) {
        const int q = power - p;
        coeff += re[static_cast<std::size_t>(p)] * re[static_cast<std::size_t>(q)] +
                 im[static_cast<std::size_t>(p)] * im[static_cast<std::size_t>(q)];
      }
      coeff *= Rational(scale_sq);
      if (coeff != 0) out[{v, power}] = coeff;
    }
  }
  return out;
}

std::vector<double> float_evolve(int n, double gamma) {
  const auto ham = subspace_hamiltonian(n);
  const int dim = ham.dimension;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (int v = 0; v + 1 < dim; ++v) {
    const double s = std::sqrt(
        ham.squared_couplings[static_cast<std::size_t>(v)].convert_to<double>());
    m(v, v + 1) = s;
    m(v + 1, v) = s;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  std::vector<double> probabilities(static_cast<std::size_t>(dim));
  for (int v = 0; v < dim; ++v) {
    std::complex<double> amplitude = 0.0;
    for (int e = 0; e < dim; ++e)
      amplitude += vectors(v, e) * vectors(0, e) *
                   std::exp(std::complex<double>(0.0, gamma * values(e)));
    probabilities[static_cast<std::size_t>(v)] = std::norm(amplitude);
  }
  return probabilities;
}

}  // namespace shg
