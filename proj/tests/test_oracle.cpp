#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shg/oracle.hpp"

#include <cmath>

using namespace shg;

TEST_CASE("subspace_hamiltonian couplings") {
  const auto h2 = subspace_hamiltonian(2);
  CHECK(h2.dimension == 2);
  REQUIRE(h2.squared_couplings.size() == 1);
  CHECK(h2.squared_couplings[0] == 2);  // 2*1*1

  const auto h3 = subspace_hamiltonian(3);
  CHECK(h3.dimension == 2);
  REQUIRE(h3.squared_couplings.size() == 1);
  CHECK(h3.squared_couplings[0] == 6);  // 3*2*1

  const auto h1 = subspace_hamiltonian(1);
  CHECK(h1.dimension == 1);
  CHECK(h1.squared_couplings.empty());

  const auto h8 = subspace_hamiltonian(8);
  CHECK(h8.dimension == 5);
  CHECK(h8.squared_couplings ==
        std::vector<Integer>{56, 60, 36, 8});
  for (const auto& w : h8.squared_couplings) CHECK(w > 0);
}

TEST_CASE("taylor_oracle reproduces the two-level closed form") {
  // Pr(0,1;gamma) = sin^2(sqrt(2) gamma) = 2g^2 - 4/3 g^4 + 16/45 g^6 - ...
  const auto table = taylor_oracle(2, 6);
  CHECK(table.at({1, 2}) == 2);
  CHECK(table.at({1, 4}) == Rational(-4) / 3);
  CHECK(table.at({1, 6}) == Rational(16) / 45);
  // cos^2 side
  CHECK(table.at({0, 0}) == 1);
  CHECK(table.at({0, 2}) == -2);
  CHECK(table.at({0, 4}) == Rational(4) / 3);
  CHECK(table.at({0, 6}) == Rational(-16) / 45);
}

TEST_CASE("taylor_oracle basics") {
  CHECK(taylor_oracle(3, 2).at({1, 2}) == 6);  // sin^2(sqrt 6 gamma)
  for (int n : {0, 1, 4, 7})
    CHECK(taylor_oracle(n, 4).at({0, 0}) == 1);
  for (int n : {0, 1}) {
    const auto table = taylor_oracle(n, 8);
    CHECK(table.size() == 1);  // no dynamics below two pump photons
  }
  CHECK_THROWS_AS(taylor_oracle(4, 3), std::invalid_argument);
}

TEST_CASE("taylor_oracle has only even powers") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& [key, coeff] : taylor_oracle(n, 12)) {
      CHECK(key.second % 2 == 0);
      CHECK(coeff != 0);
    }
}

TEST_CASE("order-2 coefficient at v'=1 is the first squared coupling") {
  for (int n = 2; n <= 10; ++n) {
    const auto table = taylor_oracle(n, 2);
    CHECK(table.at({1, 2}) == n * (n - 1));
    CHECK(table.at({0, 2}) == -(n * (n - 1)));
  }
}

TEST_CASE("taylor_oracle normalizes order by order") {
  for (int n = 0; n <= 8; ++n) {
    const auto table = taylor_oracle(n, 12);
    for (int power = 2; power <= 12; power += 2) {
      Rational row_sum = 0;
      for (int v = 0; v <= n / 2; ++v) {
        const auto it = table.find({v, power});
        if (it != table.end()) row_sum += it->second;
      }
      CHECK(row_sum == 0);
    }
  }
}

TEST_CASE("float_evolve two-level closed form") {
  const auto probs = float_evolve(2, 0.1);
  REQUIRE(probs.size() == 2);
  const double x = std::sqrt(2.0) * 0.1;
  CHECK(std::abs(probs[0] - std::cos(x) * std::cos(x)) < 1e-12);
  CHECK(std::abs(probs[1] - std::sin(x) * std::sin(x)) < 1e-12);
}

TEST_CASE("float_evolve is unitary") {
  for (int n = 0; n <= 20; ++n) {
    for (double gamma : {0.01, 0.1, 0.5, 1.0}) {
      const auto probs = float_evolve(n, gamma);
      REQUIRE(probs.size() == static_cast<std::size_t>(n / 2 + 1));
      double total = 0.0;
      for (double p : probs) {
        CHECK(p >= -1e-15);
        total += p;
      }
      CHECK(std::abs(total - 1.0) < 1e-12);
    }
    const auto at_zero = float_evolve(n, 0.0);
    CHECK(at_zero[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t v = 1; v < at_zero.size(); ++v)
      CHECK(std::abs(at_zero[v]) < 1e-24);
  }
}

TEST_CASE("taylor polynomial agrees with the numeric evolution at small gamma") {
  for (int n = 0; n <= 10; ++n) {
    const auto table = taylor_oracle(n, 12);
    const auto extended = taylor_oracle(n, 14);  // first omitted order
    for (double gamma : {0.01, 0.05}) {
      const auto probs = float_evolve(n, gamma);
      for (int v = 0; v <= n / 2; ++v) {
        double poly = 0.0;
        for (int power = 0; power <= 12; ++power) {
          const auto it = table.find({v, power});
          if (it != table.end())
            poly += to_real(it->second).convert_to<double>() *
                    std::pow(gamma, power);
        }
        double omitted = 0.0;
        if (const auto it = extended.find({v, 14}); it != extended.end())
          omitted = std::abs(to_real(it->second).convert_to<double>()) *
                    std::pow(gamma, 14);
        CHECK(std::abs(poly - probs[static_cast<std::size_t>(v)]) <
              1.5 * omitted + 1e-12);
      }
    }
  }
}
