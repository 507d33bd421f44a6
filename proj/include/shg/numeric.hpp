#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <optional>

namespace shg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Coefficient type for input-state mixtures; 50 significant decimal digits.
// Single-Fock paths never touch it.
using Real = boost::multiprecision::cpp_dec_float_50;

/// x * (x-1) * ... * (x-len+1).
///
/// Empty product (len == 0) is 1. The factor chain crossing zero gives 0,
/// and any start below zero gives 0 as well: annihilating past the vacuum
/// kills the amplitude instead of raising an error, so inadmissible-for-
/// small-n processes vanish on their own.
Integer falling_factorial(long long x, long long len);

Integer factorial(long long m);

/// Exact rational square root, or nullopt when value is not a perfect
/// square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

Real to_real(const Rational& q);

}  // namespace shg
