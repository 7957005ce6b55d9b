#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fairdom {

/// Exact non-negative counts. Arbitrary precision so closed forms at large n never overflow.
using Count = boost::multiprecision::cpp_int;

/// Exact rationals for formulas whose intermediate terms do not cancel termwise.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Count& c) { return c.str(); }

}  // namespace fairdom
