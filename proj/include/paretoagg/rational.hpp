#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace paretoagg {

// Arbitrary-precision rational scalar for the exact solve path.
using Rational = boost::multiprecision::cpp_rational;

// Doubles are binary fractions, so this conversion is exact.
inline Rational rational_from_double(double v) { return Rational(v); }

inline double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

} // namespace paretoagg
