// rational.hpp
// Exact rational arithmetic used for table weights and the exact LP path.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace ctxlab {

using Rational = boost::multiprecision::cpp_rational;

// "p/q" (or "p" when q == 1).
std::string rational_to_string(const Rational& r);

// Parses "p/q" or "p"; throws input_error on malformed text or q == 0.
Rational rational_from_string(const std::string& text);

double rational_to_double(const Rational& r);

// Smallest-denominator fraction p/q with q <= max_den and |x - p/q| <= eps,
// or nullopt when no such fraction exists.
std::optional<Rational> snap_to_rational(double x, long max_den = 64,
                                         double eps = 1e-7);

}  // namespace ctxlab
