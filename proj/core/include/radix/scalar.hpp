#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace radix {

/// Exact rational number. GMP keeps every result canonical: positive
/// denominator and gcd(|num|, den) = 1.
using Scalar = mpq_class;

/// Coordinate column vector.
using Vector = std::vector<Scalar>;

/// Parses "p", "-p", "p/q" (ASCII '-' or U+2212 minus). Throws
/// Error(ParseError) on anything else, including a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

/// Space-separated components, e.g. "0 -1 1/2".
std::string to_string(const Vector& v);

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
Scalar dot(const Vector& a, const Vector& b);

}  // namespace radix
