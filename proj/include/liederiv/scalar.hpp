#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liederiv {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator, and zero is 0/1.
using Scalar = mpq_class;

/// Coordinate vector over Scalar.
using Vector = std::vector<Scalar>;

/// Parses "p", "p/q" or "-p/q". Throws InputError(bad-scalar) otherwise or on q == 0.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string format_scalar(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

bool is_zero(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);

/// Deterministic string key, handy for deduplicating vectors.
std::string vector_key(const Vector& v);

}  // namespace liederiv
