#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace jfs {

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Dense rational vector; column convention throughout.
using Vec = std::vector<Rational>;

/// p/q in lowest terms. Prefer this over mpq_class(p, q), which does not reduce.
inline Rational frac(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/**
 * Parses `p/q` or `p` (optional leading minus, decimal digits only, q > 0).
 * Throws std::invalid_argument on anything else.
 */
Rational parse_rational(std::string_view token);

/// `p/q`, or `p` when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Vec& v);

Vec zeros(std::size_t n);
Vec unit_vector(std::size_t n, std::size_t i);

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& v);
Vec negate(const Vec& v);
bool is_zero(const Vec& v);

/// Scales v so that its first nonzero entry has absolute value one.
Vec normalize_direction(const Vec& v);

/// Lexicographic order on vectors of equal length.
bool lex_less(const Vec& a, const Vec& b);

}  // namespace jfs
