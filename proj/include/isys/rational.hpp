/**
 * Exact rational scalars.
 *
 * All geometry in the library is carried out over GMP rationals; nothing is
 * ever rounded.
 */
#ifndef ISYS_RATIONAL_HPP
#define ISYS_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace isys {

using Scalar = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Thrown when a rational literal cannot be parsed (including float literals).
class RationalParseError : public std::invalid_argument {
public:
    explicit RationalParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Parses "p/q", "p", "-p/q". Decimal points and exponents are rejected.
Scalar parse_rational(std::string_view text);

/// Canonical text: "p/q" when q != 1, otherwise "p".
std::string to_string(const Scalar& q);

Integer floor_int(const Scalar& q);
Integer ceil_int(const Scalar& q);
std::int64_t to_int64(const Integer& z);

inline bool is_integer(const Scalar& q) { return boost::multiprecision::denominator(q) == 1; }

/// Fractional part in [0,1).
inline Scalar frac(const Scalar& q) { return q - Scalar(floor_int(q)); }

inline Scalar rat(long long p, long long q = 1) { return Scalar(p) / Scalar(q); }

double to_double(const Scalar& q);

}  // namespace isys

#endif
