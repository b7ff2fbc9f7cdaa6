#ifndef SPLICEQUOT_RATIONAL_HPP
#define SPLICEQUOT_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace splicequot
{

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "p/q" form with q > 0, lowest terms. Integers keep the "/1".
std::string to_string(const Rational &r);

// Accepts "p/q" or "p" with an optional leading '-'. Throws InvalidInput.
Rational parse_rational(std::string_view text);

Rational make_rational(const Integer &num, const Integer &den);

Integer floor(const Rational &r);

// r - floor(r), always in [0, 1).
Rational frac(const Rational &r);

inline bool is_integer(const Rational &r)
{
    return r.get_den() == 1;
}

// Throws InternalError when the value does not fit.
std::int64_t to_int64(const Integer &z);

} // namespace splicequot

#endif
