#include <splicequot/rational.hpp>

#include <cctype>
#include <string>

#include <splicequot/error.hpp>

namespace splicequot
{

std::string to_string(const Rational &r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace
{

bool is_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_part = body.substr(0, slash);
    const std::string_view den_part = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!is_digits(num_part) || !is_digits(den_part)) {
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    }
    Integer num(std::string(num_part), 10);
    Integer den(std::string(den_part), 10);
    if (den == 0) {
        throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        num = -num;
    }
    return make_rational(num, den);
}

Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw InvalidInput("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer floor(const Rational &r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational frac(const Rational &r)
{
    return r - Rational(floor(r));
}

std::int64_t to_int64(const Integer &z)
{
    if (!z.fits_slong_p()) {
        throw InternalError("integer " + z.get_str() + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(z.get_si());
}

} // namespace splicequot
