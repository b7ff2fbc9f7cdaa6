#ifndef SPLICEQUOT_MONOMIAL_HPP
#define SPLICEQUOT_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace splicequot
{

// Dense exponent vector over an ordered variable list. Comparison is
// lexicographic on the exponents; use GradedLess for (degree, lex) order.
class Monomial
{
public:
    using exponent_type = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<exponent_type> exps) : exps_(exps) {}

    std::size_t size() const
    {
        return exps_.size();
    }
    exponent_type operator[](std::size_t i) const
    {
        return exps_[i];
    }
    exponent_type &operator[](std::size_t i)
    {
        return exps_[i];
    }
    const std::vector<exponent_type> &exponents() const
    {
        return exps_;
    }

    unsigned degree() const;
    bool is_one() const;

    // True iff every exponent of *this is <= the matching one of other.
    bool divides(const Monomial &other) const;

    // Requires divisor.divides(*this).
    Monomial quotient(const Monomial &divisor) const;

    Monomial &operator*=(const Monomial &other);
    friend Monomial operator*(Monomial a, const Monomial &b)
    {
        a *= b;
        return a;
    }

    static Monomial variable(std::size_t num_vars, std::size_t index, exponent_type power = 1);

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend auto operator<=>(const Monomial &, const Monomial &) = default;

private:
    std::vector<exponent_type> exps_;
};

struct GradedLess {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept;
};

// All monomials of exactly the given degree, ascending lexicographic order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

// All monomials of degree <= cap in (degree, lex) order.
std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars, unsigned cap);

} // namespace splicequot

#endif
