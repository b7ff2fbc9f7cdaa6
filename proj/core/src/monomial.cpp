#include <splicequot/monomial.hpp>

#include <numeric>

#include <splicequot/error.hpp>

namespace splicequot
{

unsigned Monomial::degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_one() const
{
    for (auto e : exps_) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

bool Monomial::divides(const Monomial &other) const
{
    if (other.size() != size()) {
        throw InvalidInput("monomials over different variable counts");
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::quotient(const Monomial &divisor) const
{
    if (!divisor.divides(*this)) {
        throw InvalidInput("monomial quotient is not exact");
    }
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        out.exps_[i] -= divisor.exps_[i];
    }
    return out;
}

Monomial &Monomial::operator*=(const Monomial &other)
{
    if (other.size() != size()) {
        throw InvalidInput("monomials over different variable counts");
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        exps_[i] += other.exps_[i];
    }
    return *this;
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, exponent_type power)
{
    Monomial m(num_vars);
    m.exps_.at(index) = power;
    return m;
}

bool GradedLess::operator()(const Monomial &a, const Monomial &b) const
{
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) {
        return da < db;
    }
    return a < b;
}

std::size_t MonomialHash::operator()(const Monomial &m) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : m.exponents()) {
        h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

namespace
{

void fill_degree(std::size_t pos, unsigned remaining, Monomial &cur, std::vector<Monomial> &out)
{
    const std::size_t n = cur.size();
    if (pos + 1 == n) {
        cur[pos] = remaining;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    // Ascending lex: smallest exponent in the leading position first.
    for (unsigned e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        fill_degree(pos + 1, remaining - e, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree)
{
    std::vector<Monomial> out;
    if (num_vars == 0) {
        if (degree == 0) {
            out.emplace_back(0);
        }
        return out;
    }
    Monomial cur(num_vars);
    fill_degree(0, degree, cur, out);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars, unsigned cap)
{
    std::vector<Monomial> out;
    for (unsigned d = 0; d <= cap; ++d) {
        auto layer = monomials_of_degree(num_vars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace splicequot
