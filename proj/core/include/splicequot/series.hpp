#ifndef SPLICEQUOT_SERIES_HPP
#define SPLICEQUOT_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <splicequot/monomial.hpp>
#include <splicequot/rational.hpp>

namespace splicequot
{

// Polynomial in num_vars variables with every term of total degree <= cap.
// Terms are bucketed by degree; zero coefficients are never stored.
class TruncatedSeries
{
public:
    using Bucket = std::map<Monomial, Rational>;

    TruncatedSeries(std::size_t num_vars, unsigned cap);

    static TruncatedSeries term(std::size_t num_vars, unsigned cap, const Monomial &m, const Rational &coeff = 1);
    static TruncatedSeries one(std::size_t num_vars, unsigned cap);

    std::size_t num_vars() const
    {
        return num_vars_;
    }
    unsigned cap() const
    {
        return cap_;
    }

    // Adds coeff * m; silently drops terms above the cap.
    void add_term(const Monomial &m, const Rational &coeff);
    Rational coefficient(const Monomial &m) const;

    // Terms of exactly degree d (empty above the cap).
    const Bucket &terms_of_degree(unsigned d) const;

    bool is_zero() const;
    std::size_t term_count() const;
    // Lowest degree of a stored term; nullopt for the zero series.
    std::optional<unsigned> codegree() const;

    TruncatedSeries &operator+=(const TruncatedSeries &o);
    TruncatedSeries &operator-=(const TruncatedSeries &o);
    TruncatedSeries &operator*=(const Rational &s);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        a += b;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        a -= b;
        return a;
    }
    friend TruncatedSeries operator*(const Rational &s, TruncatedSeries a)
    {
        a *= s;
        return a;
    }
    // Truncated product; throws InvalidInput on a cap or variable mismatch.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);

    // m * this, truncated.
    TruncatedSeries shifted(const Monomial &m, const Rational &coeff = 1) const;

    // Same terms at a different cap (dropping what no longer fits).
    TruncatedSeries with_cap(unsigned cap) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    void check(const TruncatedSeries &o) const;

    std::size_t num_vars_;
    unsigned cap_;
    std::vector<Bucket> buckets_;
};

// Quotient of the power series ring by relations, presented by rewrite
// rules head -> replacement (head = replacement modulo the relations). Rules
// are tried in the order given.
class QuotientRingModel
{
public:
    struct Rule {
        Monomial head;
        TruncatedSeries replacement;
    };

    // Throws InternalError when a replacement has codegree below its head's
    // degree; InvalidInput on shape mismatches.
    QuotientRingModel(std::vector<std::string> variables, unsigned cap, std::vector<TruncatedSeries> relations,
                      std::vector<Rule> rules);

    const std::vector<std::string> &variables() const
    {
        return variables_;
    }
    unsigned cap() const
    {
        return cap_;
    }
    const std::vector<TruncatedSeries> &relations() const
    {
        return relations_;
    }
    const std::vector<Rule> &rules() const
    {
        return rules_;
    }

    // Divisible by no rule head.
    bool is_allowed(const Monomial &m) const;

    // Largest codegree(replacement) - degree(head) over the rules, at least 0.
    // Replacements are truncated at the cap, so a low cap can hide terms.
    unsigned degree_jump() const;

    // Rewrites degree by degree from the bottom until no term is divisible by
    // a rule head. Throws NonTermination after `budget` rewrite steps.
    TruncatedSeries normal_form(const TruncatedSeries &s, std::size_t budget = 10'000'000) const;

private:
    std::vector<std::string> variables_;
    unsigned cap_;
    std::vector<TruncatedSeries> relations_;
    std::vector<Rule> rules_;
};

struct HSParams {
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t i = 0;
    Rational gamma = 2;
};

struct ConstraintViolation {
    std::string constraint; // the inequality or condition, e.g. "i*a1>a2"
    std::string detail;     // the values that break it
};

// Ordering 2 <= a1 < a2 < b < c, pairwise coprimality, gamma not 0 or 1.
std::vector<ConstraintViolation> check_brieskorn_constraints(const HSParams &p);

// The above plus i >= 1, i*a1 > a2, a1-1+i < a2, b+a1-1 > 2*a2-i.
std::vector<ConstraintViolation> check_hs_constraints(const HSParams &p);

// Variables (x1, x2, y, z); relations x1^a1 + y^b + z^c and
// x2^a2 + y^b + gamma z^c. Throws InvalidInput on a constraint failure.
QuotientRingModel brieskorn_pair_model(const HSParams &p, unsigned cap);

// Same, with x1^(a1-1) x2^i added to the second relation. Its leading
// monomials are x2^(2a2-i), x1 x2^a2, x1^a1, x1^(a1-1) x2^i, rewritten in
// that order.
QuotientRingModel perturbed_pair_model(const HSParams &p, unsigned cap);

// Number of allowed monomials of each degree 0..n. Throws InvalidInput when
// the model cap is below n + degree_jump().
std::vector<std::uint64_t> hilbert_samuel(const QuotientRingModel &model, unsigned n);

// Taylor coefficients 0..n of (1 - t^a1)(1 - t^a2) / (1 - t)^4.
std::vector<std::uint64_t> hilbert_series_brieskorn_pair(std::int64_t a1, std::int64_t a2, unsigned n);

// Taylor coefficients 0..n of
// [ (t + ... + t^(a1-2))(1 + ... + t^(a2-1)) + (1 + ... + t^(2a2-i-1))
//   + t^(a1-1)(1 + ... + t^(i-1)) ] / (1 - t)^2.
// Throws InvalidInput on a constraint failure.
std::vector<std::uint64_t> hilbert_series_perturbed_pair(const HSParams &p, unsigned n);

// First index where the sequences differ, over their common length.
std::optional<std::size_t> first_difference(const std::vector<std::uint64_t> &a, const std::vector<std::uint64_t> &b);

} // namespace splicequot

#endif
