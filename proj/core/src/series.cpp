#include <splicequot/series.hpp>

#include <algorithm>
#include <numeric>

#include <splicequot/error.hpp>

namespace splicequot
{

TruncatedSeries::TruncatedSeries(std::size_t num_vars, unsigned cap)
    : num_vars_(num_vars), cap_(cap), buckets_(static_cast<std::size_t>(cap) + 1)
{
}

TruncatedSeries TruncatedSeries::term(std::size_t num_vars, unsigned cap, const Monomial &m, const Rational &coeff)
{
    TruncatedSeries s(num_vars, cap);
    s.add_term(m, coeff);
    return s;
}

TruncatedSeries TruncatedSeries::one(std::size_t num_vars, unsigned cap)
{
    return term(num_vars, cap, Monomial(num_vars));
}

void TruncatedSeries::add_term(const Monomial &m, const Rational &coeff)
{
    if (m.size() != num_vars_) {
        throw InvalidInput("term has " + std::to_string(m.size()) + " exponents, series has " +
                           std::to_string(num_vars_) + " variables");
    }
    const unsigned d = m.degree();
    if (d > cap_ || coeff == 0) {
        return;
    }
    auto &bucket = buckets_[d];
    auto [it, inserted] = bucket.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            bucket.erase(it);
        }
    }
}

Rational TruncatedSeries::coefficient(const Monomial &m) const
{
    const unsigned d = m.degree();
    if (d > cap_) {
        return 0;
    }
    const auto it = buckets_[d].find(m);
    return it == buckets_[d].end() ? Rational(0) : it->second;
}

const TruncatedSeries::Bucket &TruncatedSeries::terms_of_degree(unsigned d) const
{
    static const Bucket empty;
    return d > cap_ ? empty : buckets_[d];
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(buckets_.begin(), buckets_.end(), [](const Bucket &b) { return b.empty(); });
}

std::size_t TruncatedSeries::term_count() const
{
    std::size_t n = 0;
    for (const auto &b : buckets_) {
        n += b.size();
    }
    return n;
}

std::optional<unsigned> TruncatedSeries::codegree() const
{
    for (unsigned d = 0; d <= cap_; ++d) {
        if (!buckets_[d].empty()) {
            return d;
        }
    }
    return std::nullopt;
}

void TruncatedSeries::check(const TruncatedSeries &o) const
{
    if (o.num_vars_ != num_vars_) {
        throw InvalidInput("series over different variable counts");
    }
    if (o.cap_ != cap_) {
        throw InvalidInput("series truncated at different caps (" + std::to_string(cap_) + " vs " +
                           std::to_string(o.cap_) + ")");
    }
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &o)
{
    check(o);
    for (const auto &bucket : o.buckets_) {
        for (const auto &[m, c] : bucket) {
            add_term(m, c);
        }
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &o)
{
    check(o);
    for (const auto &bucket : o.buckets_) {
        for (const auto &[m, c] : bucket) {
            add_term(m, -c);
        }
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const Rational &s)
{
    if (s == 0) {
        for (auto &b : buckets_) {
            b.clear();
        }
        return *this;
    }
    for (auto &b : buckets_) {
        for (auto &[m, c] : b) {
            c *= s;
        }
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    a.check(b);
    TruncatedSeries out(a.num_vars_, a.cap_);
    for (unsigned da = 0; da <= a.cap_; ++da) {
        for (unsigned db = 0; da + db <= a.cap_; ++db) {
            for (const auto &[ma, ca] : a.buckets_[da]) {
                for (const auto &[mb, cb] : b.buckets_[db]) {
                    out.add_term(ma * mb, ca * cb);
                }
            }
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::shifted(const Monomial &m, const Rational &coeff) const
{
    TruncatedSeries out(num_vars_, cap_);
    const unsigned shift = m.degree();
    for (unsigned d = 0; d + shift <= cap_; ++d) {
        for (const auto &[mono, c] : buckets_[d]) {
            out.add_term(mono * m, c * coeff);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::with_cap(unsigned cap) const
{
    TruncatedSeries out(num_vars_, cap);
    for (unsigned d = 0; d <= std::min(cap, cap_); ++d) {
        out.buckets_[d] = buckets_[d];
    }
    return out;
}

QuotientRingModel::QuotientRingModel(std::vector<std::string> variables, unsigned cap,
                                     std::vector<TruncatedSeries> relations, std::vector<Rule> rules)
    : variables_(std::move(variables)), cap_(cap), relations_(std::move(relations)), rules_(std::move(rules))
{
    const std::size_t n = variables_.size();
    for (const auto &r : relations_) {
        if (r.num_vars() != n || r.cap() != cap_) {
            throw InvalidInput("relation does not match the model's variables and cap");
        }
    }
    for (const auto &rule : rules_) {
        if (rule.head.size() != n || rule.replacement.num_vars() != n || rule.replacement.cap() != cap_) {
            throw InvalidInput("rewrite rule does not match the model's variables and cap");
        }
        if (rule.head.is_one()) {
            throw InvalidInput("rewrite rule head must not be 1");
        }
        const auto cd = rule.replacement.codegree();
        if (cd && *cd < rule.head.degree()) {
            throw InternalError("rewrite rule replacement has codegree " + std::to_string(*cd) +
                                " below its head degree " + std::to_string(rule.head.degree()));
        }
    }
}

bool QuotientRingModel::is_allowed(const Monomial &m) const
{
    return std::none_of(rules_.begin(), rules_.end(), [&](const Rule &r) { return r.head.divides(m); });
}

unsigned QuotientRingModel::degree_jump() const
{
    unsigned jump = 0;
    for (const auto &rule : rules_) {
        if (const auto cd = rule.replacement.codegree()) {
            jump = std::max(jump, *cd - rule.head.degree());
        }
    }
    return jump;
}

TruncatedSeries QuotientRingModel::normal_form(const TruncatedSeries &s, std::size_t budget) const
{
    if (s.num_vars() != variables_.size() || s.cap() != cap_) {
        throw InvalidInput("series does not match the model's variables and cap");
    }
    TruncatedSeries out = s;
    std::size_t steps = 0;
    for (unsigned d = 0; d <= cap_; ++d) {
        for (;;) {
            const Rule *rule = nullptr;
            Monomial mono;
            Rational coeff;
            for (const auto &r : rules_) {
                if (r.head.degree() > d) {
                    continue;
                }
                for (const auto &[m, c] : out.terms_of_degree(d)) {
                    if (r.head.divides(m)) {
                        rule = &r;
                        mono = m;
                        coeff = c;
                        break;
                    }
                }
                if (rule != nullptr) {
                    break;
                }
            }
            if (rule == nullptr) {
                break;
            }
            if (++steps > budget) {
                throw NonTermination("normal form exceeded " + std::to_string(budget) + " rewrite steps");
            }
            // c * mu * head  ->  c * mu * replacement
            const Monomial mu = mono.quotient(rule->head);
            out.add_term(mono, -coeff);
            const unsigned shift = mu.degree();
            for (unsigned rd = 0; rd + shift <= cap_; ++rd) {
                for (const auto &[rm, rc] : rule->replacement.terms_of_degree(rd)) {
                    out.add_term(rm * mu, rc * coeff);
                }
            }
        }
    }
    return out;
}

namespace
{

std::string num(std::int64_t x)
{
    return std::to_string(x);
}

void check_common(const HSParams &p, std::vector<ConstraintViolation> &out)
{
    if (p.a1 < 2) {
        out.push_back({"2<=a1", "a1 = " + num(p.a1)});
    }
    if (p.a1 >= p.a2) {
        out.push_back({"a1<a2", "a1 = " + num(p.a1) + ", a2 = " + num(p.a2)});
    }
    if (p.a2 >= p.b) {
        out.push_back({"a2<b", "a2 = " + num(p.a2) + ", b = " + num(p.b)});
    }
    if (p.b >= p.c) {
        out.push_back({"b<c", "b = " + num(p.b) + ", c = " + num(p.c)});
    }
    const std::pair<const char *, std::int64_t> named[] = {{"a1", p.a1}, {"a2", p.a2}, {"b", p.b}, {"c", p.c}};
    for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = x + 1; y < 4; ++y) {
            if (named[x].second > 0 && named[y].second > 0 && std::gcd(named[x].second, named[y].second) != 1) {
                out.push_back({std::string("gcd(") + named[x].first + "," + named[y].first + ")=1",
                               "gcd = " + num(std::gcd(named[x].second, named[y].second))});
            }
        }
    }
    if (p.gamma == 0) {
        out.push_back({"gamma!=0", "gamma = 0/1"});
    }
    if (p.gamma == 1) {
        out.push_back({"gamma!=1", "gamma = 1/1"});
    }
}

void throw_on(const std::vector<ConstraintViolation> &v)
{
    if (v.empty()) {
        return;
    }
    std::string msg = "parameter constraints violated:";
    for (const auto &x : v) {
        msg += " [" + x.constraint + ": " + x.detail + "]";
    }
    throw InvalidInput(msg);
}

constexpr std::size_t kVars = 4;

Monomial mono(std::int64_t x1, std::int64_t x2, std::int64_t y, std::int64_t z)
{
    return Monomial{static_cast<Monomial::exponent_type>(x1), static_cast<Monomial::exponent_type>(x2),
                    static_cast<Monomial::exponent_type>(y), static_cast<Monomial::exponent_type>(z)};
}

TruncatedSeries poly(unsigned cap, std::initializer_list<std::pair<Monomial, Rational>> terms)
{
    TruncatedSeries s(kVars, cap);
    for (const auto &[m, c] : terms) {
        s.add_term(m, c);
    }
    return s;
}

std::vector<std::uint64_t> to_counts(const std::vector<Integer> &coeffs)
{
    std::vector<std::uint64_t> out;
    out.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        if (c < 0) {
            throw InternalError("closed form produced a negative coefficient");
        }
        out.push_back(static_cast<std::uint64_t>(to_int64(c)));
    }
    return out;
}

// Multiply a truncated coefficient list by 1/(1 - t), `times` times.
void divide_by_one_minus_t(std::vector<Integer> &c, unsigned times)
{
    for (unsigned k = 0; k < times; ++k) {
        for (std::size_t j = 1; j < c.size(); ++j) {
            c[j] += c[j - 1];
        }
    }
}

void add_run(std::vector<Integer> &c, std::int64_t from, std::int64_t to, const Integer &weight = 1)
{
    for (std::int64_t e = std::max<std::int64_t>(from, 0); e <= to && e < static_cast<std::int64_t>(c.size()); ++e) {
        c[static_cast<std::size_t>(e)] += weight;
    }
}

} // namespace

std::vector<ConstraintViolation> check_brieskorn_constraints(const HSParams &p)
{
    std::vector<ConstraintViolation> out;
    check_common(p, out);
    return out;
}

std::vector<ConstraintViolation> check_hs_constraints(const HSParams &p)
{
    std::vector<ConstraintViolation> out;
    check_common(p, out);
    if (p.i < 1) {
        out.push_back({"i>=1", "i = " + num(p.i)});
    }
    if (p.i * p.a1 <= p.a2) {
        out.push_back({"i*a1>a2", "i*a1 = " + num(p.i * p.a1) + " <= a2 = " + num(p.a2)});
    }
    if (p.a1 - 1 + p.i >= p.a2) {
        out.push_back({"a1-1+i<a2", "a1-1+i = " + num(p.a1 - 1 + p.i) + " >= a2 = " + num(p.a2)});
    }
    if (p.b + p.a1 - 1 <= 2 * p.a2 - p.i) {
        out.push_back({"b+a1-1>2*a2-i", "b+a1-1 = " + num(p.b + p.a1 - 1) + " <= 2*a2-i = " + num(2 * p.a2 - p.i)});
    }
    return out;
}

QuotientRingModel brieskorn_pair_model(const HSParams &p, unsigned cap)
{
    throw_on(check_brieskorn_constraints(p));
    const Rational &g = p.gamma;
    std::vector<TruncatedSeries> relations{
        poly(cap, {{mono(p.a1, 0, 0, 0), 1}, {mono(0, 0, p.b, 0), 1}, {mono(0, 0, 0, p.c), 1}}),
        poly(cap, {{mono(0, p.a2, 0, 0), 1}, {mono(0, 0, p.b, 0), 1}, {mono(0, 0, 0, p.c), g}}),
    };
    std::vector<QuotientRingModel::Rule> rules{
        {mono(p.a1, 0, 0, 0), poly(cap, {{mono(0, 0, p.b, 0), -1}, {mono(0, 0, 0, p.c), -1}})},
        {mono(0, p.a2, 0, 0), poly(cap, {{mono(0, 0, p.b, 0), -1}, {mono(0, 0, 0, p.c), -g}})},
    };
    return QuotientRingModel({"x1", "x2", "y", "z"}, cap, std::move(relations), std::move(rules));
}

QuotientRingModel perturbed_pair_model(const HSParams &p, unsigned cap)
{
    throw_on(check_hs_constraints(p));
    const Rational &g = p.gamma;
    const auto a1 = p.a1;
    const auto a2 = p.a2;
    const auto b = p.b;
    const auto c = p.c;
    const auto i = p.i;
    std::vector<TruncatedSeries> relations{
        poly(cap, {{mono(a1, 0, 0, 0), 1}, {mono(0, 0, b, 0), 1}, {mono(0, 0, 0, c), 1}}),
        poly(cap, {{mono(0, a2, 0, 0), 1}, {mono(a1 - 1, i, 0, 0), 1}, {mono(0, 0, b, 0), 1}, {mono(0, 0, 0, c), g}}),
    };
    std::vector<QuotientRingModel::Rule> rules{
        {mono(0, 2 * a2 - i, 0, 0), poly(cap, {{mono(a1 - 1, 0, b, 0), 1},
                                               {mono(0, a2 - i, b, 0), -1},
                                               {mono(a1 - 2, i, b, 0), -1},
                                               {mono(a1 - 1, 0, 0, c), g},
                                               {mono(0, a2 - i, 0, c), -g},
                                               {mono(a1 - 2, i, 0, c), -1}})},
        {mono(1, a2, 0, 0), poly(cap, {{mono(0, i, b, 0), 1},
                                       {mono(1, 0, b, 0), -1},
                                       {mono(0, i, 0, c), 1},
                                       {mono(1, 0, 0, c), -g}})},
        {mono(a1, 0, 0, 0), poly(cap, {{mono(0, 0, b, 0), -1}, {mono(0, 0, 0, c), -1}})},
        {mono(a1 - 1, i, 0, 0), poly(cap, {{mono(0, a2, 0, 0), -1}, {mono(0, 0, b, 0), -1}, {mono(0, 0, 0, c), -g}})},
    };
    return QuotientRingModel({"x1", "x2", "y", "z"}, cap, std::move(relations), std::move(rules));
}

std::vector<std::uint64_t> hilbert_samuel(const QuotientRingModel &model, unsigned n)
{
    const unsigned required = n + model.degree_jump();
    if (model.cap() < required) {
        throw InvalidInput("model cap " + std::to_string(model.cap()) + " too small; need at least " +
                           std::to_string(required));
    }
    std::vector<std::uint64_t> out;
    out.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        std::uint64_t count = 0;
        for (const auto &m : monomials_of_degree(model.variables().size(), k)) {
            if (model.is_allowed(m)) {
                ++count;
            }
        }
        out.push_back(count);
    }
    return out;
}

std::vector<std::uint64_t> hilbert_series_brieskorn_pair(std::int64_t a1, std::int64_t a2, unsigned n)
{
    if (a1 < 1 || a2 < 1) {
        throw InvalidInput("exponents must be positive");
    }
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    add_run(c, 0, 0);
    add_run(c, a1, a1, -1);
    add_run(c, a2, a2, -1);
    add_run(c, a1 + a2, a1 + a2);
    divide_by_one_minus_t(c, 4);
    return to_counts(c);
}

std::vector<std::uint64_t> hilbert_series_perturbed_pair(const HSParams &p, unsigned n)
{
    throw_on(check_hs_constraints(p));
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    // (t + ... + t^(a1-2)) * (1 + ... + t^(a2-1))
    for (std::int64_t e = 1; e <= p.a1 - 2; ++e) {
        add_run(c, e, e + p.a2 - 1);
    }
    add_run(c, 0, 2 * p.a2 - p.i - 1);
    add_run(c, p.a1 - 1, p.a1 - 1 + p.i - 1);
    divide_by_one_minus_t(c, 2);
    return to_counts(c);
}

std::optional<std::size_t> first_difference(const std::vector<std::uint64_t> &a, const std::vector<std::uint64_t> &b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k] != b[k]) {
            return k;
        }
    }
    return std::nullopt;
}

} // namespace splicequot
