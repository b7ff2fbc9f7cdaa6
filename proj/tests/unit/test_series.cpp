#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include <splicequot/error.hpp>
#include <splicequot/series.hpp>

using namespace splicequot;

namespace
{

const HSParams kParams{3, 5, 7, 8, 2, 2};

TruncatedSeries series(unsigned cap, std::initializer_list<std::pair<Monomial, Rational>> terms)
{
    TruncatedSeries s(4, cap);
    for (const auto &[m, c] : terms) {
        s.add_term(m, c);
    }
    return s;
}

oracle::Poly to_poly(const TruncatedSeries &s)
{
    oracle::Poly p;
    for (unsigned d = 0; d <= s.cap(); ++d) {
        for (const auto &[m, c] : s.terms_of_degree(d)) {
            p[m] = c;
        }
    }
    return p;
}

std::vector<oracle::Poly> relation_polys(const QuotientRingModel &model)
{
    std::vector<oracle::Poly> out;
    for (const auto &r : model.relations()) {
        out.push_back(to_poly(r));
    }
    return out;
}

std::vector<std::uint64_t> to_u64(const std::vector<Integer> &v)
{
    std::vector<std::uint64_t> out;
    for (const auto &x : v) {
        out.push_back(x.get_ui());
    }
    return out;
}

std::vector<HSParams> valid_params()
{
    std::vector<HSParams> out;
    for (std::int64_t a1 = 2; a1 <= 5; ++a1) {
        for (std::int64_t a2 = a1 + 1; a2 <= 9; ++a2) {
            for (std::int64_t b = a2 + 1; b <= 16; ++b) {
                for (std::int64_t i = 1; i < a2; ++i) {
                    HSParams p{a1, a2, b, b + 1, i, 2};
                    if (check_hs_constraints(p).empty()) {
                        out.push_back(p);
                    }
                }
            }
        }
    }
    return out;
}

bool names(const std::vector<ConstraintViolation> &v, const std::string &name)
{
    return std::any_of(v.begin(), v.end(), [&](const auto &x) { return x.constraint == name; });
}

} // namespace

TEST_CASE("truncated series arithmetic")
{
    const Monomial x{1, 0, 0, 0};
    const Monomial y{0, 1, 0, 0};
    const auto s = series(3, {{x, 2}, {y, -1}});
    CHECK(s.term_count() == 2);
    CHECK(s.codegree() == 1u);
    CHECK(TruncatedSeries(4, 3).codegree() == std::nullopt);
    CHECK((s - s).is_zero());
    CHECK((s + s).coefficient(x) == 4);
    CHECK((make_rational(1, 2) * s).coefficient(y) == make_rational(-1, 2));

    const auto sq = s * s;
    CHECK(sq.coefficient(Monomial{2, 0, 0, 0}) == 4);
    CHECK(sq.coefficient(Monomial{1, 1, 0, 0}) == -4);
    CHECK(sq.coefficient(Monomial{0, 2, 0, 0}) == 1);
    CHECK((sq * sq).is_zero()); // degree 4 is above the cap
    CHECK(s.shifted(Monomial{0, 0, 2, 0}).coefficient(Monomial{1, 0, 2, 0}) == 2);
    CHECK(s.shifted(Monomial{0, 0, 3, 0}).is_zero());
    CHECK(TruncatedSeries::one(4, 3) * s == s);

    auto t = s;
    t.add_term(x, -2);
    CHECK(t.coefficient(x) == 0);
    CHECK(t.term_count() == 1);
    t.add_term(Monomial{4, 0, 0, 0}, 1);
    CHECK(t.term_count() == 1);
    CHECK(s.with_cap(0).is_zero());
    CHECK(s.with_cap(5).with_cap(3) == s);

    CHECK_THROWS_AS(s * TruncatedSeries(4, 4), InvalidInput);
    CHECK_THROWS_AS(s + TruncatedSeries(3, 3), InvalidInput);
}

TEST_CASE("parameter constraints")
{
    CHECK(check_hs_constraints(kParams).empty());
    CHECK(check_brieskorn_constraints(HSParams{3, 5, 7, 8, 0, 2}).empty());
    CHECK(names(check_hs_constraints({3, 5, 7, 8, 1, 2}), "i*a1>a2"));
    CHECK(names(check_hs_constraints({3, 5, 7, 8, 0, 2}), "i>=1"));
    CHECK(names(check_hs_constraints({3, 5, 7, 8, 3, 2}), "a1-1+i<a2"));
    CHECK(names(check_hs_constraints({3, 5, 6, 7, 2, 2}), "b+a1-1>2*a2-i"));
    CHECK(names(check_brieskorn_constraints({1, 5, 7, 8, 0, 2}), "2<=a1"));
    CHECK(names(check_brieskorn_constraints({5, 5, 7, 8, 0, 2}), "a1<a2"));
    CHECK(names(check_brieskorn_constraints({3, 5, 4, 8, 0, 2}), "a2<b"));
    CHECK(names(check_brieskorn_constraints({3, 5, 7, 7, 0, 2}), "b<c"));
    CHECK(names(check_brieskorn_constraints({3, 5, 7, 9, 0, 2}), "gcd(a1,c)=1"));
    CHECK(names(check_brieskorn_constraints({3, 5, 7, 8, 0, 0}), "gamma!=0"));
    CHECK(names(check_brieskorn_constraints({3, 5, 7, 8, 0, 1}), "gamma!=1"));

    CHECK_THROWS_AS(brieskorn_pair_model({3, 6, 7, 8, 0, 2}, 10), InvalidInput);
    CHECK_THROWS_AS(perturbed_pair_model({3, 5, 7, 8, 1, 2}, 10), InvalidInput);
    CHECK_THROWS_AS(hilbert_series_perturbed_pair({3, 5, 7, 8, 1, 2}, 10), InvalidInput);
}

TEST_CASE("models")
{
    const auto b = brieskorn_pair_model(kParams, 14);
    CHECK(b.variables() == std::vector<std::string>{"x1", "x2", "y", "z"});
    CHECK(b.relations().size() == 2);
    CHECK(b.degree_jump() == 4);
    CHECK_FALSE(b.is_allowed(Monomial{3, 0, 0, 0}));
    CHECK_FALSE(b.is_allowed(Monomial{0, 5, 1, 0}));
    CHECK(b.is_allowed(Monomial{2, 4, 9, 9}));

    const auto p = perturbed_pair_model(kParams, 14);
    CHECK(p.rules().size() == 4);
    CHECK(p.degree_jump() == 4);
    CHECK(p.rules()[0].head == Monomial{0, 8, 0, 0});
    CHECK(p.rules()[1].head == Monomial{1, 5, 0, 0});
    CHECK(p.rules()[2].head == Monomial{3, 0, 0, 0});
    CHECK(p.rules()[3].head == Monomial{2, 2, 0, 0});
    CHECK(p.is_allowed(Monomial{0, 5, 0, 0}));
    CHECK_FALSE(p.is_allowed(Monomial{2, 2, 0, 0}));
    const auto &f2 = p.relations()[1];
    CHECK(f2.coefficient(Monomial{0, 5, 0, 0}) == 1);
    CHECK(f2.coefficient(Monomial{2, 2, 0, 0}) == 1);
    CHECK(f2.coefficient(Monomial{0, 0, 7, 0}) == 1);
    CHECK(f2.coefficient(Monomial{0, 0, 0, 8}) == 2);
}

TEST_CASE("normal form examples")
{
    const auto b = brieskorn_pair_model(kParams, 10);
    const Monomial y7{0, 0, 7, 0};
    const Monomial z8{0, 0, 0, 8};
    CHECK(b.normal_form(TruncatedSeries::term(4, 10, Monomial{3, 0, 0, 0})) == series(10, {{y7, -1}, {z8, -1}}));
    CHECK(b.normal_form(TruncatedSeries::term(4, 10, Monomial{0, 5, 0, 0})) == series(10, {{y7, -1}, {z8, -2}}));
    CHECK(b.normal_form(TruncatedSeries::term(4, 10, Monomial{3, 5, 0, 0})).is_zero());
    const auto free = TruncatedSeries::term(4, 10, Monomial{2, 4, 1, 0}, 3);
    CHECK(b.normal_form(free) == free);

    const auto p = perturbed_pair_model(kParams, 10);
    CHECK(p.normal_form(TruncatedSeries::term(4, 10, Monomial{1, 5, 0, 0})) ==
          series(10, {{Monomial{0, 2, 7, 0}, 1}, {Monomial{1, 0, 7, 0}, -1}, {Monomial{0, 2, 0, 8}, 1},
                      {Monomial{1, 0, 0, 8}, -2}}));
    CHECK(p.normal_form(TruncatedSeries::term(4, 10, Monomial{2, 2, 0, 0})) ==
          series(10, {{Monomial{0, 5, 0, 0}, -1}, {y7, -1}, {z8, -2}}));
}

TEST_CASE("normal form failures")
{
    const auto b = brieskorn_pair_model(kParams, 10);
    CHECK_THROWS_AS(b.normal_form(TruncatedSeries::term(4, 10, Monomial{3, 0, 0, 0}), 0), NonTermination);
    CHECK_NOTHROW(b.normal_form(TruncatedSeries::term(4, 10, Monomial{2, 0, 0, 0}), 0));
    CHECK_THROWS_AS(b.normal_form(TruncatedSeries(4, 9)), InvalidInput);

    // x^2 -> x lowers the degree.
    TruncatedSeries x(1, 4);
    x.add_term(Monomial{1}, 1);
    CHECK_THROWS_AS(QuotientRingModel({"x"}, 4, {}, {{Monomial{2}, x}}), InternalError);
    // A zero replacement is fine and makes x^2 vanish.
    const QuotientRingModel nil({"x"}, 4, {}, {{Monomial{2}, TruncatedSeries(1, 4)}});
    CHECK(hilbert_samuel(nil, 4) == std::vector<std::uint64_t>{1, 1, 0, 0, 0});
}

TEST_CASE("hilbert-samuel coefficients")
{
    CHECK(hilbert_series_brieskorn_pair(3, 5, 6) == std::vector<std::uint64_t>{1, 4, 10, 19, 31, 45, 60});
    CHECK(hilbert_series_perturbed_pair(kParams, 4) == std::vector<std::uint64_t>{1, 4, 10, 19, 30});
    CHECK(first_difference(hilbert_series_brieskorn_pair(3, 5, 10), hilbert_series_perturbed_pair(kParams, 10)) ==
          std::size_t{4});
    CHECK(first_difference({1, 2}, {1, 2, 3}) == std::nullopt);
    CHECK(first_difference({1, 2}, {1, 3}) == std::size_t{1});

    const auto b = brieskorn_pair_model(kParams, 14);
    CHECK(hilbert_samuel(b, 10) == hilbert_series_brieskorn_pair(3, 5, 10));
    const auto p = perturbed_pair_model(kParams, 14);
    CHECK(hilbert_samuel(p, 10) == hilbert_series_perturbed_pair(kParams, 10));
    CHECK_THROWS_AS(hilbert_samuel(p, 11), InvalidInput);
}

TEST_CASE("closed forms agree with long division")
{
    const auto params = valid_params();
    REQUIRE(params.size() >= 10);
    for (const auto &p : params) {
        CHECK(hilbert_series_brieskorn_pair(p.a1, p.a2, 10) == to_u64(oracle::brieskorn_pair_series(p.a1, p.a2, 10)));
        CHECK(hilbert_series_perturbed_pair(p, 10) == to_u64(oracle::perturbed_pair_series(p.a1, p.a2, p.i, 10)));
    }
}

TEST_CASE("engine agrees with graded elimination")
{
    for (const auto &p : {kParams, HSParams{3, 7, 10, 11, 3, 3}, HSParams{2, 3, 5, 7, 2, make_rational(-1, 2)}}) {
        if (!check_hs_constraints(p).empty()) {
            const auto b = brieskorn_pair_model(p, 12);
            CHECK(hilbert_samuel(b, 8) == oracle::hilbert_samuel_by_elimination(4, relation_polys(b), 8));
            continue;
        }
        const auto b = brieskorn_pair_model(p, 8 + 8);
        CHECK(hilbert_samuel(b, 8) == oracle::hilbert_samuel_by_elimination(4, relation_polys(b), 8));
        const auto m = perturbed_pair_model(p, 8 + 8);
        CHECK(hilbert_samuel(m, 8) == oracle::hilbert_samuel_by_elimination(4, relation_polys(m), 8));
    }
}

TEST_CASE("normal form properties on random input")
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<unsigned> deg(0, 6);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> count(1, 6);
    for (const auto &model : {brieskorn_pair_model(kParams, 6), perturbed_pair_model(kParams, 6)}) {
        const oracle::GradedEliminator elim(4, relation_polys(model), 6);
        for (int t = 0; t < 40; ++t) {
            TruncatedSeries s(4, 6);
            const int terms = count(rng);
            for (int k = 0; k < terms; ++k) {
                const auto ms = monomials_of_degree(4, deg(rng));
                std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
                s.add_term(ms[pick(rng)], coeff(rng));
            }
            const auto nf = model.normal_form(s);
            CHECK(model.normal_form(nf) == nf);
            CHECK(elim.in_ideal(to_poly(s - nf)));
            for (unsigned d = 0; d <= nf.cap(); ++d) {
                for (const auto &[m, c] : nf.terms_of_degree(d)) {
                    CHECK(model.is_allowed(m));
                }
            }
            if (!s.is_zero() && !nf.is_zero()) {
                CHECK(*nf.codegree() >= *s.codegree());
            }
        }
    }
}
