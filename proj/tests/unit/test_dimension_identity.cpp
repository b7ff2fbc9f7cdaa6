#include <doctest.h>

#include "fixtures.hpp"
#include <splicequot/dimension_identity.hpp>
#include <splicequot/error.hpp>

using namespace splicequot;

namespace
{

IdentityReport run(const ResolutionGraph &g, IdentityOptions opts)
{
    const Lattice lat(g);
    const auto sys = generate_splice_equations(lat, monomial_condition(lat));
    return verify_dimension_identity(lat, sys, opts);
}

std::vector<std::uint32_t> at(const ResolutionGraph &g, std::initializer_list<std::pair<std::string, std::uint32_t>> ks)
{
    std::vector<std::uint32_t> k(g.size(), 0);
    for (const auto &[id, v] : ks) {
        k[g.index_of(id)] = v;
    }
    return k;
}

} // namespace

TEST_CASE("right-hand side coefficients")
{
    const auto e8 = fixtures::e8();
    CHECK(identity_rhs(e8, at(e8, {})) == 1);
    CHECK(identity_rhs(e8, at(e8, {{"c", 1}})) == -1);
    CHECK(identity_rhs(e8, at(e8, {{"c", 2}})) == 0);
    CHECK(identity_rhs(e8, at(e8, {{"b0_0", 3}})) == 1);
    CHECK(identity_rhs(e8, at(e8, {{"b1_0", 1}})) == 0);
    CHECK(identity_rhs(e8, at(e8, {{"c", 1}, {"b2_3", 2}})) == -1);

    const auto two = fixtures::single_vertex(-1, 2);
    for (std::uint32_t k = 0; k < 6; ++k) {
        CHECK(identity_rhs(two, {k}) == k + 1);
    }
    // Four branches at the center of a star: (1 - x)^2.
    const auto star = find_det1_star({2, 3, 5, 7});
    CHECK(identity_rhs(star, at(star, {{"c", 1}})) == -2);
    CHECK(identity_rhs(star, at(star, {{"c", 2}})) == 1);
    CHECK(identity_rhs(star, at(star, {{"c", 3}})) == 0);
    CHECK_THROWS_AS(identity_rhs(two, {1, 2}), InvalidInput);
}

TEST_CASE("identity on E8")
{
    const auto report = run(fixtures::e8(), {3, 20, 1});
    CHECK(report.k_cap == 3);
    CHECK(report.degree_cap == 20);
    // Multi-indices on 8 vertices with total degree <= 3.
    CHECK(report.entries.size() == 165);
    CHECK(report.count(IdentityStatus::Match) == report.entries.size());
    const auto &zero = report.entries.front();
    CHECK(zero.k == std::vector<std::uint32_t>(8, 0));
    CHECK(zero.lhs == 1);
    CHECK(zero.stable);
}

TEST_CASE("identity without nodes")
{
    for (const auto &g : {fixtures::single_vertex(-1, 2), fixtures::single_vertex(-3, 2),
                          fixtures::path({-2, -2}, {{"v1", 1}, {"v2", 1}}),
                          fixtures::path({-2, -3, -2}, {{"v1", 1}, {"v3", 1}})}) {
        const auto report = run(g, {3, 16, 1});
        CHECK(report.count(IdentityStatus::Match) == report.entries.size());
    }
}

TEST_CASE("a low cap is inconclusive, never a mismatch")
{
    const auto report = run(fixtures::e8(), {2, 4, 1});
    CHECK(report.count(IdentityStatus::Mismatch) == 0);
    CHECK(report.count(IdentityStatus::Inconclusive) > 0);
    for (const auto &e : report.entries) {
        if (e.status == IdentityStatus::Inconclusive) {
            CHECK_FALSE(e.stable);
        }
    }
}

TEST_CASE("dropping the equations breaks the identity")
{
    const Lattice lat(fixtures::e8());
    const auto report = verify_dimension_identity(lat, SpliceEquationSystem{}, {1, 20, 1});
    CHECK(report.count(IdentityStatus::Mismatch) > 0);
}

TEST_CASE("worker count does not change the report")
{
    const auto one = run(fixtures::e8(), {2, 16, 1});
    const auto two = run(fixtures::e8(), {2, 16, 2});
    REQUIRE(one.entries.size() == two.entries.size());
    for (std::size_t i = 0; i < one.entries.size(); ++i) {
        CHECK(one.entries[i].k == two.entries[i].k);
        CHECK(one.entries[i].lhs == two.entries[i].lhs);
        CHECK(one.entries[i].lhs_next == two.entries[i].lhs_next);
        CHECK(one.entries[i].status == two.entries[i].status);
    }
}

TEST_CASE("identity preconditions")
{
    const Lattice bare(fixtures::e8(false));
    CHECK_THROWS_AS(verify_dimension_identity(bare, SpliceEquationSystem{}, {}), InvalidInput);

    const Lattice big(fixtures::path(std::vector<std::int64_t>(21, -2), {{"v1", 1}, {"v21", 1}}));
    CHECK_THROWS_AS(verify_dimension_identity(big, SpliceEquationSystem{}, {}), InvalidInput);
}
