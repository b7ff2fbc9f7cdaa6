#ifndef SPLICEQUOT_TEST_FIXTURES_HPP
#define SPLICEQUOT_TEST_FIXTURES_HPP

#include <splicequot/graph.hpp>

namespace fixtures
{

using namespace splicequot;

inline ResolutionGraph single_vertex(std::int64_t weight, std::size_t arrows = 0)
{
    std::map<std::string, std::size_t> a;
    if (arrows > 0) {
        a["v"] = arrows;
    }
    return ResolutionGraph({{"v", weight}}, {}, a);
}

inline ResolutionGraph path(const std::vector<std::int64_t> &weights, const std::map<std::string, std::size_t> &arrows = {})
{
    std::vector<Vertex> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        vs.push_back({"v" + std::to_string(i + 1), weights[i]});
        if (i > 0) {
            es.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
        }
    }
    return ResolutionGraph(vs, es, arrows);
}

// Central -2 with (-2)-legs of lengths 1, 2, 4.
inline ResolutionGraph e8(bool leg_end_arrows = true)
{
    return star_graph(-2, {{-2}, {-2, -2}, {-2, -2, -2, -2}}, leg_end_arrows);
}

inline ResolutionGraph sigma_237()
{
    return star_graph(-1, {{-2}, {-3}, {-7}}, true);
}

// Central -2 with three single (-2) legs.
inline ResolutionGraph d4()
{
    return star_graph(-2, {{-2}, {-2}, {-2}}, true);
}

inline RationalCycle cycle(std::initializer_list<Rational> c)
{
    return RationalCycle(std::vector<Rational>(c));
}

} // namespace fixtures

#endif
