#include <splicequot/filtration.hpp>

#include <splicequot/error.hpp>
#include <splicequot/splice.hpp>

namespace splicequot
{

FiltrationLevel::FiltrationLevel(const Lattice &lattice, RationalCycle l) : l_(std::move(l))
{
    if (l_.size() != lattice.size()) {
        throw InvalidInput("level cycle over a different vertex set");
    }
    for (std::size_t v = 0; v < l_.size(); ++v) {
        if (l_[v] < 0) {
            throw InvalidInput("filtration level must be effective");
        }
    }
    if (!lattice.in_dual_lattice(l_)) {
        throw InvalidInput("filtration level is not in L'");
    }
}

bool level_contains(const Lattice &lattice, const FiltrationLevel &level, const Monomial &m)
{
    return cycle_leq(level.cycle(), monomial_cycle(lattice, m));
}

std::vector<Monomial> monomials_in_level(const Lattice &lattice, const FiltrationLevel &level, unsigned cap)
{
    std::vector<Monomial> out;
    for (auto &m : monomials_up_to_degree(lattice.graph().arrows().size(), cap)) {
        if (level_contains(lattice, level, m)) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<Monomial> monomials_in_factor(const Lattice &lattice, const FiltrationLevel &lower,
                                          const FiltrationLevel &upper, unsigned cap)
{
    if (!cycle_leq(lower.cycle(), upper.cycle())) {
        throw InvalidInput("factor needs the lower level to be <= the upper level");
    }
    std::vector<Monomial> out;
    for (auto &m : monomials_up_to_degree(lattice.graph().arrows().size(), cap)) {
        const auto c = monomial_cycle(lattice, m);
        if (cycle_leq(lower.cycle(), c) && !cycle_leq(upper.cycle(), c)) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

EigenspaceData eigenspace_data(const Lattice &lattice, const Monomial &m, const FiltrationLevel &level)
{
    const auto c = monomial_cycle(lattice, m);
    return EigenspaceData{lattice.reduce_to_q(c), lattice.reduce_to_q(c - level.cycle()).representative};
}

} // namespace splicequot
