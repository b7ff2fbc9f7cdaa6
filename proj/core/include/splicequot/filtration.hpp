#ifndef SPLICEQUOT_FILTRATION_HPP
#define SPLICEQUOT_FILTRATION_HPP

#include <vector>

#include <splicequot/graph.hpp>
#include <splicequot/monomial.hpp>

namespace splicequot
{

// An effective element l' of L', naming the level F(l') of the divisorial
// filtration.
class FiltrationLevel
{
public:
    // Throws InvalidInput unless l' >= 0 and l' lies in L'.
    FiltrationLevel(const Lattice &lattice, RationalCycle l);

    const RationalCycle &cycle() const
    {
        return l_;
    }

private:
    RationalCycle l_;
};

// A monomial lies in F(l') iff sum alpha_a E_{u(a)}^* >= l'.
bool level_contains(const Lattice &lattice, const FiltrationLevel &level, const Monomial &m);

// Monomials of total degree <= cap in F(l'), in (degree, lex) order.
std::vector<Monomial> monomials_in_level(const Lattice &lattice, const FiltrationLevel &level, unsigned cap);

// Monomials of degree <= cap in F(lower) but not in F(upper). Throws
// InvalidInput unless lower <= upper.
std::vector<Monomial> monomials_in_factor(const Lattice &lattice, const FiltrationLevel &lower,
                                          const FiltrationLevel &upper, unsigned cap);

struct EigenspaceData {
    DiscriminantClass character; // class of the monomial
    RationalCycle offset;        // Q-representative of sum alpha E^* - l'
};

EigenspaceData eigenspace_data(const Lattice &lattice, const Monomial &m, const FiltrationLevel &level);

} // namespace splicequot

#endif
