#ifndef SPLICEQUOT_SPLICE_HPP
#define SPLICEQUOT_SPLICE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <splicequot/graph.hpp>
#include <splicequot/matrix.hpp>
#include <splicequot/monomial.hpp>

namespace splicequot
{

// Monomials in the arrow variables use the graph's arrow order: exponent i
// belongs to graph.arrows()[i].

// Polynomial in the arrow variables with exact coefficients; no zero entries.
using Polynomial = std::map<Monomial, Rational>;

// Components of g - v followed by one arrow branch per arrow at v.
std::vector<Branch> branches(const ResolutionGraph &g, std::size_t v);

struct EndCurveReport {
    bool holds = true;
    std::vector<std::size_t> violations; // vertices meeting fewer than two curves
};

EndCurveReport end_curve_condition(const ResolutionGraph &g);

// sum_a alpha_a E_{u(a)}^*, u(a) the vertex carrying arrow a.
RationalCycle monomial_cycle(const Lattice &lattice, const Monomial &m);

// -sum_a alpha_a <E_v^*, E_{u(a)}^*>.
Rational v_degree(const Lattice &lattice, std::size_t v, const Monomial &m);

DiscriminantClass character_of_monomial(const Lattice &lattice, const Monomial &m);

// A monomial admissible for a branch at a node, with the integral cycle
// sum alpha E^* - E_v^* it leaves on the branch's vertices.
struct AdmissibleCertificate {
    std::size_t node = 0;
    std::size_t branch = 0; // position in branches(g, node)
    Monomial monomial;
    IntegralCycle internal;

    friend bool operator==(const AdmissibleCertificate &, const AdmissibleCertificate &) = default;
};

// Every monomial on the branch's arrows of v-degree -<E_v^*, E_v^*> whose
// cycle minus E_v^* is integral, effective, and supported on the branch.
// Lexicographic order on exponents.
std::vector<AdmissibleCertificate> admissible_monomials(const Lattice &lattice, std::size_t v, std::size_t branch);

// Vertices with at least three branches, counting arrows.
std::vector<std::size_t> nodes(const ResolutionGraph &g);

struct MonomialConditionReport {
    bool holds = true;
    // Lexicographically least certificate for each (node, branch).
    std::map<std::pair<std::size_t, std::size_t>, AdmissibleCertificate> certificates;
    std::vector<std::pair<std::size_t, std::size_t>> failures;
};

MonomialConditionReport monomial_condition(const Lattice &lattice);

enum class CoefficientScheme { Vandermonde, Explicit };

// Extra terms H for equation `index` (1-based) at `node`.
struct HigherTerm {
    std::size_t node = 0;
    std::size_t index = 1;
    Polynomial terms;
};

struct SpliceOptions {
    CoefficientScheme scheme = CoefficientScheme::Vandermonde;
    // Used by the explicit scheme: (branches - 2) x branches per node.
    std::map<std::size_t, RatMatrix> coefficients;
    std::vector<HigherTerm> higher_terms;
};

struct NodeEquations {
    std::size_t node = 0;
    RatMatrix coefficients;                      // rows: equations, columns: branches
    std::vector<AdmissibleCertificate> monomials; // one per branch
    std::vector<Polynomial> higher;              // one per equation
};

struct SpliceEquation {
    std::size_t node = 0;
    std::size_t index = 1;
    Polynomial polynomial;
};

struct SpliceEquationSystem {
    std::vector<NodeEquations> nodes;

    // Flattened sum_C a_{i,C} M_C + H_i, ordered by node then index.
    std::vector<SpliceEquation> equations() const;
};

// Throws InvalidInput if the Monomial Condition fails, a coefficient matrix
// has the wrong shape or a vanishing maximal minor, or a higher term has the
// wrong character or too small a v-degree.
SpliceEquationSystem generate_splice_equations(const Lattice &lattice, const MonomialConditionReport &mc,
                                               const SpliceOptions &options = {});

// All maximal minors of a (rows <= cols) are nonzero.
bool maximal_minors_nonzero(const RatMatrix &a);

} // namespace splicequot

#endif
