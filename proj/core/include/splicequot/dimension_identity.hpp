#ifndef SPLICEQUOT_DIMENSION_IDENTITY_HPP
#define SPLICEQUOT_DIMENSION_IDENTITY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <splicequot/graph.hpp>
#include <splicequot/splice.hpp>

namespace splicequot
{

// Coefficientwise check of
//   sum_k sum_{I subset V} (-1)^(|I|+1) dim F(l')_chi / F(l' + E_I)_chi  x^k
//     = prod_v (1 - x_v)^(deg(v) - 2),
// with l' = sum_v k_v E_v^*, chi = [l'], deg the tree degree, and the
// filtration levels realised by monomials modulo the splice equations.
//
// For each k, everything happens in A = F(l')_chi / F(l' + E_V)_chi. The
// monomials outside F(l' + E_V) form a finite set closed under division, so
// truncating at degree_cap loses nothing once the cap passes the largest of
// them. The relation multiples mu * f_j are eliminated from the class-chi
// monomials, each level monomial is reduced against them, and dim F(l' + E_I)
// inside A is the rank of the reduced level monomials that lie in
// F(l' + E_I). The alternating sum collapses to sum_I (-1)^|I| dim U_I.

enum class IdentityStatus { Match, Mismatch, Inconclusive };

struct IdentityOptions {
    unsigned k_cap = 3;
    unsigned degree_cap = 20;
    unsigned jobs = 1; // worker threads over the multi-indices
};

struct IdentityEntry {
    std::vector<std::uint32_t> k; // per vertex, graph order
    Integer lhs;                  // at degree_cap
    Integer lhs_next;             // at degree_cap + 1
    Integer rhs;
    bool stable = false; // every dim U_I agrees between the two caps
    IdentityStatus status = IdentityStatus::Inconclusive;
};

struct IdentityReport {
    unsigned k_cap = 0;
    unsigned degree_cap = 0;
    std::vector<IdentityEntry> entries; // by total degree, then lexicographic

    std::size_t count(IdentityStatus s) const;
};

// Coefficient of x^k in prod_v (1 - x_v)^(deg(v) - 2).
Integer identity_rhs(const ResolutionGraph &g, const std::vector<std::uint32_t> &k);

// Throws InvalidInput when the End Curve Condition fails, when the system
// does not match the graph's arrows, or for graphs above 20 vertices.
IdentityReport verify_dimension_identity(const Lattice &lattice, const SpliceEquationSystem &system,
                                         const IdentityOptions &options);

} // namespace splicequot

#endif
