#ifndef SPLICEQUOT_NEF_HPP
#define SPLICEQUOT_NEF_HPP

#include <cstddef>
#include <vector>

#include <splicequot/graph.hpp>

namespace splicequot
{

// <l', E_v> >= 0 for every vertex.
bool is_nef(const Lattice &lattice, const RationalCycle &l);

enum class VertexRule { Lowest, Highest };

// Least effective x in L with c - x nef: start at 0 and add E_v at a vertex
// where <c - x, E_v> < 0 until none is left. The rule only picks among the
// violating vertices; the result does not depend on it.
IntegralCycle laufer_reduce(const Lattice &lattice, const RationalCycle &c, VertexRule rule = VertexRule::Lowest);

// All nef l' in L' with l' >= bound, sorted lexicographically by coefficients.
// A nef element of L' is -sum n_w E_w^* with n_w = <l', E_w> >= 0 integral, so
// the search runs over the n_w; since every E_w^* is strictly positive the
// partial sums only grow and the bound prunes directly.
std::vector<RationalCycle> enumerate_nef_above(const Lattice &lattice, const RationalCycle &bound);

// For nef l': l' <= (<l', E_v^*> / <E_v^*, E_v^*>) E_v^* componentwise.
// Throws InvalidInput when l' is not nef.
bool nef_dual_bound_check(const Lattice &lattice, const RationalCycle &l, std::size_t v);

} // namespace splicequot

#endif
