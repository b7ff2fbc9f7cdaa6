#ifndef SPLICEQUOT_GRAPH_HPP
#define SPLICEQUOT_GRAPH_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <splicequot/matrix.hpp>
#include <splicequot/rational.hpp>

namespace splicequot
{

struct Vertex {
    std::string id;
    std::int64_t weight; // self-intersection E_v^2, negative
};

// One end curve: the index-th arrow attached at a vertex.
struct ArrowId {
    std::string vertex;
    std::size_t index = 0;

    std::string to_string() const; // "vertex#index"
    static ArrowId parse(const std::string &text);

    friend bool operator==(const ArrowId &, const ArrowId &) = default;
    friend auto operator<=>(const ArrowId &, const ArrowId &) = default;
};

// Weighted tree of exceptional curves with end-curve decorations. Vertices
// are kept sorted by id; every index-based accessor uses that order.
class ResolutionGraph
{
public:
    // Validates ids, weights, and the tree property; throws InvalidInput.
    ResolutionGraph(std::vector<Vertex> vertices, const std::vector<std::pair<std::string, std::string>> &edges,
                    const std::map<std::string, std::size_t> &arrows = {});

    std::size_t size() const
    {
        return vertices_.size();
    }
    const std::vector<Vertex> &vertices() const
    {
        return vertices_;
    }
    const std::string &id(std::size_t v) const
    {
        return vertices_.at(v).id;
    }
    std::int64_t weight(std::size_t v) const
    {
        return vertices_.at(v).weight;
    }
    std::size_t index_of(const std::string &id) const;
    bool has_vertex(const std::string &id) const;

    const std::vector<std::size_t> &neighbors(std::size_t v) const
    {
        return adjacency_.at(v);
    }
    std::size_t degree(std::size_t v) const
    {
        return adjacency_.at(v).size();
    }
    // Edges as index pairs (a < b), sorted.
    const std::vector<std::pair<std::size_t, std::size_t>> &edges() const
    {
        return edges_;
    }

    std::size_t arrow_count(std::size_t v) const
    {
        return arrow_counts_.at(v);
    }
    // All arrows sorted by (vertex, index); positions are the arrow indices
    // used by monomials.
    const std::vector<ArrowId> &arrows() const
    {
        return arrows_;
    }
    std::size_t arrow_vertex(std::size_t arrow) const
    {
        return arrow_vertex_.at(arrow);
    }
    std::size_t arrow_index_of(const ArrowId &a) const;

private:
    std::vector<Vertex> vertices_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::size_t> arrow_counts_;
    std::vector<ArrowId> arrows_;
    std::vector<std::size_t> arrow_vertex_;
};

// Coefficient vector in the E_v basis, indexed like the graph's vertices.
template <typename T>
class Cycle
{
public:
    Cycle() = default;
    explicit Cycle(std::size_t n) : c_(n, T(0)) {}
    explicit Cycle(std::vector<T> coeffs) : c_(std::move(coeffs)) {}

    std::size_t size() const
    {
        return c_.size();
    }
    T &operator[](std::size_t i)
    {
        return c_[i];
    }
    const T &operator[](std::size_t i) const
    {
        return c_[i];
    }
    const std::vector<T> &coefficients() const
    {
        return c_;
    }

    Cycle &operator+=(const Cycle &o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        return *this;
    }
    Cycle &operator-=(const Cycle &o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        return *this;
    }
    Cycle &operator*=(const T &s)
    {
        for (auto &x : c_) {
            x *= s;
        }
        return *this;
    }
    friend Cycle operator+(Cycle a, const Cycle &b)
    {
        a += b;
        return a;
    }
    friend Cycle operator-(Cycle a, const Cycle &b)
    {
        a -= b;
        return a;
    }
    friend Cycle operator-(Cycle a)
    {
        for (auto &x : a.c_) {
            x = -x;
        }
        return a;
    }
    friend Cycle operator*(const T &s, Cycle a)
    {
        a *= s;
        return a;
    }

    bool is_zero() const
    {
        for (const auto &x : c_) {
            if (x != 0) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Cycle &a, const Cycle &b)
    {
        return a.c_ == b.c_;
    }
    // Lexicographic on coefficients; a total order for sorting, not the
    // partial order of cycle_leq.
    friend bool operator<(const Cycle &a, const Cycle &b)
    {
        return a.c_ < b.c_;
    }

private:
    void check(const Cycle &o) const
    {
        if (o.c_.size() != c_.size()) {
            throw InvalidInput("cycles over different vertex sets");
        }
    }

    std::vector<T> c_;
};

using RationalCycle = Cycle<Rational>;
using IntegralCycle = Cycle<Integer>;

RationalCycle to_rational(const IntegralCycle &c);

// Throws InvalidInput when some coefficient is not an integer.
IntegralCycle to_integral(const RationalCycle &c);

// Componentwise a <= b.
template <typename T>
bool cycle_leq(const Cycle<T> &a, const Cycle<T> &b)
{
    if (a.size() != b.size()) {
        throw InvalidInput("cycles over different vertex sets");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

// Element of H = L'/L, stored as its representative in Q (coefficients in [0, 1)).
struct DiscriminantClass {
    RationalCycle representative;

    bool is_zero() const
    {
        return representative.is_zero();
    }
    friend bool operator==(const DiscriminantClass &, const DiscriminantClass &) = default;
    friend bool operator<(const DiscriminantClass &a, const DiscriminantClass &b)
    {
        return a.representative < b.representative;
    }
};

// Divisor on exceptional curves and arrows (end curves).
struct DecoratedDivisor {
    IntegralCycle exceptional;
    std::map<ArrowId, Integer> arrows;

    bool is_effective() const;
    friend bool operator==(const DecoratedDivisor &, const DecoratedDivisor &) = default;
};

// A component of the graph minus one vertex, or a single arrow at that vertex.
struct Branch {
    std::vector<std::size_t> vertices; // sorted; empty for an arrow branch
    std::vector<std::size_t> arrows;   // indices into graph.arrows()

    bool is_arrow() const
    {
        return vertices.empty();
    }
    friend bool operator==(const Branch &, const Branch &) = default;
};

IntMatrix intersection_matrix(const ResolutionGraph &g);

// Leading principal minors of -M, all positive, in exact arithmetic.
bool is_negative_definite(const ResolutionGraph &g);

// Connected components of g minus v, ordered by smallest vertex index.
std::vector<Branch> components_without(const ResolutionGraph &g, std::size_t v);

// det of -M restricted to the branch's vertices; 1 for an arrow branch.
Integer branch_determinant(const ResolutionGraph &g, const Branch &branch);

// The intersection lattice of a negative-definite graph. Holds the inverse
// intersection matrix so duals and pairings are lookups.
class Lattice
{
public:
    // Throws InvalidInput unless g is negative definite.
    explicit Lattice(ResolutionGraph g);

    const ResolutionGraph &graph() const
    {
        return graph_;
    }
    std::size_t size() const
    {
        return graph_.size();
    }
    const IntMatrix &intersection_matrix() const
    {
        return m_;
    }
    // |H| = det(-M).
    const Integer &discriminant_order() const
    {
        return det_;
    }

    RationalCycle zero() const
    {
        return RationalCycle(size());
    }
    // The cycle E_v.
    RationalCycle curve(std::size_t v) const;
    // E_v^*: <E_v^*, E_w> = -delta_vw. Equals the negated v-th column of M^-1.
    const RationalCycle &dual_cycle(std::size_t v) const
    {
        return duals_.at(v);
    }
    // <E_v^*, E_w^*> = (M^-1)_vw.
    const Rational &dual_pairing(std::size_t v, std::size_t w) const
    {
        return inverse_(v, w);
    }

    Rational pairing(const RationalCycle &a, const RationalCycle &b) const;
    // <a, E_v>.
    Rational pairing_with_curve(const RationalCycle &a, std::size_t v) const;
    Integer pairing_with_curve(const IntegralCycle &a, std::size_t v) const;

    // l' in L' iff it pairs integrally with every E_v.
    bool in_dual_lattice(const RationalCycle &c) const;

    // Fractional part; throws InvalidInput when c is not in L'.
    DiscriminantClass reduce_to_q(const RationalCycle &c) const;

    // frac(-<h, l'>), so theta([h])(l') = exp(2 pi i * result).
    Rational theta_exponent(const DiscriminantClass &h, const RationalCycle &l) const;

private:
    void check_cycle(const RationalCycle &c) const;

    ResolutionGraph graph_;
    IntMatrix m_;
    Integer det_;
    RatMatrix inverse_;
    std::vector<RationalCycle> duals_;
};

// Divisor extension over a subtree: starting from d on the vertex set sub,
// visit the remaining vertices breadth first and put the residual at each
// new vertex on its lowest free arrow, or else its lowest unvisited
// neighbour. Requires tree degree + arrow count >= 2 at every vertex.
DecoratedDivisor extend_divisor(const Lattice &lattice, std::span<const std::size_t> sub, const DecoratedDivisor &d,
                                const RationalCycle &target);

// <D, E_v> for a decorated divisor; each arrow at v meets E_v once.
Integer divisor_pairing(const ResolutionGraph &g, const DecoratedDivisor &d, std::size_t v);

// Star-shaped tree. Central vertex id "c"; leg j vertex k (k = 0 next to
// the center) is "b<j>_<k>". Optionally one arrow at each leg end.
ResolutionGraph star_graph(std::int64_t central_weight, const std::vector<std::vector<std::int64_t>> &legs,
                           bool leg_end_arrows = false);

// Negative continued fraction a/omega = [b1, ..., bk], all b >= 2.
std::vector<std::int64_t> negative_continued_fraction(std::int64_t a, std::int64_t omega);

struct Det1StarSearch {
    std::int64_t max_central = 10;
};

// Four-legged star with leg determinants a, det(-M) = 1, one arrow per leg end.
ResolutionGraph find_det1_star(const std::array<std::int64_t, 4> &a, const Det1StarSearch &search = {});

} // namespace splicequot

#endif
