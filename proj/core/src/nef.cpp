#include <splicequot/nef.hpp>

#include <algorithm>

#include <splicequot/error.hpp>

namespace splicequot
{

bool is_nef(const Lattice &lattice, const RationalCycle &l)
{
    for (std::size_t v = 0; v < lattice.size(); ++v) {
        if (lattice.pairing_with_curve(l, v) < 0) {
            return false;
        }
    }
    return true;
}

IntegralCycle laufer_reduce(const Lattice &lattice, const RationalCycle &c, VertexRule rule)
{
    const std::size_t n = lattice.size();
    if (c.size() != n) {
        throw InvalidInput("cycle over a different vertex set");
    }
    // Track <c - x, E_v> directly; adding E_w changes it by -M_vw.
    const auto &m = lattice.intersection_matrix();
    std::vector<Rational> slack(n);
    for (std::size_t v = 0; v < n; ++v) {
        slack[v] = lattice.pairing_with_curve(c, v);
    }
    IntegralCycle x(n);
    for (;;) {
        std::size_t pick = n;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t v = rule == VertexRule::Lowest ? k : n - 1 - k;
            if (slack[v] < 0) {
                pick = v;
                break;
            }
        }
        if (pick == n) {
            return x;
        }
        x[pick] += 1;
        slack[pick] -= Rational(m(pick, pick));
        for (auto w : lattice.graph().neighbors(pick)) {
            slack[w] -= 1;
        }
    }
}

namespace
{

struct NefSearch {
    const Lattice &lattice;
    std::vector<Rational> room; // -bound minus the running sum of chosen duals
    std::vector<RationalCycle> found;
    RationalCycle current;

    void run(std::size_t w)
    {
        if (w == lattice.size()) {
            found.push_back(current);
            return;
        }
        const auto &dual = lattice.dual_cycle(w);
        std::size_t taken = 0;
        for (;;) {
            run(w + 1);
            if (!fits(dual)) {
                break;
            }
            add(dual, -1);
            ++taken;
        }
        for (std::size_t k = 0; k < taken; ++k) {
            add(dual, 1);
        }
    }

    bool fits(const RationalCycle &dual) const
    {
        for (std::size_t u = 0; u < room.size(); ++u) {
            if (dual[u] > room[u]) {
                return false;
            }
        }
        return true;
    }

    // sign -1 takes one more copy of -dual into the cycle, +1 returns it.
    void add(const RationalCycle &dual, int sign)
    {
        for (std::size_t u = 0; u < room.size(); ++u) {
            if (sign < 0) {
                room[u] -= dual[u];
                current[u] -= dual[u];
            } else {
                room[u] += dual[u];
                current[u] += dual[u];
            }
        }
    }
};

} // namespace

std::vector<RationalCycle> enumerate_nef_above(const Lattice &lattice, const RationalCycle &bound)
{
    const std::size_t n = lattice.size();
    if (bound.size() != n) {
        throw InvalidInput("bound over a different vertex set");
    }
    for (std::size_t u = 0; u < n; ++u) {
        if (bound[u] > 0) {
            return {};
        }
    }
    NefSearch search{lattice, std::vector<Rational>(n), {}, lattice.zero()};
    for (std::size_t u = 0; u < n; ++u) {
        search.room[u] = -bound[u];
    }
    search.run(0);
    std::sort(search.found.begin(), search.found.end());
    return std::move(search.found);
}

bool nef_dual_bound_check(const Lattice &lattice, const RationalCycle &l, std::size_t v)
{
    if (v >= lattice.size()) {
        throw InvalidInput("vertex index out of range");
    }
    if (!is_nef(lattice, l)) {
        throw InvalidInput("cycle is not numerically effective");
    }
    const auto &dual = lattice.dual_cycle(v);
    const Rational ratio = lattice.pairing(l, dual) / lattice.dual_pairing(v, v);
    return cycle_leq(l, ratio * dual);
}

} // namespace splicequot
