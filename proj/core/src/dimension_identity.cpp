#include <splicequot/dimension_identity.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <exception>
#include <mutex>
#include <map>
#include <thread>
#include <unordered_map>

#include <splicequot/error.hpp>
#include <splicequot/sparse_echelon.hpp>

namespace splicequot
{

namespace
{

using Scaled = std::vector<std::int64_t>;

// Cycles scaled by det(-M), so every element of L' has integer entries.
struct ScaledLattice {
    std::int64_t det = 1;
    std::size_t vertices = 0;
    std::vector<Scaled> duals;       // det * E_v^*
    std::vector<Scaled> arrow_cycle; // det * E_{u(a)}^*

    explicit ScaledLattice(const Lattice &lattice)
    {
        det = to_int64(lattice.discriminant_order());
        vertices = lattice.size();
        for (std::size_t v = 0; v < vertices; ++v) {
            Scaled s(vertices);
            for (std::size_t w = 0; w < vertices; ++w) {
                const Rational x = lattice.dual_cycle(v)[w] * Rational(lattice.discriminant_order());
                s[w] = to_int64(x.get_num());
            }
            duals.push_back(std::move(s));
        }
        const auto &g = lattice.graph();
        for (std::size_t a = 0; a < g.arrows().size(); ++a) {
            arrow_cycle.push_back(duals[g.arrow_vertex(a)]);
        }
    }

    Scaled cycle_of(const Monomial &m) const
    {
        Scaled c(vertices, 0);
        for (std::size_t a = 0; a < m.size(); ++a) {
            for (std::size_t v = 0; v < vertices; ++v) {
                c[v] += static_cast<std::int64_t>(m[a]) * arrow_cycle[a][v];
            }
        }
        return c;
    }

    bool same_class(const Scaled &a, const Scaled &b) const
    {
        for (std::size_t v = 0; v < vertices; ++v) {
            if ((a[v] - b[v]) % det != 0) {
                return false;
            }
        }
        return true;
    }
};

struct Equation {
    std::vector<std::pair<Monomial, Rational>> terms;
    Scaled cycle; // of any term; all terms share the class
};

// Monomials outside F(l' + E_V) up to the degree cap.
struct Universe {
    std::vector<Monomial> monomials;
    std::vector<Scaled> cycles;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
};

Universe enumerate_outside(const ScaledLattice &sl, const Scaled &ceiling, std::size_t num_arrows, unsigned cap)
{
    Universe u;
    const auto outside = [&](const Scaled &c) {
        for (std::size_t v = 0; v < sl.vertices; ++v) {
            if (c[v] < ceiling[v]) {
                return true;
            }
        }
        return false;
    };
    struct Frame {
        Monomial m;
        Scaled c;
        std::size_t last;
    };
    std::vector<Frame> stack;
    stack.push_back({Monomial(num_arrows), Scaled(sl.vertices, 0), 0});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        const unsigned deg = f.m.degree();
        if (deg < cap) {
            for (std::size_t a = f.last; a < num_arrows; ++a) {
                Scaled c = f.c;
                for (std::size_t v = 0; v < sl.vertices; ++v) {
                    c[v] += sl.arrow_cycle[a][v];
                }
                if (!outside(c)) {
                    continue;
                }
                Monomial m = f.m;
                m[a] += 1;
                stack.push_back({std::move(m), std::move(c), a});
            }
        }
        u.index.emplace(f.m, u.monomials.size());
        u.monomials.push_back(std::move(f.m));
        u.cycles.push_back(std::move(f.c));
    }
    return u;
}

struct KResult {
    Integer lhs;
    std::vector<std::size_t> dims; // dim U_I for every subset I, by bitmask
};

KResult evaluate(const ScaledLattice &sl, const std::vector<Equation> &equations, std::size_t num_arrows,
                 const std::vector<std::uint32_t> &k, unsigned cap)
{
    const std::size_t n = sl.vertices;
    Scaled level(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
        for (std::size_t v = 0; v < n; ++v) {
            level[v] += static_cast<std::int64_t>(k[w]) * sl.duals[w][v];
        }
    }
    Scaled ceiling = level;
    for (auto &x : ceiling) {
        x += sl.det;
    }
    const Universe u = enumerate_outside(sl, ceiling, num_arrows, cap);

    // Class-chi monomials become columns, highest degree first.
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < u.monomials.size(); ++i) {
        if (sl.same_class(u.cycles[i], level)) {
            members.push_back(i);
        }
    }
    std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
        const auto dx = u.monomials[x].degree();
        const auto dy = u.monomials[y].degree();
        return dx != dy ? dx > dy : u.monomials[x] < u.monomials[y];
    });
    std::vector<std::size_t> column(u.monomials.size(), SIZE_MAX);
    for (std::size_t col = 0; col < members.size(); ++col) {
        column[members[col]] = col;
    }

    SparseEchelon relations;
    for (const auto &eq : equations) {
        for (std::size_t i = 0; i < u.monomials.size(); ++i) {
            Scaled c = u.cycles[i];
            for (std::size_t v = 0; v < n; ++v) {
                c[v] += eq.cycle[v];
            }
            if (!sl.same_class(c, level)) {
                continue;
            }
            std::vector<std::pair<std::size_t, Rational>> entries;
            for (const auto &[t, coeff] : eq.terms) {
                const auto it = u.index.find(u.monomials[i] * t);
                if (it != u.index.end()) {
                    entries.emplace_back(column[it->second], coeff);
                }
            }
            if (!entries.empty()) {
                relations.insert(make_sparse_row(std::move(entries)));
            }
        }
    }

    // Reduced level monomials, grouped by the vertex set where they clear l' + E_v.
    std::map<std::uint32_t, SparseEchelon> groups;
    for (auto i : members) {
        const auto &c = u.cycles[i];
        bool in_level = true;
        std::uint32_t tau = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (c[v] < level[v]) {
                in_level = false;
                break;
            }
            if (c[v] >= ceiling[v]) {
                tau |= 1u << v;
            }
        }
        if (!in_level) {
            continue;
        }
        auto residual = relations.reduce(SparseRow{{column[i], Rational(1)}});
        if (!residual.empty()) {
            groups[tau].insert(std::move(residual));
        }
    }
    std::vector<std::pair<std::uint32_t, const SparseEchelon *>> group_list;
    for (const auto &[tau, e] : groups) {
        group_list.emplace_back(tau, &e);
    }

    KResult out;
    const std::uint32_t subsets = 1u << n;
    out.dims.assign(subsets, 0);
    std::map<std::vector<bool>, std::size_t> cache;
    for (std::uint32_t I = 0; I < subsets; ++I) {
        std::vector<bool> key(group_list.size(), false);
        bool any = false;
        for (std::size_t gi = 0; gi < group_list.size(); ++gi) {
            if ((group_list[gi].first & I) == I) {
                key[gi] = true;
                any = true;
            }
        }
        std::size_t dim = 0;
        if (any) {
            const auto it = cache.find(key);
            if (it != cache.end()) {
                dim = it->second;
            } else {
                SparseEchelon span;
                for (std::size_t gi = 0; gi < group_list.size(); ++gi) {
                    if (key[gi]) {
                        for (const auto &row : group_list[gi].second->rows()) {
                            span.insert(row);
                        }
                    }
                }
                dim = span.rank();
                cache.emplace(std::move(key), dim);
            }
        }
        out.dims[I] = dim;
        if (std::popcount(I) % 2 == 0) {
            out.lhs += static_cast<unsigned long>(dim);
        } else {
            out.lhs -= static_cast<unsigned long>(dim);
        }
    }
    return out;
}

// Generalised binomial coefficient C(m, k) for any integer m.
Integer binomial(std::int64_t m, std::uint32_t k)
{
    Integer num = 1;
    Integer den = 1;
    for (std::uint32_t j = 0; j < k; ++j) {
        num *= static_cast<long>(m - static_cast<std::int64_t>(j));
        den *= static_cast<unsigned long>(j + 1);
    }
    return num / den;
}

std::vector<std::vector<std::uint32_t>> multi_indices(std::size_t n, unsigned cap)
{
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> k(n, 0);
    for (unsigned total = 0; total <= cap; ++total) {
        std::vector<std::vector<std::uint32_t>> layer;
        auto fill = [&](auto &self, std::size_t pos, unsigned left) -> void {
            if (pos + 1 == n) {
                k[pos] = left;
                layer.push_back(k);
                return;
            }
            for (unsigned x = 0; x <= left; ++x) {
                k[pos] = x;
                self(self, pos + 1, left - x);
            }
        };
        fill(fill, 0, total);
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace

std::size_t IdentityReport::count(IdentityStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [&](const IdentityEntry &e) { return e.status == s; }));
}

Integer identity_rhs(const ResolutionGraph &g, const std::vector<std::uint32_t> &k)
{
    if (k.size() != g.size()) {
        throw InvalidInput("multi-index has the wrong length");
    }
    Integer out = 1;
    for (std::size_t v = 0; v < g.size(); ++v) {
        Integer term = binomial(static_cast<std::int64_t>(g.degree(v)) - 2, k[v]);
        if (k[v] % 2 == 1) {
            term = -term;
        }
        out *= term;
    }
    return out;
}

IdentityReport verify_dimension_identity(const Lattice &lattice, const SpliceEquationSystem &system,
                                         const IdentityOptions &options)
{
    const auto &g = lattice.graph();
    if (g.size() > 20) {
        throw InvalidInput("graph has " + std::to_string(g.size()) + " vertices; the identity check handles at most 20");
    }
    const auto ecc = end_curve_condition(g);
    if (!ecc.holds) {
        throw InvalidInput("the End Curve Condition fails at '" + g.id(ecc.violations.front()) + "'");
    }
    const std::size_t num_arrows = g.arrows().size();
    const ScaledLattice sl(lattice);

    std::vector<Equation> equations;
    for (const auto &eq : system.equations()) {
        if (eq.polynomial.empty()) {
            continue;
        }
        Equation e;
        for (const auto &[m, c] : eq.polynomial) {
            if (m.size() != num_arrows) {
                throw InvalidInput("splice equation does not match the graph's arrows");
            }
            e.terms.emplace_back(m, c);
        }
        e.cycle = sl.cycle_of(e.terms.front().first);
        for (const auto &[m, c] : e.terms) {
            if (!sl.same_class(sl.cycle_of(m), e.cycle)) {
                throw InvalidInput("splice equation mixes eigenspaces");
            }
        }
        equations.push_back(std::move(e));
    }

    IdentityReport report;
    report.k_cap = options.k_cap;
    report.degree_cap = options.degree_cap;
    const auto ks = multi_indices(g.size(), options.k_cap);
    report.entries.resize(ks.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= ks.size()) {
                return;
            }
            try {
                IdentityEntry &e = report.entries[idx];
                e.k = ks[idx];
                e.rhs = identity_rhs(g, e.k);
                const KResult at = evaluate(sl, equations, num_arrows, e.k, options.degree_cap);
                const KResult above = evaluate(sl, equations, num_arrows, e.k, options.degree_cap + 1);
                e.lhs = at.lhs;
                e.lhs_next = above.lhs;
                e.stable = at.dims == above.dims;
                if (!e.stable) {
                    e.status = IdentityStatus::Inconclusive;
                } else {
                    e.status = e.lhs == e.rhs ? IdentityStatus::Match : IdentityStatus::Mismatch;
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(ks.size());
                return;
            }
        }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return report;
}

} // namespace splicequot
