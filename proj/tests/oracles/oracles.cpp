#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oracle
{

Dense intersection_form(const ResolutionGraph &g)
{
    const std::size_t n = g.size();
    Dense m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t v = 0; v < n; ++v) {
        m[v][v] = Rational(static_cast<long>(g.weight(v)));
        for (auto w : g.neighbors(v)) {
            m[v][w] = 1;
        }
    }
    return m;
}

Rational determinant(Dense a)
{
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) {
                a[i][j] -= f * a[k][j];
            }
        }
    }
    return det;
}

std::optional<Dense> inverse(Dense a)
{
    const std::size_t n = a.size();
    Dense inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) {
            ++p;
        }
        if (p == n) {
            return std::nullopt;
        }
        std::swap(a[p], a[k]);
        std::swap(inv[p], inv[k]);
        const Rational piv = a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] /= piv;
            inv[k][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) {
                continue;
            }
            const Rational f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

std::vector<Rational> solve(Dense a, std::vector<Rational> b)
{
    const auto inv = inverse(std::move(a));
    if (!inv) {
        throw std::runtime_error("oracle solve: singular system");
    }
    const std::size_t n = b.size();
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            x[i] += (*inv)[i][j] * b[j];
        }
    }
    return x;
}

RationalCycle dual_by_solve(const ResolutionGraph &g, std::size_t v)
{
    std::vector<Rational> rhs(g.size(), Rational(0));
    rhs[v] = -1;
    return RationalCycle(solve(intersection_form(g), rhs));
}

Rational pairing(const ResolutionGraph &g, const RationalCycle &a, const RationalCycle &b)
{
    const auto m = intersection_form(g);
    Rational s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            s += a[i] * m[i][j] * b[j];
        }
    }
    return s;
}

namespace
{

std::vector<Rational> mat_vec(const Dense &m, const std::vector<Rational> &x)
{
    std::vector<Rational> out(x.size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            out[i] += m[i][j] * x[j];
        }
    }
    return out;
}

Integer ceil_of(const Rational &r)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

} // namespace

std::vector<RationalCycle> nef_box_scan(const ResolutionGraph &g, const RationalCycle &bound)
{
    const auto m = intersection_form(g);
    Rational det = determinant(m);
    if (det < 0) {
        det = -det;
    }
    const Integer d = det.get_num();
    const std::size_t n = g.size();
    std::vector<Integer> lo(n);
    for (std::size_t v = 0; v < n; ++v) {
        lo[v] = ceil_of(bound[v] * Rational(d));
        if (lo[v] > 0) {
            return {};
        }
    }
    std::vector<RationalCycle> out;
    std::vector<Rational> x(n);
    std::function<void(std::size_t)> scan = [&](std::size_t v) {
        if (v == n) {
            const auto mx = mat_vec(m, x);
            for (const auto &p : mx) {
                if (!splicequot::is_integer(p) || p < 0) {
                    return;
                }
            }
            out.emplace_back(x);
            return;
        }
        for (Integer k = lo[v]; k <= 0; ++k) {
            x[v] = Rational(k, d);
            x[v].canonicalize();
            scan(v + 1);
        }
    };
    scan(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Integer>> nef_corrections_in_box(const ResolutionGraph &g, const RationalCycle &c,
                                                         const std::vector<Integer> &box)
{
    const auto m = intersection_form(g);
    const std::size_t n = g.size();
    std::vector<std::vector<Integer>> out;
    std::vector<Integer> y(n);
    std::function<void(std::size_t)> scan = [&](std::size_t v) {
        if (v == n) {
            std::vector<Rational> diff(n);
            for (std::size_t i = 0; i < n; ++i) {
                diff[i] = c[i] - Rational(y[i]);
            }
            const auto md = mat_vec(m, diff);
            if (std::all_of(md.begin(), md.end(), [](const Rational &p) { return p >= 0; })) {
                out.push_back(y);
            }
            return;
        }
        for (Integer k = 0; k <= box[v]; ++k) {
            y[v] = k;
            scan(v + 1);
        }
    };
    scan(0);
    return out;
}

std::vector<Monomial> admissible_scan(const ResolutionGraph &g, std::size_t v, const std::vector<std::size_t> &vertices,
                                      const std::vector<std::size_t> &arrows, unsigned max_exp)
{
    const std::size_t n = g.size();
    std::vector<RationalCycle> duals;
    for (std::size_t u = 0; u < n; ++u) {
        duals.push_back(dual_by_solve(g, u));
    }
    const Rational target = -pairing(g, duals[v], duals[v]);
    std::vector<bool> on_branch(n, false);
    for (auto u : vertices) {
        on_branch[u] = true;
    }
    std::vector<Monomial> out;
    Monomial m(g.arrows().size());
    std::function<void(std::size_t)> scan = [&](std::size_t j) {
        if (j == arrows.size()) {
            RationalCycle cyc(n);
            Rational degree = 0;
            for (std::size_t a = 0; a < m.size(); ++a) {
                const auto &du = duals[g.arrow_vertex(a)];
                for (std::size_t u = 0; u < n; ++u) {
                    cyc[u] += Rational(m[a]) * du[u];
                }
                degree -= Rational(m[a]) * pairing(g, duals[v], du);
            }
            if (degree != target) {
                return;
            }
            for (std::size_t u = 0; u < n; ++u) {
                const Rational rest = cyc[u] - duals[v][u];
                if (!splicequot::is_integer(rest) || rest < 0 || (!on_branch[u] && rest != 0)) {
                    return;
                }
            }
            out.push_back(m);
            return;
        }
        for (unsigned e = 0; e <= max_exp; ++e) {
            m[arrows[j]] = e;
            scan(j + 1);
        }
        m[arrows[j]] = 0;
    };
    scan(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Integer> poly_mul(const std::vector<Integer> &a, const std::vector<Integer> &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<Integer> series_divide(const std::vector<Integer> &p, const std::vector<Integer> &q, unsigned n)
{
    if (q.empty() || q[0] == 0) {
        throw std::runtime_error("oracle division by a series without constant term");
    }
    std::vector<Integer> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Integer acc = k < p.size() ? p[k] : Integer(0);
        for (unsigned j = 1; j <= k && j < q.size(); ++j) {
            acc -= q[j] * c[k - j];
        }
        if (acc % q[0] != 0) {
            throw std::runtime_error("oracle division left a fraction");
        }
        c[k] = acc / q[0];
    }
    return c;
}

namespace
{

// 1 - t^e, or t^a - t^b, as coefficient lists.
std::vector<Integer> binomial_poly(std::int64_t plus_exp, std::int64_t minus_exp)
{
    std::vector<Integer> out(static_cast<std::size_t>(std::max(plus_exp, minus_exp)) + 1);
    out[static_cast<std::size_t>(plus_exp)] += 1;
    out[static_cast<std::size_t>(minus_exp)] -= 1;
    return out;
}

std::vector<Integer> poly_add(std::vector<Integer> a, const std::vector<Integer> &b)
{
    if (a.size() < b.size()) {
        a.resize(b.size());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += b[i];
    }
    return a;
}

std::vector<Integer> one_minus_t_power(unsigned k)
{
    std::vector<Integer> out{1};
    for (unsigned j = 0; j < k; ++j) {
        out = poly_mul(out, {1, -1});
    }
    return out;
}

} // namespace

std::vector<Integer> brieskorn_pair_series(std::int64_t a1, std::int64_t a2, unsigned n)
{
    const auto num = poly_mul(binomial_poly(0, a1), binomial_poly(0, a2));
    return series_divide(num, one_minus_t_power(4), n);
}

std::vector<Integer> perturbed_pair_series(std::int64_t a1, std::int64_t a2, std::int64_t i, unsigned n)
{
    // Numerator over (1 - t)^4:
    //   (t - t^(a1-1)) (1 - t^a2) + (1 - t^(2a2-i)) (1 - t) + t^(a1-1) (1 - t^i) (1 - t)
    const auto first = poly_mul(binomial_poly(1, a1 - 1), binomial_poly(0, a2));
    const auto second = poly_mul(binomial_poly(0, 2 * a2 - i), {1, -1});
    const auto third = poly_mul(binomial_poly(a1 - 1, a1 - 1 + i), {1, -1});
    const auto num = poly_add(poly_add(first, second), third);
    return series_divide(num, one_minus_t_power(4), n);
}

GradedEliminator::GradedEliminator(std::size_t num_vars, const std::vector<Poly> &relations, unsigned cap)
    : cap_(cap), num_vars_(num_vars)
{
    for (const auto &f : relations) {
        unsigned low = UINT32_MAX;
        for (const auto &[m, c] : f) {
            low = std::min(low, m.degree());
        }
        if (low > cap) {
            continue;
        }
        for (const auto &mu : splicequot::monomials_up_to_degree(num_vars, cap - low)) {
            Poly row;
            for (const auto &[m, c] : f) {
                Monomial prod = mu * m;
                if (prod.degree() <= cap) {
                    row[prod] += c;
                }
            }
            row = reduce(std::move(row));
            if (row.empty()) {
                continue;
            }
            const Rational lead = row.rbegin()->second;
            for (auto &[m, c] : row) {
                c /= lead;
            }
            const Monomial key = row.rbegin()->first;
            pivots_.emplace(key, std::move(row));
        }
    }
}

Poly GradedEliminator::reduce(Poly p) const
{
    for (auto it = p.begin(); it != p.end();) {
        it->second == 0 ? it = p.erase(it) : ++it;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
            const auto piv = pivots_.find(it->first);
            if (piv == pivots_.end()) {
                continue;
            }
            const Rational f = it->second;
            for (const auto &[m, c] : piv->second) {
                auto &slot = p[m];
                slot -= f * c;
                if (slot == 0) {
                    p.erase(m);
                }
            }
            changed = true;
            break;
        }
    }
    return p;
}

std::size_t GradedEliminator::quotient_dimension() const
{
    return splicequot::monomials_up_to_degree(num_vars_, cap_).size() - pivots_.size();
}

bool GradedEliminator::in_ideal(const Poly &p) const
{
    Poly cut;
    for (const auto &[m, c] : p) {
        if (m.degree() <= cap_ && c != 0) {
            cut[m] = c;
        }
    }
    return reduce(std::move(cut)).empty();
}

std::vector<std::uint64_t> hilbert_samuel_by_elimination(std::size_t num_vars, const std::vector<Poly> &relations,
                                                         unsigned n)
{
    std::vector<std::uint64_t> out;
    std::size_t previous = 0;
    for (unsigned k = 0; k <= n; ++k) {
        const std::size_t dim = GradedEliminator(num_vars, relations, k).quotient_dimension();
        out.push_back(dim - previous);
        previous = dim;
    }
    return out;
}

ResolutionGraph random_negative_definite_tree(std::mt19937 &rng, std::size_t n, std::int64_t max_w)
{
    std::uniform_int_distribution<std::int64_t> weight(-max_w, -1);
    for (;;) {
        std::vector<splicequot::Vertex> vertices;
        std::vector<std::pair<std::string, std::string>> edges;
        for (std::size_t i = 0; i < n; ++i) {
            vertices.push_back({"v" + std::to_string(i), weight(rng)});
            if (i > 0) {
                std::uniform_int_distribution<std::size_t> parent(0, i - 1);
                edges.emplace_back("v" + std::to_string(parent(rng)), "v" + std::to_string(i));
            }
        }
        ResolutionGraph g(std::move(vertices), edges);
        auto m = intersection_form(g);
        bool definite = true;
        for (std::size_t k = 1; k <= n && definite; ++k) {
            Dense minor(k, std::vector<Rational>(k));
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    minor[i][j] = -m[i][j];
                }
            }
            definite = determinant(minor) > 0;
        }
        if (definite) {
            return g;
        }
    }
}

} // namespace oracle
