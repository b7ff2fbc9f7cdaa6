#include <splicequot/graph.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include <splicequot/error.hpp>

namespace splicequot
{

std::string ArrowId::to_string() const
{
    return vertex + "#" + std::to_string(index);
}

ArrowId ArrowId::parse(const std::string &text)
{
    const auto hash = text.rfind('#');
    if (hash == std::string::npos || hash == 0 || hash + 1 == text.size()) {
        throw InvalidInput("malformed arrow id '" + text + "'");
    }
    const std::string idx = text.substr(hash + 1);
    if (!std::all_of(idx.begin(), idx.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw InvalidInput("malformed arrow id '" + text + "'");
    }
    return ArrowId{text.substr(0, hash), static_cast<std::size_t>(std::stoull(idx))};
}

ResolutionGraph::ResolutionGraph(std::vector<Vertex> vertices,
                                 const std::vector<std::pair<std::string, std::string>> &edges,
                                 const std::map<std::string, std::size_t> &arrows)
    : vertices_(std::move(vertices))
{
    if (vertices_.empty()) {
        throw InvalidInput("a resolution graph needs at least one vertex");
    }
    std::sort(vertices_.begin(), vertices_.end(), [](const Vertex &a, const Vertex &b) { return a.id < b.id; });
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto &v = vertices_[i];
        if (v.id.empty()) {
            throw InvalidInput("empty vertex id");
        }
        if (v.weight >= 0) {
            throw InvalidInput("vertex '" + v.id + "' has non-negative weight " + std::to_string(v.weight));
        }
        if (!index_.emplace(v.id, i).second) {
            throw InvalidInput("duplicate vertex id '" + v.id + "'");
        }
    }
    const std::size_t n = vertices_.size();
    adjacency_.assign(n, {});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto &[a, b] : edges) {
        const auto ia = index_of(a);
        const auto ib = index_of(b);
        if (ia == ib) {
            throw InvalidInput("self-loop at '" + a + "'");
        }
        const auto key = std::minmax(ia, ib);
        if (!seen.insert(key).second) {
            throw InvalidInput("duplicate edge '" + a + "'-'" + b + "'");
        }
        adjacency_[ia].push_back(ib);
        adjacency_[ib].push_back(ia);
    }
    if (seen.size() + 1 != n) {
        throw InvalidInput("edge set is not a tree: " + std::to_string(seen.size()) + " edges on " + std::to_string(n) +
                           " vertices");
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto &adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
    }
    // |E| = |V| - 1, so connectivity is what remains to check.
    std::vector<bool> reached(n, false);
    std::deque<std::size_t> queue{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto w : adjacency_[u]) {
            if (!reached[w]) {
                reached[w] = true;
                ++count;
                queue.push_back(w);
            }
        }
    }
    if (count != n) {
        throw InvalidInput("edge set is not a tree: graph is disconnected");
    }

    arrow_counts_.assign(n, 0);
    for (const auto &[id, count_at] : arrows) {
        arrow_counts_[index_of(id)] = count_at;
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < arrow_counts_[v]; ++k) {
            arrows_.push_back(ArrowId{vertices_[v].id, k});
            arrow_vertex_.push_back(v);
        }
    }
}

std::size_t ResolutionGraph::index_of(const std::string &id) const
{
    const auto it = index_.find(id);
    if (it == index_.end()) {
        throw InvalidInput("unknown vertex id '" + id + "'");
    }
    return it->second;
}

bool ResolutionGraph::has_vertex(const std::string &id) const
{
    return index_.count(id) != 0;
}

std::size_t ResolutionGraph::arrow_index_of(const ArrowId &a) const
{
    const auto it = std::lower_bound(arrows_.begin(), arrows_.end(), a);
    if (it == arrows_.end() || *it != a) {
        throw InvalidInput("unknown arrow '" + a.to_string() + "'");
    }
    return static_cast<std::size_t>(it - arrows_.begin());
}

RationalCycle to_rational(const IntegralCycle &c)
{
    RationalCycle out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i] = Rational(c[i]);
    }
    return out;
}

IntegralCycle to_integral(const RationalCycle &c)
{
    IntegralCycle out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!is_integer(c[i])) {
            throw InvalidInput("cycle coefficient " + to_string(c[i]) + " is not integral");
        }
        out[i] = c[i].get_num();
    }
    return out;
}

bool DecoratedDivisor::is_effective() const
{
    for (std::size_t i = 0; i < exceptional.size(); ++i) {
        if (exceptional[i] < 0) {
            return false;
        }
    }
    return std::all_of(arrows.begin(), arrows.end(), [](const auto &kv) { return kv.second >= 0; });
}

IntMatrix intersection_matrix(const ResolutionGraph &g)
{
    const std::size_t n = g.size();
    IntMatrix m(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        m(v, v) = static_cast<long>(g.weight(v));
    }
    for (const auto &[a, b] : g.edges()) {
        m(a, b) = 1;
        m(b, a) = 1;
    }
    return m;
}

bool is_negative_definite(const ResolutionGraph &g)
{
    const auto minors = leading_principal_minors(negated(intersection_matrix(g)));
    return std::all_of(minors.begin(), minors.end(), [](const Integer &d) { return d > 0; });
}

std::vector<Branch> components_without(const ResolutionGraph &g, std::size_t v)
{
    if (v >= g.size()) {
        throw InvalidInput("vertex index out of range");
    }
    std::vector<Branch> out;
    std::vector<bool> seen(g.size(), false);
    seen[v] = true;
    for (auto start : g.neighbors(v)) {
        if (seen[start]) {
            continue;
        }
        Branch b;
        std::deque<std::size_t> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            b.vertices.push_back(u);
            for (auto w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        for (std::size_t a = 0; a < g.arrows().size(); ++a) {
            if (std::binary_search(b.vertices.begin(), b.vertices.end(), g.arrow_vertex(a))) {
                b.arrows.push_back(a);
            }
        }
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const Branch &x, const Branch &y) { return x.vertices.front() < y.vertices.front(); });
    return out;
}

Integer branch_determinant(const ResolutionGraph &g, const Branch &branch)
{
    const auto minus_m = negated(intersection_matrix(g));
    return determinant(minus_m.submatrix(branch.vertices, branch.vertices));
}

Lattice::Lattice(ResolutionGraph g) : graph_(std::move(g)), m_(splicequot::intersection_matrix(graph_))
{
    const auto minors = leading_principal_minors(negated(m_));
    for (std::size_t k = 0; k < minors.size(); ++k) {
        if (minors[k] <= 0) {
            throw InvalidInput("intersection form is not negative definite (leading minor " + std::to_string(k + 1) +
                               " of -M is " + minors[k].get_str() + ")");
        }
    }
    det_ = minors.back();
    auto inv = inverse(m_);
    if (!inv) {
        throw InternalError("negative definite intersection matrix reported singular");
    }
    inverse_ = std::move(*inv);
    const std::size_t n = graph_.size();
    duals_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        RationalCycle d(n);
        for (std::size_t w = 0; w < n; ++w) {
            d[w] = -inverse_(w, v);
        }
        duals_.push_back(std::move(d));
    }
}

RationalCycle Lattice::curve(std::size_t v) const
{
    RationalCycle c(size());
    c[v] = 1;
    return c;
}

void Lattice::check_cycle(const RationalCycle &c) const
{
    if (c.size() != size()) {
        throw InvalidInput("cycle has " + std::to_string(c.size()) + " coefficients, graph has " +
                           std::to_string(size()) + " vertices");
    }
}

Rational Lattice::pairing_with_curve(const RationalCycle &a, std::size_t v) const
{
    check_cycle(a);
    Rational s = a[v] * Rational(m_(v, v));
    for (auto w : graph_.neighbors(v)) {
        s += a[w];
    }
    return s;
}

Integer Lattice::pairing_with_curve(const IntegralCycle &a, std::size_t v) const
{
    if (a.size() != size()) {
        throw InvalidInput("cycle over a different vertex set");
    }
    Integer s = a[v] * m_(v, v);
    for (auto w : graph_.neighbors(v)) {
        s += a[w];
    }
    return s;
}

Rational Lattice::pairing(const RationalCycle &a, const RationalCycle &b) const
{
    check_cycle(a);
    check_cycle(b);
    Rational s = 0;
    for (std::size_t v = 0; v < size(); ++v) {
        if (a[v] != 0) {
            s += a[v] * pairing_with_curve(b, v);
        }
    }
    return s;
}

bool Lattice::in_dual_lattice(const RationalCycle &c) const
{
    check_cycle(c);
    for (std::size_t v = 0; v < size(); ++v) {
        if (!is_integer(pairing_with_curve(c, v))) {
            return false;
        }
    }
    return true;
}

DiscriminantClass Lattice::reduce_to_q(const RationalCycle &c) const
{
    if (!in_dual_lattice(c)) {
        throw InvalidInput("cycle is not in the dual lattice L'");
    }
    RationalCycle r(size());
    for (std::size_t v = 0; v < size(); ++v) {
        r[v] = frac(c[v]);
    }
    return DiscriminantClass{std::move(r)};
}

Rational Lattice::theta_exponent(const DiscriminantClass &h, const RationalCycle &l) const
{
    return frac(-pairing(h.representative, l));
}

Integer divisor_pairing(const ResolutionGraph &g, const DecoratedDivisor &d, std::size_t v)
{
    Integer s = d.exceptional[v] * static_cast<long>(g.weight(v));
    for (auto w : g.neighbors(v)) {
        s += d.exceptional[w];
    }
    for (const auto &[arrow, coeff] : d.arrows) {
        if (arrow.vertex == g.id(v)) {
            s += coeff;
        }
    }
    return s;
}

DecoratedDivisor extend_divisor(const Lattice &lattice, std::span<const std::size_t> sub, const DecoratedDivisor &d,
                                const RationalCycle &target)
{
    const auto &g = lattice.graph();
    const std::size_t n = g.size();
    if (sub.empty()) {
        throw InvalidInput("extension needs a non-empty subtree");
    }
    std::vector<bool> in_sub(n, false);
    for (auto v : sub) {
        if (v >= n || in_sub[v]) {
            throw InvalidInput("subtree vertex list has an invalid or repeated index");
        }
        in_sub[v] = true;
    }
    {
        std::vector<bool> reached(n, false);
        std::deque<std::size_t> queue{sub.front()};
        reached[sub.front()] = true;
        std::size_t count = 1;
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto w : g.neighbors(u)) {
                if (in_sub[w] && !reached[w]) {
                    reached[w] = true;
                    ++count;
                    queue.push_back(w);
                }
            }
        }
        if (count != sub.size()) {
            throw InvalidInput("vertex subset does not span a subtree");
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (g.degree(v) + g.arrow_count(v) < 2) {
            throw InvalidInput("vertex '" + g.id(v) + "' meets fewer than two curves");
        }
    }
    if (d.exceptional.size() != n) {
        throw InvalidInput("divisor over a different vertex set");
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (in_sub[v] || d.exceptional[v] == 0) {
            continue;
        }
        const auto &adj = g.neighbors(v);
        if (std::none_of(adj.begin(), adj.end(), [&](std::size_t w) { return in_sub[w]; })) {
            throw InvalidInput("divisor has support on '" + g.id(v) + "', away from the subtree");
        }
    }
    for (const auto &[arrow, coeff] : d.arrows) {
        g.arrow_index_of(arrow);
        if (coeff != 0 && !in_sub[g.index_of(arrow.vertex)]) {
            throw InvalidInput("divisor has an arrow coefficient outside the subtree");
        }
    }
    if (!lattice.in_dual_lattice(target)) {
        throw InvalidInput("target class is not in L'");
    }
    for (auto v : sub) {
        if (Rational(divisor_pairing(g, d, v)) != lattice.pairing_with_curve(target, v)) {
            throw InvalidInput("divisor does not represent the target on '" + g.id(v) + "'");
        }
    }

    DecoratedDivisor out;
    out.exceptional = d.exceptional;
    for (const auto &[arrow, coeff] : d.arrows) {
        if (coeff != 0) {
            out.arrows.emplace(arrow, coeff);
        }
    }
    std::vector<bool> visited = in_sub;
    std::deque<std::size_t> queue;
    {
        std::vector<std::size_t> sorted(sub.begin(), sub.end());
        std::sort(sorted.begin(), sorted.end());
        queue.assign(sorted.begin(), sorted.end());
    }
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(u)) {
            if (visited[w]) {
                continue;
            }
            visited[w] = true;
            queue.push_back(w);
            const Rational wanted = lattice.pairing_with_curve(target, w);
            const Integer residual = wanted.get_num() - divisor_pairing(g, out, w);
            if (residual == 0) {
                continue;
            }
            if (g.arrow_count(w) > 0) {
                out.arrows[ArrowId{g.id(w), 0}] += residual;
                continue;
            }
            const auto &adj = g.neighbors(w);
            const auto free_it = std::find_if(adj.begin(), adj.end(), [&](std::size_t x) { return !visited[x]; });
            if (free_it == adj.end()) {
                throw Infeasible("no free coefficient at '" + g.id(w) + "'");
            }
            out.exceptional[*free_it] += residual;
        }
    }
    for (auto it = out.arrows.begin(); it != out.arrows.end();) {
        it = it->second == 0 ? out.arrows.erase(it) : std::next(it);
    }
    return out;
}

ResolutionGraph star_graph(std::int64_t central_weight, const std::vector<std::vector<std::int64_t>> &legs,
                           bool leg_end_arrows)
{
    std::vector<Vertex> vertices{{"c", central_weight}};
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, std::size_t> arrows;
    for (std::size_t j = 0; j < legs.size(); ++j) {
        if (legs[j].empty()) {
            throw InvalidInput("empty leg in star graph");
        }
        std::string prev = "c";
        for (std::size_t k = 0; k < legs[j].size(); ++k) {
            std::string id = "b" + std::to_string(j) + "_" + std::to_string(k);
            vertices.push_back({id, legs[j][k]});
            edges.emplace_back(prev, id);
            prev = std::move(id);
        }
        if (leg_end_arrows) {
            arrows[prev] = 1;
        }
    }
    return ResolutionGraph(std::move(vertices), edges, arrows);
}

std::vector<std::int64_t> negative_continued_fraction(std::int64_t a, std::int64_t omega)
{
    if (a < 1 || omega < 1 || omega > a || std::gcd(a, omega) != 1) {
        throw InvalidInput("continued fraction needs coprime 0 < omega <= a");
    }
    std::vector<std::int64_t> out;
    std::int64_t p = a;
    std::int64_t q = omega;
    while (q > 0) {
        const std::int64_t b = (p + q - 1) / q;
        out.push_back(b);
        const std::int64_t next = b * q - p;
        p = q;
        q = next;
    }
    return out;
}

ResolutionGraph find_det1_star(const std::array<std::int64_t, 4> &a, const Det1StarSearch &search)
{
    for (auto x : a) {
        if (x < 2) {
            throw InvalidInput("branch determinants must be at least 2");
        }
    }
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (std::gcd(a[i], a[j]) != 1) {
                throw InvalidInput("branch determinants " + std::to_string(a[i]) + " and " + std::to_string(a[j]) +
                                   " are not coprime");
            }
        }
    }
    Integer total = 1;
    std::array<Integer, 4> cofactor;
    for (std::size_t j = 0; j < 4; ++j) {
        total *= static_cast<long>(a[j]);
    }
    for (std::size_t j = 0; j < 4; ++j) {
        cofactor[j] = total / static_cast<long>(a[j]);
    }
    // det(-M) = e0 * prod(a) - sum_j omega_j * prod_{i != j} a_i. Reducing mod
    // a_j shows only omega_j with omega_j * cofactor_j = -1 (mod a_j) can work,
    // so each leg's scan keeps just those candidates.
    std::array<std::vector<std::int64_t>, 4> candidates;
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::int64_t w = 1; w < a[j]; ++w) {
            if (std::gcd(w, a[j]) != 1) {
                continue;
            }
            Integer r = cofactor[j] * static_cast<long>(w) + 1;
            if (mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(a[j])) != 0) {
                candidates[j].push_back(w);
            }
        }
    }
    for (std::int64_t e0 = 1; e0 <= search.max_central; ++e0) {
        for (auto w0 : candidates[0]) {
            for (auto w1 : candidates[1]) {
                for (auto w2 : candidates[2]) {
                    for (auto w3 : candidates[3]) {
                        const std::array<std::int64_t, 4> w{w0, w1, w2, w3};
                        Integer det = total * static_cast<long>(e0);
                        for (std::size_t j = 0; j < 4; ++j) {
                            det -= cofactor[j] * static_cast<long>(w[j]);
                        }
                        if (det != 1) {
                            continue;
                        }
                        std::vector<std::vector<std::int64_t>> legs;
                        for (std::size_t j = 0; j < 4; ++j) {
                            auto cf = negative_continued_fraction(a[j], w[j]);
                            for (auto &b : cf) {
                                b = -b;
                            }
                            legs.push_back(std::move(cf));
                        }
                        auto g = star_graph(-e0, legs, true);
                        if (Lattice(g).discriminant_order() != 1) {
                            throw InternalError("det-1 star construction produced a different determinant");
                        }
                        return g;
                    }
                }
            }
        }
    }
    throw NotFound("no determinant-1 star with central weight up to -" + std::to_string(search.max_central));
}

} // namespace splicequot
