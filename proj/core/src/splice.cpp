#include <splicequot/splice.hpp>

#include <algorithm>
#include <functional>

#include <splicequot/error.hpp>

namespace splicequot
{

namespace
{

void check_monomial(const Lattice &lattice, const Monomial &m)
{
    if (m.size() != lattice.graph().arrows().size()) {
        throw InvalidInput("monomial has " + std::to_string(m.size()) + " exponents, graph has " +
                           std::to_string(lattice.graph().arrows().size()) + " arrows");
    }
}

} // namespace

std::vector<Branch> branches(const ResolutionGraph &g, std::size_t v)
{
    auto out = components_without(g, v);
    for (std::size_t a = 0; a < g.arrows().size(); ++a) {
        if (g.arrow_vertex(a) == v) {
            out.push_back(Branch{{}, {a}});
        }
    }
    return out;
}

EndCurveReport end_curve_condition(const ResolutionGraph &g)
{
    EndCurveReport report;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.degree(v) + g.arrow_count(v) < 2) {
            report.holds = false;
            report.violations.push_back(v);
        }
    }
    return report;
}

RationalCycle monomial_cycle(const Lattice &lattice, const Monomial &m)
{
    check_monomial(lattice, m);
    RationalCycle out = lattice.zero();
    for (std::size_t a = 0; a < m.size(); ++a) {
        if (m[a] != 0) {
            out += Rational(m[a]) * lattice.dual_cycle(lattice.graph().arrow_vertex(a));
        }
    }
    return out;
}

Rational v_degree(const Lattice &lattice, std::size_t v, const Monomial &m)
{
    check_monomial(lattice, m);
    if (v >= lattice.size()) {
        throw InvalidInput("vertex index out of range");
    }
    Rational s = 0;
    for (std::size_t a = 0; a < m.size(); ++a) {
        if (m[a] != 0) {
            s -= Rational(m[a]) * lattice.dual_pairing(v, lattice.graph().arrow_vertex(a));
        }
    }
    return s;
}

DiscriminantClass character_of_monomial(const Lattice &lattice, const Monomial &m)
{
    return lattice.reduce_to_q(monomial_cycle(lattice, m));
}

std::vector<AdmissibleCertificate> admissible_monomials(const Lattice &lattice, std::size_t v, std::size_t branch)
{
    const auto &g = lattice.graph();
    const auto bs = branches(g, v);
    if (branch >= bs.size()) {
        throw InvalidInput("branch index out of range");
    }
    const Branch &b = bs[branch];
    const Rational target = -lattice.dual_pairing(v, v);
    const std::size_t num_arrows = g.arrows().size();

    std::vector<Rational> unit(b.arrows.size());
    for (std::size_t j = 0; j < b.arrows.size(); ++j) {
        unit[j] = -lattice.dual_pairing(v, g.arrow_vertex(b.arrows[j]));
    }
    std::vector<bool> on_branch(g.size(), false);
    for (auto u : b.vertices) {
        on_branch[u] = true;
    }

    std::vector<AdmissibleCertificate> out;
    Monomial m(num_arrows);
    // Each unit weight is positive, so the fixed v-degree bounds every exponent.
    std::function<void(std::size_t, const Rational &)> search = [&](std::size_t j, const Rational &left) {
        if (j == b.arrows.size()) {
            if (left != 0) {
                return;
            }
            RationalCycle rest = monomial_cycle(lattice, m) - lattice.dual_cycle(v);
            for (std::size_t u = 0; u < g.size(); ++u) {
                if (!is_integer(rest[u]) || rest[u] < 0 || (!on_branch[u] && rest[u] != 0)) {
                    return;
                }
            }
            out.push_back(AdmissibleCertificate{v, branch, m, to_integral(rest)});
            return;
        }
        const Integer cap = floor(left / unit[j]);
        const auto max_exp = static_cast<Monomial::exponent_type>(to_int64(cap));
        for (Monomial::exponent_type e = 0; e <= max_exp; ++e) {
            m[b.arrows[j]] = e;
            search(j + 1, left - Rational(e) * unit[j]);
        }
        m[b.arrows[j]] = 0;
    };
    search(0, target);
    return out;
}

std::vector<std::size_t> nodes(const ResolutionGraph &g)
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.degree(v) + g.arrow_count(v) >= 3) {
            out.push_back(v);
        }
    }
    return out;
}

MonomialConditionReport monomial_condition(const Lattice &lattice)
{
    MonomialConditionReport report;
    for (auto v : nodes(lattice.graph())) {
        const auto count = branches(lattice.graph(), v).size();
        for (std::size_t b = 0; b < count; ++b) {
            auto certs = admissible_monomials(lattice, v, b);
            if (certs.empty()) {
                report.holds = false;
                report.failures.emplace_back(v, b);
            } else {
                report.certificates.emplace(std::make_pair(v, b), std::move(certs.front()));
            }
        }
    }
    return report;
}

bool maximal_minors_nonzero(const RatMatrix &a)
{
    const std::size_t r = a.rows();
    const std::size_t c = a.cols();
    if (r > c) {
        throw InvalidInput("coefficient matrix has more rows than columns");
    }
    std::vector<std::size_t> rows(r);
    for (std::size_t i = 0; i < r; ++i) {
        rows[i] = i;
    }
    std::vector<bool> pick(c, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < c; ++j) {
            if (pick[j]) {
                cols.push_back(j);
            }
        }
        if (determinant(a.submatrix(rows, cols)) == 0) {
            return false;
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return true;
}

std::vector<SpliceEquation> SpliceEquationSystem::equations() const
{
    std::vector<SpliceEquation> out;
    for (const auto &ne : nodes) {
        for (std::size_t i = 0; i < ne.coefficients.rows(); ++i) {
            SpliceEquation eq{ne.node, i + 1, ne.higher.at(i)};
            for (std::size_t col = 0; col < ne.monomials.size(); ++col) {
                const Rational &coeff = ne.coefficients(i, col);
                if (coeff == 0) {
                    continue;
                }
                auto &slot = eq.polynomial[ne.monomials[col].monomial];
                slot += coeff;
                if (slot == 0) {
                    eq.polynomial.erase(ne.monomials[col].monomial);
                }
            }
            out.push_back(std::move(eq));
        }
    }
    return out;
}

SpliceEquationSystem generate_splice_equations(const Lattice &lattice, const MonomialConditionReport &mc,
                                               const SpliceOptions &options)
{
    if (!mc.holds) {
        throw InvalidInput("the Monomial Condition fails; no splice equations exist");
    }
    const auto &g = lattice.graph();
    const auto node_list = nodes(g);
    for (const auto &h : options.higher_terms) {
        if (!std::binary_search(node_list.begin(), node_list.end(), h.node)) {
            throw InvalidInput("higher term attached to a vertex with fewer than three branches");
        }
    }
    for (const auto &[node, matrix] : options.coefficients) {
        if (!std::binary_search(node_list.begin(), node_list.end(), node)) {
            throw InvalidInput("coefficients given for a vertex with fewer than three branches");
        }
    }

    SpliceEquationSystem system;
    for (auto v : node_list) {
        const std::size_t delta = branches(g, v).size();
        NodeEquations ne;
        ne.node = v;
        for (std::size_t b = 0; b < delta; ++b) {
            const auto it = mc.certificates.find({v, b});
            if (it == mc.certificates.end()) {
                throw InvalidInput("missing certificate for node '" + g.id(v) + "' branch " + std::to_string(b));
            }
            ne.monomials.push_back(it->second);
        }

        if (options.scheme == CoefficientScheme::Vandermonde) {
            ne.coefficients = RatMatrix(delta - 2, delta);
            for (std::size_t i = 0; i + 2 < delta; ++i) {
                for (std::size_t col = 0; col < delta; ++col) {
                    Integer p;
                    mpz_ui_pow_ui(p.get_mpz_t(), col + 1, i);
                    ne.coefficients(i, col) = Rational(p);
                }
            }
        } else {
            const auto it = options.coefficients.find(v);
            if (it == options.coefficients.end()) {
                throw InvalidInput("no coefficient matrix for node '" + g.id(v) + "'");
            }
            ne.coefficients = it->second;
            if (ne.coefficients.rows() != delta - 2 || ne.coefficients.cols() != delta) {
                throw InvalidInput("coefficient matrix for node '" + g.id(v) + "' must be " +
                                   std::to_string(delta - 2) + "x" + std::to_string(delta));
            }
        }
        if (!maximal_minors_nonzero(ne.coefficients)) {
            throw InvalidInput("coefficient matrix for node '" + g.id(v) + "' has a vanishing maximal minor");
        }

        const DiscriminantClass want = lattice.reduce_to_q(lattice.dual_cycle(v));
        const Rational degree = -lattice.dual_pairing(v, v);
        for (const auto &cert : ne.monomials) {
            if (character_of_monomial(lattice, cert.monomial) != want || v_degree(lattice, v, cert.monomial) != degree) {
                throw InternalError("admissible monomial at '" + g.id(v) + "' has the wrong character or degree");
            }
        }

        ne.higher.assign(delta - 2, Polynomial{});
        for (const auto &h : options.higher_terms) {
            if (h.node != v) {
                continue;
            }
            if (h.index < 1 || h.index > delta - 2) {
                throw InvalidInput("higher term index " + std::to_string(h.index) + " out of range at '" + g.id(v) +
                                   "'");
            }
            auto &poly = ne.higher[h.index - 1];
            for (const auto &[mono, coeff] : h.terms) {
                if (coeff == 0) {
                    continue;
                }
                if (character_of_monomial(lattice, mono) != want) {
                    throw InvalidInput("higher term at '" + g.id(v) + "' is not in the eigenspace of E_v^*");
                }
                if (v_degree(lattice, v, mono) <= degree) {
                    throw InvalidInput("higher term at '" + g.id(v) + "' has v-degree " +
                                       to_string(v_degree(lattice, v, mono)) + ", needs more than " +
                                       to_string(degree));
                }
                auto &slot = poly[mono];
                slot += coeff;
                if (slot == 0) {
                    poly.erase(mono);
                }
            }
        }
        system.nodes.push_back(std::move(ne));
    }
    return system;
}

} // namespace splicequot
