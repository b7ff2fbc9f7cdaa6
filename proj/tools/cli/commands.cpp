#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <splicequot/error.hpp>

#include "json_io.hpp"

namespace splicequot::cli
{

namespace
{

Json check_report(const ResolutionGraph &g)
{
    Json out;
    const Integer det = determinant(negated(intersection_matrix(g)));
    out["determinant"] = to_int64(det);
    const bool nd = is_negative_definite(g);
    out["negative_definite"] = nd;
    const auto ecc = end_curve_condition(g);
    out["end_curve_condition"] = ecc.holds;
    Json violations = Json::array();
    for (auto v : ecc.violations) {
        violations.push_back(g.id(v));
    }
    out["violations"] = violations;
    Json certs = Json::array();
    Json failures = Json::array();
    if (nd) {
        const Lattice lattice(g);
        const auto mc = monomial_condition(lattice);
        out["monomial_condition"] = mc.holds;
        for (const auto &[key, cert] : mc.certificates) {
            certs.push_back(certificate_to_json(g, cert));
        }
        for (const auto &[node, branch] : mc.failures) {
            failures.push_back({{"node", g.id(node)}, {"branch", branch}});
        }
    } else {
        out["monomial_condition"] = nullptr;
    }
    out["certificates"] = certs;
    out["failures"] = failures;
    return out;
}

Json dual_report(const ResolutionGraph &g)
{
    const Lattice lattice(g);
    Json duals = Json::object();
    Json pairings = Json::object();
    for (std::size_t v = 0; v < g.size(); ++v) {
        duals[g.id(v)] = cycle_to_json(g, lattice.dual_cycle(v));
        Json row = Json::object();
        for (std::size_t w = 0; w < g.size(); ++w) {
            row[g.id(w)] = to_string(lattice.dual_pairing(v, w));
        }
        pairings[g.id(v)] = row;
    }
    return {{"determinant", to_int64(lattice.discriminant_order())}, {"duals", duals}, {"dual_pairings", pairings}};
}

// Lattice plus splice system, or InvalidInput naming the failed condition.
std::pair<Lattice, SpliceEquationSystem> splice_setup(const ResolutionGraph &g)
{
    Lattice lattice(g);
    const auto mc = monomial_condition(lattice);
    if (!mc.holds) {
        const auto [node, branch] = mc.failures.front();
        throw InvalidInput("the Monomial Condition fails at node '" + g.id(node) + "' branch " +
                           std::to_string(branch));
    }
    auto system = generate_splice_equations(lattice, mc);
    return {std::move(lattice), std::move(system)};
}

Json filtration_report(const ResolutionGraph &g, const std::string &level_text,
                       const std::optional<std::string> &upper_text, unsigned cap)
{
    const Lattice lattice(g);
    const FiltrationLevel level(lattice, parse_level(g, level_text));
    auto describe = [&](const std::vector<Monomial> &ms) {
        Json list = Json::array();
        for (const auto &m : ms) {
            const auto data = eigenspace_data(lattice, m, level);
            list.push_back({{"monomial", monomial_to_json(g, m)},
                            {"degree", m.degree()},
                            {"character", cycle_to_json(g, data.character.representative)},
                            {"offset", cycle_to_json(g, data.offset)}});
        }
        return list;
    };
    Json out;
    out["level"] = cycle_to_json(g, level.cycle());
    out["cap"] = cap;
    out["monomials"] = describe(monomials_in_level(lattice, level, cap));
    if (upper_text) {
        const FiltrationLevel upper(lattice, parse_level(g, *upper_text));
        out["upper"] = cycle_to_json(g, upper.cycle());
        out["factor"] = describe(monomials_in_factor(lattice, level, upper, cap));
    }
    return out;
}

HSParams parse_params(const std::string &text, bool need_i)
{
    std::vector<std::int64_t> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::logic_error &) {
            throw InvalidInput("parameter '" + item + "' is not an integer");
        }
    }
    if (values.size() != 4 && values.size() != 5) {
        throw InvalidInput("--params takes a1,a2,b,c or a1,a2,b,c,i");
    }
    if (need_i && values.size() != 5) {
        throw InvalidInput("preset eq7 needs a1,a2,b,c,i");
    }
    HSParams p;
    p.a1 = values[0];
    p.a2 = values[1];
    p.b = values[2];
    p.c = values[3];
    p.i = values.size() == 5 ? values[4] : 0;
    return p;
}

Json sequence(const std::vector<std::uint64_t> &s)
{
    return Json(s);
}

Json hilbert_report(const std::string &preset, const std::string &params_text, unsigned n, const std::string &gamma)
{
    const bool perturbed = preset == "eq7";
    HSParams p = parse_params(params_text, perturbed);
    p.gamma = parse_rational(gamma);
    const bool has_i = std::count(params_text.begin(), params_text.end(), ',') == 4;

    const auto violations = perturbed ? check_hs_constraints(p) : check_brieskorn_constraints(p);
    if (!violations.empty()) {
        std::string msg = "parameter constraints violated:";
        for (const auto &v : violations) {
            msg += "\n  " + v.constraint + " (" + v.detail + ")";
        }
        throw InvalidInput(msg);
    }

    auto engine_of = [&](bool use_perturbed) {
        // The jump is measured on truncated replacements, so raise the cap
        // until it covers n plus the jump seen at that cap.
        unsigned cap = n;
        for (;;) {
            auto model = use_perturbed ? perturbed_pair_model(p, cap) : brieskorn_pair_model(p, cap);
            const unsigned need = n + model.degree_jump();
            if (need <= cap) {
                return hilbert_samuel(model, n);
            }
            cap = need;
        }
    };

    Json params = {{"a1", p.a1}, {"a2", p.a2}, {"b", p.b}, {"c", p.c}, {"gamma", to_string(p.gamma)}};
    params["i"] = has_i ? Json(p.i) : Json(nullptr);

    Json out;
    out["preset"] = preset;
    out["params"] = params;
    out["N"] = n;
    const auto engine = engine_of(perturbed);
    out["engine"] = sequence(engine);
    out["closed_form"] = sequence(perturbed ? hilbert_series_perturbed_pair(p, n)
                                            : hilbert_series_brieskorn_pair(p.a1, p.a2, n));

    // Compare against the other preset when the same parameters allow it.
    Json diff = nullptr;
    if (has_i && check_hs_constraints(p).empty()) {
        const auto other = engine_of(!perturbed);
        if (const auto k = first_difference(engine, other)) {
            diff = *k;
        }
    }
    out["first_difference"] = diff;
    return out;
}

void emit(const Json &doc, const std::string &out_path, std::ostream &out)
{
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) {
        throw InvalidInput("cannot write '" + out_path + "'");
    }
    file << text;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact lattice, splice-equation and Hilbert series computations for resolution graphs"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "Write the JSON report to this file");

    std::string graph_path;
    auto *check = app.add_subcommand("check", "Negative definiteness, End Curve and Monomial Conditions");
    check->add_option("graph", graph_path, "Graph JSON file")->required();

    auto *dual = app.add_subcommand("dual", "Dual cycles E_v^* and their pairings");
    dual->add_option("graph", graph_path, "Graph JSON file")->required();

    auto *equations = app.add_subcommand("equations", "Splice diagram equations");
    equations->add_option("graph", graph_path, "Graph JSON file")->required();

    std::string level_text;
    std::string upper_text;
    unsigned cap = 0;
    auto *filtration = app.add_subcommand("filtration", "Monomials in a filtration level or factor");
    filtration->add_option("graph", graph_path, "Graph JSON file")->required();
    filtration->add_option("--level", level_text, "Level as vertex:p/q,...; omitted vertices are 0");
    auto *upper_opt = filtration->add_option("--upper", upper_text, "Upper level for a factor");
    filtration->add_option("--cap", cap, "Total degree cap")->required();

    std::string preset;
    std::string params_text;
    std::string gamma = "2";
    unsigned n = 0;
    auto *hilbert = app.add_subcommand("hilbert", "Hilbert-Samuel coefficients of the two-equation models");
    hilbert->add_option("--preset", preset, "eq5 (Brieskorn pair) or eq7 (perturbed pair)")
        ->required()
        ->check(CLI::IsMember({"eq5", "eq7"}));
    auto *params_opt = hilbert->add_option("--params", params_text, "a1,a2,b,c[,i]");
    hilbert->add_option("--cap", n, "Highest degree N")->required();
    hilbert->add_option("--gamma", gamma, "Rational gamma, not 0 or 1");

    unsigned k_cap = 3;
    unsigned degree_cap = 20;
    unsigned jobs = 1;
    auto *verify = app.add_subcommand("verify-eq4", "Check the dimension generating-series identity");
    verify->add_option("graph", graph_path, "Graph JSON file")->required();
    verify->add_option("--k-cap", k_cap, "Largest total multi-index");
    verify->add_option("--cap", degree_cap, "Monomial degree cap");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        Json doc;
        if (check->parsed()) {
            doc = check_report(read_graph_file(graph_path));
        } else if (dual->parsed()) {
            doc = dual_report(read_graph_file(graph_path));
        } else if (equations->parsed()) {
            const auto g = read_graph_file(graph_path);
            const auto [lattice, system] = splice_setup(g);
            doc = equations_to_json(g, system);
        } else if (filtration->parsed()) {
            std::optional<std::string> upper;
            if (upper_opt->count() > 0) {
                upper = upper_text;
            }
            doc = filtration_report(read_graph_file(graph_path), level_text, upper, cap);
        } else if (hilbert->parsed()) {
            if (params_opt->count() == 0) {
                params_text = preset == "eq7" ? "3,5,7,8,2" : "3,5,7,8";
            }
            doc = hilbert_report(preset, params_text, n, gamma);
        } else if (verify->parsed()) {
            const auto g = read_graph_file(graph_path);
            const auto [lattice, system] = splice_setup(g);
            const auto report = verify_dimension_identity(lattice, system, {k_cap, degree_cap, jobs});
            doc = identity_report_to_json(g, report);
        }
        emit(doc, out_path, out);
        return kOk;
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Infeasible &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error &e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

} // namespace splicequot::cli
