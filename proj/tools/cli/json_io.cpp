#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include <splicequot/error.hpp>

namespace splicequot::cli
{

namespace
{

const Json &member(const Json &obj, const char *key)
{
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw InvalidInput(std::string("graph JSON lacks \"") + key + "\"");
    }
    return *it;
}

std::string status_name(IdentityStatus s)
{
    switch (s) {
    case IdentityStatus::Match:
        return "match";
    case IdentityStatus::Mismatch:
        return "mismatch";
    case IdentityStatus::Inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

} // namespace

ResolutionGraph graph_from_json(const Json &doc)
{
    try {
        if (!doc.is_object()) {
            throw InvalidInput("graph JSON must be an object");
        }
        std::vector<Vertex> vertices;
        for (const auto &v : member(doc, "vertices")) {
            if (!v.is_object() || !member(v, "id").is_string() || !member(v, "weight").is_number_integer()) {
                throw InvalidInput("each vertex needs a string \"id\" and an integer \"weight\"");
            }
            vertices.push_back({v.at("id").get<std::string>(), v.at("weight").get<std::int64_t>()});
        }
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto &e : member(doc, "edges")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
                throw InvalidInput("each edge must be a pair of vertex ids");
            }
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        std::map<std::string, std::size_t> arrows;
        if (const auto it = doc.find("arrows"); it != doc.end()) {
            if (!it->is_object()) {
                throw InvalidInput("\"arrows\" must map vertex ids to counts");
            }
            for (const auto &[id, count] : it->items()) {
                if (!count.is_number_integer() || count.get<std::int64_t>() < 0) {
                    throw InvalidInput("arrow count at '" + id + "' must be a non-negative integer");
                }
                arrows[id] = count.get<std::size_t>();
            }
        }
        return ResolutionGraph(std::move(vertices), edges, arrows);
    } catch (const Json::exception &e) {
        throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
    }
}

ResolutionGraph read_graph_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open graph file '" + path + "'");
    }
    Json doc;
    try {
        in >> doc;
    } catch (const Json::exception &e) {
        throw InvalidInput("graph file '" + path + "' is not valid JSON: " + e.what());
    }
    return graph_from_json(doc);
}

Json graph_to_json(const ResolutionGraph &g)
{
    Json vertices = Json::array();
    for (const auto &v : g.vertices()) {
        vertices.push_back({{"id", v.id}, {"weight", v.weight}});
    }
    Json edges = Json::array();
    for (const auto &[a, b] : g.edges()) {
        edges.push_back({g.id(a), g.id(b)});
    }
    Json arrows = Json::object();
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.arrow_count(v) > 0) {
            arrows[g.id(v)] = g.arrow_count(v);
        }
    }
    return {{"vertices", vertices}, {"edges", edges}, {"arrows", arrows}};
}

Json cycle_to_json(const ResolutionGraph &g, const RationalCycle &c)
{
    Json out = Json::object();
    for (std::size_t v = 0; v < g.size(); ++v) {
        out[g.id(v)] = to_string(c[v]);
    }
    return out;
}

Json cycle_to_json(const ResolutionGraph &g, const IntegralCycle &c)
{
    Json out = Json::object();
    for (std::size_t v = 0; v < g.size(); ++v) {
        out[g.id(v)] = to_int64(c[v]);
    }
    return out;
}

Json monomial_to_json(const ResolutionGraph &g, const Monomial &m)
{
    Json out = Json::object();
    for (std::size_t a = 0; a < m.size(); ++a) {
        if (m[a] != 0) {
            out[g.arrows()[a].to_string()] = m[a];
        }
    }
    return out;
}

RationalCycle parse_level(const ResolutionGraph &g, const std::string &text)
{
    RationalCycle c(g.size());
    if (text.empty()) {
        return c;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.rfind(':');
        if (colon == std::string::npos || colon == 0) {
            throw InvalidInput("level entry '" + item + "' is not of the form vertex:p/q");
        }
        const std::string id = item.substr(0, colon);
        if (!g.has_vertex(id)) {
            throw InvalidInput("level names unknown vertex '" + id + "'");
        }
        c[g.index_of(id)] = parse_rational(item.substr(colon + 1));
    }
    return c;
}

Json certificate_to_json(const ResolutionGraph &g, const AdmissibleCertificate &cert)
{
    const auto b = branches(g, cert.node).at(cert.branch);
    Json verts = Json::array();
    for (auto v : b.vertices) {
        verts.push_back(g.id(v));
    }
    Json arrows = Json::array();
    for (auto a : b.arrows) {
        arrows.push_back(g.arrows()[a].to_string());
    }
    Json internal = Json::object();
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (cert.internal[v] != 0) {
            internal[g.id(v)] = to_int64(cert.internal[v]);
        }
    }
    return {{"node", g.id(cert.node)},
            {"branch", cert.branch},
            {"branch_vertices", verts},
            {"branch_arrows", arrows},
            {"monomial", monomial_to_json(g, cert.monomial)},
            {"internal", internal}};
}

Json equations_to_json(const ResolutionGraph &g, const SpliceEquationSystem &system)
{
    Json out = Json::array();
    for (const auto &eq : system.equations()) {
        Json terms = Json::array();
        for (const auto &[m, c] : eq.polynomial) {
            terms.push_back({{"coeff", to_string(c)}, {"monomial", monomial_to_json(g, m)}});
        }
        out.push_back({{"node", g.id(eq.node)}, {"index", eq.index}, {"terms", terms}});
    }
    return out;
}

Json identity_report_to_json(const ResolutionGraph &g, const IdentityReport &report)
{
    Json entries = Json::array();
    for (const auto &e : report.entries) {
        Json k = Json::object();
        for (std::size_t v = 0; v < g.size(); ++v) {
            k[g.id(v)] = e.k[v];
        }
        entries.push_back({{"k", k},
                           {"lhs", to_int64(e.lhs)},
                           {"lhs_next_cap", to_int64(e.lhs_next)},
                           {"rhs", to_int64(e.rhs)},
                           {"stable", e.stable},
                           {"status", status_name(e.status)}});
    }
    return {{"k_cap", report.k_cap},
            {"degree_cap", report.degree_cap},
            {"entries", entries},
            {"summary",
             {{"match", report.count(IdentityStatus::Match)},
              {"mismatch", report.count(IdentityStatus::Mismatch)},
              {"inconclusive", report.count(IdentityStatus::Inconclusive)}}}};
}

} // namespace splicequot::cli
