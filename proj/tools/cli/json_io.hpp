#ifndef SPLICEQUOT_CLI_JSON_IO_HPP
#define SPLICEQUOT_CLI_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include <splicequot/dimension_identity.hpp>
#include <splicequot/filtration.hpp>
#include <splicequot/graph.hpp>
#include <splicequot/series.hpp>
#include <splicequot/splice.hpp>

namespace splicequot::cli
{

using Json = nlohmann::json;

// {"vertices":[{"id":..,"weight":..}],"edges":[[a,b]],"arrows":{id:count}}.
// Throws InvalidInput on malformed documents.
ResolutionGraph graph_from_json(const Json &doc);
ResolutionGraph read_graph_file(const std::string &path);
Json graph_to_json(const ResolutionGraph &g);

// {vertex id: "p/q"} over every vertex.
Json cycle_to_json(const ResolutionGraph &g, const RationalCycle &c);
Json cycle_to_json(const ResolutionGraph &g, const IntegralCycle &c);

// {arrow id: exponent} over the nonzero exponents.
Json monomial_to_json(const ResolutionGraph &g, const Monomial &m);

// "v:p/q,w:p/q"; vertices left out get 0. Throws InvalidInput.
RationalCycle parse_level(const ResolutionGraph &g, const std::string &text);

Json certificate_to_json(const ResolutionGraph &g, const AdmissibleCertificate &cert);
Json equations_to_json(const ResolutionGraph &g, const SpliceEquationSystem &system);
Json identity_report_to_json(const ResolutionGraph &g, const IdentityReport &report);

} // namespace splicequot::cli

#endif
