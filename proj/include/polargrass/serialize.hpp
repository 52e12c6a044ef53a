#pragma once

#include <string>

#include <json.hpp>

#include "polargrass/analysis.hpp"
#include "polargrass/classify.hpp"
#include "polargrass/geometry.hpp"

namespace polargrass {

using Json = nlohmann::ordered_json;

Json to_json(const Field& F);
// {"dim": d, "basis": [[code, ...], ...]}; a coefficient is its code a + b*p.
Json to_json(const Subspace& S);
Subspace subspace_from_json(const Field& F, int ambient, const Json& j);
Json to_json(const Form& f);
Json to_json(const GeometryTags& t);
Json to_json(const Geometry& G);
Geometry geometry_from_json(const Json& j);

Json to_json(const DistanceClassReport& rep, const DistributionDiagram& dia);
Json to_json(const PairClass& pc);
Json to_json(const IsoResult& r);
Json to_json(const ClassificationReport& r);
Json to_json(const A32Enumeration& e);
Json to_json(const NoA53Report& r);
Json to_json(const MainTheoremReport& r);
Json to_json(const DualPolarCorrespondence& r);

// Collinearity graph, and the distribution diagram laid out as in the 3x3 balloon grid.
std::string to_dot(const Geometry& G);
std::string to_dot(const DistributionDiagram& dia);
// One row per report: size, verdict, origin, iso type.
std::string to_tsv(const std::vector<ClassificationReport>& reports);

}  // namespace polargrass
