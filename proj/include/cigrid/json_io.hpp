#pragma once

#include <string>

#include "json.hpp"

#include "cigrid/decompose.hpp"
#include "cigrid/degree.hpp"
#include "cigrid/grid.hpp"
#include "cigrid/ideals.hpp"
#include "cigrid/matroid.hpp"
#include "cigrid/oracle.hpp"

namespace cigrid {

using Json = nlohmann::ordered_json;

// Big integers serialize as decimal strings so values never lose precision
// in transit.
Json int_json(const Int& x);

Json shape_json(const GridShape& g);
GridShape shape_from_json(const Json& j);

// Cells of a d x m grid as [row, col] pairs, 1-based.
Json cells_json(const std::vector<GridCell>& cells);

Json component_json(const ComponentDescriptor& c);
Json report_json(const DecompositionReport& r);
Json report_summary_json(const DecompositionReport& r);
Json degree_report_json(const DegreeReport& r);
Json ideal_spec_json(const IdealSpec& spec);

Json vector_config_json(const VectorConfig& v);
// Expects {"d": n, "vectors": [["p/q", ...], ...]}.
VectorConfig vector_config_from_json(const Json& j);

// Flatten to "key,value" rows; nested keys joined with '.'; arrays are
// JSON-encoded in the value cell.
std::string json_to_csv(const Json& j);

// dump(2) with a trailing newline.
std::string render_json(const Json& j);

}  // namespace cigrid
