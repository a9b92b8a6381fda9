#pragma once

#include <string>

#include <json.hpp>

#include "rg/oracle.hpp"
#include "rg/region.hpp"
#include "rg/solver.hpp"

namespace rg {

struct IoError : GeomError {
  explicit IoError(const std::string& what) : GeomError(what) {}
};

using Json = nlohmann::json;

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

/// {"outer": [[x,y],...], "holes": [[[x,y],...],...]}
Json polygon_to_json(const PolygonWithHoles& P);
PolygonWithHoles polygon_from_json(const Json& j);

Json params_to_json(const RobustParams& p);
RobustParams params_from_json(const Json& j);

/// Exact pieces plus the polyline approximation.
Json region_to_json(const Region& r);

Json solution_to_json(const GuardSolution& sol, const RobustParams& config);
/// Guards, witnesses, implicit entries and stats; the decomposition context
/// is not serialized and must be re-derived before expanding implicit
/// entries.
GuardSolution solution_from_json(const Json& j);

Json report_to_json(const CoverageReport& rep);

Json points_to_json(const std::vector<Point>& pts);
std::vector<Point> points_from_json(const Json& j);

}  // namespace rg
