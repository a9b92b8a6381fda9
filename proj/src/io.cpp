#include "rg/io.hpp"

#include <fstream>

namespace rg {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
  return j;
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << "\n";
}

Json point_to_json(const Point& p) { return Json::array({p.x, p.y}); }

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw IoError("point must be a [x, y] number pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

namespace {

Json ring_to_json(const Ring& ring) {
  Json j = Json::array();
  for (const Point& p : ring) j.push_back(point_to_json(p));
  return j;
}

Ring ring_from_json(const Json& j) {
  if (!j.is_array()) throw IoError("ring must be an array of points");
  Ring ring;
  for (const Json& p : j) ring.push_back(point_from_json(p));
  return ring;
}

}  // namespace

Json polygon_to_json(const PolygonWithHoles& P) {
  Json j;
  j["outer"] = ring_to_json(P.outer());
  j["holes"] = Json::array();
  for (const Ring& h : P.holes()) j["holes"].push_back(ring_to_json(h));
  return j;
}

PolygonWithHoles polygon_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("outer")) throw IoError("polygon needs an \"outer\" ring");
  Ring outer = ring_from_json(j["outer"]);
  std::vector<Ring> holes;
  if (j.contains("holes"))
    for (const Json& h : j["holes"]) holes.push_back(ring_from_json(h));
  try {
    PolygonWithHoles P(std::move(outer), std::move(holes));
    P.validate();
    return P;
  } catch (const GeomError& e) {
    throw IoError(std::string("invalid polygon: ") + e.what());
  }
}

Json params_to_json(const RobustParams& p) {
  Json j;
  j["alpha"] = p.alpha;
  j["eps_geom"] = p.eps_geom;
  j["tol_arc"] = p.tol_arc;
  j["k_qgrid"] = p.k_qgrid;
  j["k_fat"] = p.k_fat;
  j["c_boundary"] = p.c_boundary;
  j["sample_density"] = p.sample_density;
  j["max_candidates_per_disk"] = p.max_candidates_per_disk;
  j["max_candidates_total"] = p.max_candidates_total;
  j["max_arrangement_faces"] = p.max_arrangement_faces;
  j["seed"] = p.seed;
  return j;
}

RobustParams params_from_json(const Json& j) {
  RobustParams p;
  if (j.contains("alpha")) p = RobustParams::with_alpha(j["alpha"].get<double>());
  auto opt = [&j](const char* key, auto& field) {
    if (j.contains(key)) field = j[key].get<std::decay_t<decltype(field)>>();
  };
  opt("eps_geom", p.eps_geom);
  opt("tol_arc", p.tol_arc);
  opt("k_qgrid", p.k_qgrid);
  opt("k_fat", p.k_fat);
  opt("c_boundary", p.c_boundary);
  opt("sample_density", p.sample_density);
  opt("max_candidates_per_disk", p.max_candidates_per_disk);
  opt("max_candidates_total", p.max_candidates_total);
  opt("max_arrangement_faces", p.max_arrangement_faces);
  opt("seed", p.seed);
  return p;
}

Json region_to_json(const Region& r) {
  Json pieces = Json::array();
  for (const RegionPiece& piece : r.pieces) {
    Json pj;
    if (const auto* s = std::get_if<SegPiece>(&piece)) {
      pj["type"] = "segment";
      pj["a"] = point_to_json(s->a);
      pj["b"] = point_to_json(s->b);
    } else if (const auto* a = std::get_if<ArcPiece>(&piece)) {
      pj["type"] = "arc";
      pj["center"] = point_to_json(a->center);
      pj["radius"] = a->radius;
      pj["from"] = a->from;
      pj["to"] = a->to;
    } else if (const auto* h = std::get_if<HyperbolaPiece>(&piece)) {
      pj["type"] = "hyperbola";
      pj["origin"] = point_to_json(h->origin);
      pj["angle"] = h->angle;
      pj["scale"] = h->scale;
      pj["alpha"] = h->alpha;
      pj["x_lo"] = h->x_lo;
      pj["x_hi"] = h->x_hi;
    }
    pieces.push_back(std::move(pj));
  }
  Json approx = Json::array();
  for (const PolygonWithHoles& part : r.approx) approx.push_back(polygon_to_json(part));
  Json j;
  j["pieces"] = std::move(pieces);
  j["approx"] = std::move(approx);
  j["anchor"] = point_to_json(r.anchor);
  j["tol"] = r.tol;
  j["degenerate"] = r.degenerate;
  return j;
}

Json points_to_json(const std::vector<Point>& pts) {
  Json j = Json::array();
  for (const Point& p : pts) j.push_back(point_to_json(p));
  return j;
}

std::vector<Point> points_from_json(const Json& j) {
  if (!j.is_array()) throw IoError("points must be an array of [x, y] pairs");
  std::vector<Point> pts;
  for (const Json& p : j) pts.push_back(point_from_json(p));
  return pts;
}

Json solution_to_json(const GuardSolution& sol, const RobustParams& config) {
  Json j;
  j["certified_alpha"] = sol.certified_alpha;
  j["target"] = sol.target == TargetKind::FullPolygon ? "polygon" : "discrete";
  j["guards"] = points_to_json(sol.guards);
  j["witnesses"] = points_to_json(sol.witnesses);
  j["implicit"] = Json::array();
  for (const ImplicitChainGuards& e : sol.implicit)
    j["implicit"].push_back({{"chain_id", e.chain_id}, {"count", e.count}});
  j["stats"] = {{"witness_count", sol.stats.witness_count},
                {"fallback_additions", sol.stats.fallback_additions},
                {"replacement_kept_original", sol.stats.replacement_kept_original},
                {"center_guards_added", sol.stats.center_guards_added},
                {"arrangement_faces", sol.stats.arrangement_faces},
                {"candidate_count", sol.stats.candidate_count},
                {"max_hitting_grid", sol.stats.max_hitting_grid},
                {"max_Qg", sol.stats.max_Qg}};
  j["config"] = params_to_json(config);
  return j;
}

GuardSolution solution_from_json(const Json& j) {
  GuardSolution sol;
  if (!j.is_object() || !j.contains("guards")) throw IoError("solution needs a \"guards\" array");
  sol.guards = points_from_json(j["guards"]);
  if (j.contains("witnesses")) sol.witnesses = points_from_json(j["witnesses"]);
  if (j.contains("certified_alpha")) sol.certified_alpha = j["certified_alpha"].get<double>();
  if (j.contains("target"))
    sol.target = j["target"] == "polygon" ? TargetKind::FullPolygon : TargetKind::Discrete;
  if (j.contains("implicit"))
    for (const Json& e : j["implicit"])
      sol.implicit.push_back({e.at("chain_id").get<int>(), e.at("count").get<int>()});
  if (j.contains("stats")) {
    const Json& s = j["stats"];
    auto opt = [&s](const char* key, std::size_t& field) {
      if (s.contains(key)) field = s[key].get<std::size_t>();
    };
    opt("witness_count", sol.stats.witness_count);
    opt("fallback_additions", sol.stats.fallback_additions);
    opt("replacement_kept_original", sol.stats.replacement_kept_original);
    opt("center_guards_added", sol.stats.center_guards_added);
    opt("arrangement_faces", sol.stats.arrangement_faces);
    opt("candidate_count", sol.stats.candidate_count);
    opt("max_hitting_grid", sol.stats.max_hitting_grid);
    opt("max_Qg", sol.stats.max_Qg);
  }
  return sol;
}

Json report_to_json(const CoverageReport& rep) {
  Json j;
  j["samples"] = rep.samples;
  j["covered"] = rep.covered;
  j["level"] = rep.level;
  j["seed"] = rep.seed;
  j["ok"] = rep.ok();
  Json unc = Json::array();
  for (const UncoveredSample& u : rep.uncovered) {
    unc.push_back({{"p", point_to_json(u.p)},
                   {"nearest_guard", point_to_json(u.nearest_guard)},
                   {"reason", u.reason}});
    if (unc.size() >= 100) break;  // keep reports readable
  }
  j["uncovered"] = std::move(unc);
  return j;
}

}  // namespace rg
