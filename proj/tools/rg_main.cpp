#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rg/instances.hpp"
#include "rg/inverse_vis.hpp"
#include "rg/io.hpp"
#include "rg/oracle.hpp"
#include "rg/robust_vis.hpp"
#include "rg/solver.hpp"
#include "rg/svg.hpp"

namespace {

using rg::Json;
using rg::Point;

struct CommonOpts {
  std::string polygon_path;
  std::string out_path;
  std::string svg_path;
  std::string config_path;
  double alpha = 0;
  std::uint64_t seed = 0;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* config_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_polygon = true) {
  auto* p = cmd->add_option("--polygon", o.polygon_path, "polygon JSON file");
  if (needs_polygon) p->required();
  cmd->add_option("--out", o.out_path, "output JSON path (stdout when omitted)");
  o.alpha_opt = cmd->add_option("--alpha", o.alpha, "robustness parameter alpha");
  o.seed_opt = cmd->add_option("--seed", o.seed, "random seed");
  o.config_opt = cmd->add_option("--config", o.config_path, "config JSON (flags override)");
}

// Defaults, then the config file (flag or RG_CONFIG), then explicit flags.
rg::RobustParams resolve_params(const CommonOpts& o) {
  rg::RobustParams params;
  std::string cfg = o.config_path;
  if (cfg.empty() && !o.config_opt->count())
    if (const char* env = std::getenv("RG_CONFIG")) cfg = env;
  if (!cfg.empty()) params = rg::params_from_json(rg::load_json(cfg));
  if (o.alpha_opt->count()) params = [&] {
    rg::RobustParams p = params;
    p.alpha = o.alpha;
    p.theta = std::asin(o.alpha);
    return p;
  }();
  if (o.seed_opt->count()) params.seed = o.seed;
  return params;
}

void emit(const CommonOpts& o, const Json& j) {
  if (o.out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    rg::save_json(o.out_path, j);
}

Point parse_xy(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw rg::IoError("expected X,Y but got " + s);
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw rg::IoError("expected X,Y but got " + s);
  }
}

void render_region_svg(const std::string& path, const rg::PolygonWithHoles& P,
                       const rg::Region& region, const Point& marker) {
  rg::SvgWriter svg(P.bbox());
  svg.add_polygon(P, {"#f7f7f7", "#222222", 1.5, 1.0});
  svg.add_multipoly(region.approx, {rg::kRegionColor, "#c06090", 1.0, 0.85});
  for (const rg::RegionPiece& piece : region.pieces)
    if (const auto* s = std::get_if<rg::SegPiece>(&piece))
      if (region.degenerate) svg.add_segment(s->a, s->b, {"none", rg::kRegionColor, 2.5, 1.0});
  svg.add_point(marker, 4, rg::kGuardColor);
  svg.write(path);
}

// Re-derives the decomposition context so implicit chain guards can be
// materialized from a deserialized solution.
rg::GuardSolution with_context(rg::GuardSolution sol, const rg::PolygonWithHoles& P,
                               const rg::RobustParams& config) {
  if (!sol.implicit.empty() && !sol.decomp) {
    rg::RobustParams p8 = config;
    p8.alpha = config.alpha / 8;
    p8.theta = std::asin(p8.alpha);
    p8.tol_arc = config.arc_tol(P.diameter());
    sol.decomp = std::make_shared<rg::Decomposition>(rg::decompose(P, p8));
  }
  return sol;
}

int run(int argc, char** argv) {
  CLI::App app{"alpha-robust visibility and polygon guarding"};
  app.require_subcommand(1);

  // vis / inv-vis ------------------------------------------------------
  CommonOpts vis_o, inv_o;
  std::string vis_guard, inv_point;
  auto* vis = app.add_subcommand("vis", "robust visibility region of a guard");
  add_common(vis, vis_o);
  vis->add_option("--guard", vis_guard, "guard position X,Y")->required();
  vis->add_option("--svg", vis_o.svg_path, "also render an SVG");

  auto* inv = app.add_subcommand("inv-vis", "robust inverse visibility region of a point");
  add_common(inv, inv_o);
  inv->add_option("--point", inv_point, "target position X,Y")->required();
  inv->add_option("--svg", inv_o.svg_path, "also render an SVG");

  // guard-discrete / guard-polygon --------------------------------------
  CommonOpts gd_o, gp_o;
  std::string gd_points;
  auto* gd = app.add_subcommand("guard-discrete", "guard a finite target set");
  add_common(gd, gd_o);
  gd->add_option("--points", gd_points, "targets JSON (array of [x,y])")->required();

  auto* gp = app.add_subcommand("guard-polygon", "guard the whole polygon");
  add_common(gp, gp_o);

  // expand / verify ------------------------------------------------------
  CommonOpts ex_o, ve_o;
  std::string ex_sol, ve_sol;
  double ve_level = -1;
  int ve_density = 0;
  auto* ex = app.add_subcommand("expand", "materialize implicit chain guards");
  add_common(ex, ex_o);
  ex->add_option("--solution", ex_sol, "solution JSON")->required();

  auto* ve = app.add_subcommand("verify", "dense-sample coverage check of a solution");
  add_common(ve, ve_o);
  ve->add_option("--solution", ve_sol, "solution JSON")->required();
  ve->add_option("--level", ve_level, "robustness level (default: certified_alpha)");
  ve->add_option("--density", ve_density, "sample grid density per bbox side");

  // gen -------------------------------------------------------------------
  CommonOpts gen_o;
  std::string gen_lines;
  double gen_length = 20, gen_width = 1;
  int gen_n = 12, gen_holes = 0;
  auto* gen = app.add_subcommand("gen", "generate a fixture polygon");
  gen->require_subcommand(1);
  gen->fallthrough();
  auto* g_cor = gen->add_subcommand("corridor", "axis-aligned strip");
  g_cor->fallthrough();
  g_cor->add_option("--length", gen_length);
  g_cor->add_option("--width", gen_width);
  auto* g_l = gen->add_subcommand("lshape", "L-shaped hexagon");
  g_l->fallthrough();
  auto* g_apex = gen->add_subcommand("apex", "triangle with apex angle 2*arcsin(alpha)");
  g_apex->fallthrough();
  auto* g_spike = gen->add_subcommand("spikebox", "box with one spike per input line");
  g_spike->fallthrough();
  g_spike->add_option("--lines", gen_lines, "lines JSON: [[[x,y],[x,y]],...]")->required();
  auto* g_rand = gen->add_subcommand("random", "seeded random polygon");
  g_rand->fallthrough();
  g_rand->add_option("--n", gen_n, "outer vertex count");
  g_rand->add_option("--holes", gen_holes, "hole count");
  add_common(gen, gen_o, /*needs_polygon=*/false);

  // render ------------------------------------------------------------------
  CommonOpts rd_o;
  std::string rd_guard, rd_point, rd_sol;
  bool rd_decomp = false;
  auto* rd = app.add_subcommand("render", "compose an SVG of polygon, regions and guards");
  add_common(rd, rd_o);
  rd->add_option("--svg", rd_o.svg_path, "output SVG path")->required();
  rd->add_option("--guard", rd_guard, "draw the robust visibility region of X,Y");
  rd->add_option("--point", rd_point, "draw the inverse region of X,Y");
  rd->add_option("--solution", rd_sol, "draw the guards of a solution JSON");
  rd->add_flag("--decomposition", rd_decomp, "draw medial disks and purple cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits cleanly; usage errors map to 2
  }

  if (vis->parsed()) {
    const auto P = rg::polygon_from_json(rg::load_json(vis_o.polygon_path));
    const auto params = resolve_params(vis_o);
    const Point g = parse_xy(vis_guard);
    const rg::Region region = rg::robust_visibility_region(P, g, params);
    Json j = rg::region_to_json(region);
    j["config"] = rg::params_to_json(params);
    emit(vis_o, j);
    if (!vis_o.svg_path.empty()) render_region_svg(vis_o.svg_path, P, region, g);
    return 0;
  }

  if (inv->parsed()) {
    const auto P = rg::polygon_from_json(rg::load_json(inv_o.polygon_path));
    const auto params = resolve_params(inv_o);
    const Point p = parse_xy(inv_point);
    const rg::Region region = rg::inverse_region(P, p, params);
    Json j = rg::region_to_json(region);
    j["size"] = rg::inverse_region_size(region, p);
    j["config"] = rg::params_to_json(params);
    emit(inv_o, j);
    if (!inv_o.svg_path.empty()) render_region_svg(inv_o.svg_path, P, region, p);
    return 0;
  }

  if (gd->parsed()) {
    const auto P = rg::polygon_from_json(rg::load_json(gd_o.polygon_path));
    const auto params = resolve_params(gd_o);
    const auto targets = rg::points_from_json(rg::load_json(gd_points));
    const rg::GuardSolution sol = rg::discrete_robust_guarding(P, targets, params);
    emit(gd_o, rg::solution_to_json(sol, params));
    return 0;
  }

  if (gp->parsed()) {
    const auto P = rg::polygon_from_json(rg::load_json(gp_o.polygon_path));
    const auto params = resolve_params(gp_o);
    const rg::GuardSolution sol = rg::guard_polygon(P, params);
    emit(gp_o, rg::solution_to_json(sol, params));
    return 0;
  }

  if (ex->parsed()) {
    const auto P = rg::polygon_from_json(rg::load_json(ex_o.polygon_path));
    const Json in = rg::load_json(ex_sol);
    rg::RobustParams config =
        in.contains("config") ? rg::params_from_json(in["config"]) : resolve_params(ex_o);
    rg::GuardSolution sol = with_context(rg::solution_from_json(in), P, config);
    emit(ex_o, rg::solution_to_json(rg::expand_implicit(sol), config));
    return 0;
  }

  if (ve->parsed()) {
    const auto P = rg::polygon_from_json(rg::load_json(ve_o.polygon_path));
    const Json in = rg::load_json(ve_sol);
    rg::RobustParams config =
        in.contains("config") ? rg::params_from_json(in["config"]) : resolve_params(ve_o);
    if (ve_o.seed_opt->count()) config.seed = ve_o.seed;
    rg::GuardSolution sol =
        rg::expand_implicit(with_context(rg::solution_from_json(in), P, config));
    const double level = ve_level > 0 ? ve_level : sol.certified_alpha;
    const int density =
        ve_density > 0 ? ve_density : static_cast<int>(config.sample_density);
    const rg::CoverageReport rep =
        rg::verify_coverage(P, sol.guards, level, density, config.seed);
    Json j = rg::report_to_json(rep);
    j["config"] = rg::params_to_json(config);
    emit(ve_o, j);
    return rep.ok() ? 0 : 1;
  }

  if (gen->parsed()) {
    const auto params = resolve_params(gen_o);
    Json j;
    if (g_cor->parsed()) {
      j = rg::polygon_to_json(rg::corridor(gen_length, gen_width));
    } else if (g_l->parsed()) {
      j = rg::polygon_to_json(rg::l_shape());
    } else if (g_apex->parsed()) {
      j = rg::polygon_to_json(rg::apex_fixture(params.alpha));
    } else if (g_spike->parsed()) {
      rg::LineSet ls;
      for (const Json& pair : rg::load_json(gen_lines)) {
        if (!pair.is_array() || pair.size() != 2) throw rg::IoError("bad line entry");
        ls.lines.push_back({rg::point_from_json(pair[0]), rg::point_from_json(pair[1])});
      }
      const rg::SpikeBox sb = rg::spike_box(ls, params.alpha);
      j = rg::polygon_to_json(sb.polygon);
      j["tips"] = rg::points_to_json(sb.tips);
    } else if (g_rand->parsed()) {
      j = rg::polygon_to_json(rg::random_polygon(gen_n, gen_holes, params.seed));
    }
    j["config"] = rg::params_to_json(params);
    emit(gen_o, j);
    return 0;
  }

  if (rd->parsed()) {
    const auto P = rg::polygon_from_json(rg::load_json(rd_o.polygon_path));
    const auto params = resolve_params(rd_o);
    rg::SvgWriter svg(P.bbox());
    svg.add_polygon(P, {"#f7f7f7", "#222222", 1.5, 1.0});
    if (rd_decomp) {
      const rg::Decomposition dec = rg::decompose(P, params);
      for (const rg::Cell& cell : dec.cells)
        if (cell.kind == rg::CellKind::Purple)
          svg.add_multipoly(cell.boundary, {rg::kPurpleColor, "none", 0, 0.7});
      for (const rg::Disk& d : dec.disks)
        svg.add_disk(d.center, d.radius, {rg::kDiskColor, "#b89a10", 0.8, 0.6});
    }
    if (!rd_guard.empty()) {
      const Point g = parse_xy(rd_guard);
      svg.add_multipoly(rg::robust_visibility_region(P, g, params).approx,
                        {rg::kRegionColor, "#c06090", 1.0, 0.75});
      svg.add_point(g, 4, rg::kGuardColor);
    }
    if (!rd_point.empty()) {
      const Point p = parse_xy(rd_point);
      svg.add_multipoly(rg::inverse_region(P, p, params).approx,
                        {rg::kRegionColor, "#c06090", 1.0, 0.75});
      svg.add_point(p, 4, rg::kWitnessColor);
    }
    if (!rd_sol.empty()) {
      const Json in = rg::load_json(rd_sol);
      rg::RobustParams config =
          in.contains("config") ? rg::params_from_json(in["config"]) : params;
      const rg::GuardSolution sol =
          rg::expand_implicit(with_context(rg::solution_from_json(in), P, config));
      for (const Point& w : sol.witnesses) svg.add_point(w, 5, rg::kWitnessColor);
      for (const Point& g : sol.guards) svg.add_point(g, 3, rg::kGuardColor);
    }
    svg.write(rd_o.svg_path);
    return 0;
  }

  return 2;  // unreachable: require_subcommand
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rg::IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const rg::GeomError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
