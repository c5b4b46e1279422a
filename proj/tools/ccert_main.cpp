// Command-line front end: every library operation behind a subcommand, JSON
// reports on request, exit code 0 for true/success verdicts, 1 for
// false/none-found, 2 for usage or cap errors.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ccert/errors.hpp"
#include "ccert/generators.hpp"
#include "ccert/grid_oracle.hpp"
#include "ccert/io.hpp"
#include "ccert/svg.hpp"

using namespace ccert;

namespace {

struct GlobalOpts {
  std::vector<std::string> family_paths;
  std::string out_path;
  std::uint64_t seed = 0;
  int max_hyperplanes = 14;
  int max_bodies = 9;
  std::string grid_step = "1/16";
  bool json = false;
};

Vec parse_point_arg(const std::string& text) {
  Vec p;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      p.push_back(rat_from_string(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) p.push_back(rat_from_string(cur));
  if (p.empty()) throw std::invalid_argument("empty point literal");
  return p;
}

ReportCaps caps_of(const GlobalOpts& g) {
  ReportCaps caps;
  caps.max_hyperplanes = g.max_hyperplanes;
  caps.max_bodies = g.max_bodies;
  caps.grid_step = rat_from_string(g.grid_step);
  return caps;
}

ArrangementOptions arr_opts(const GlobalOpts& g) {
  ArrangementOptions opts;
  opts.max_hyperplanes = g.max_hyperplanes;
  return opts;
}

std::vector<Family> load_families(const GlobalOpts& g) {
  std::vector<Family> families;
  for (const std::string& path : g.family_paths)
    families.push_back(parse_family(read_file(path)));
  return families;
}

Family load_single_family(const GlobalOpts& g) {
  if (g.family_paths.size() != 1)
    throw std::invalid_argument("exactly one --family file required");
  return parse_family(read_file(g.family_paths[0]));
}

std::vector<Vec> path_points(const Json& escape) {
  std::vector<Vec> pts;
  for (const auto& cell : escape.at("path")) pts.push_back(point_from_json(cell.at("point")));
  return pts;
}

// Certificate payloads translated into drawable overlays.
SvgOverlays overlays_from_report(const Json& report, const Family& family) {
  SvgOverlays overlays;
  std::string op = report.at("operation").get<std::string>();
  const Json& cert = report.at("certificate");
  if (op == "depth") {
    overlays.points.emplace_back(point_from_json(cert.at("point")),
                                 "depth " + std::to_string(cert.at("depth").get<int>()));
    overlays.paths.push_back(path_points(cert.at("escape")));
  } else if (op == "central-point") {
    const Json& best = cert.at("best");
    overlays.points.emplace_back(point_from_json(best.at("point")),
                                 "depth " + std::to_string(best.at("depth").get<int>()));
    overlays.paths.push_back(path_points(best.at("escape")));
  } else if (op == "surround" || op == "surround-flat") {
    const Json& v = op == "surround" ? cert : cert.at("verdict");
    overlays.points.emplace_back(point_from_json(v.at("point")), "x");
    if (v.contains("escape") && v.at("escape").at("escaped").get<bool>())
      overlays.paths.push_back(path_points(v.at("escape")));
  } else if (op == "partition" && cert.at("found").get<bool>()) {
    overlays.points.emplace_back(point_from_json(cert.at("point")), "x");
    overlays.group_of_body.assign(family.size(), 0);
    const Json& groups = cert.at("groups");
    for (int b = 0; b < family.size(); ++b)
      overlays.group_of_body[b] = static_cast<int>(groups.size());  // unused bodies
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
      for (int b : groups[gi].at("bodies").get<std::vector<int>>())
        overlays.group_of_body[b] = static_cast<int>(gi);
  } else if (op == "lemma5" && cert.at("found").get<bool>()) {
    overlays.points.emplace_back(point_from_json(cert.at("base")), "b");
    std::vector<Vec> simplex;
    for (const auto& v : cert.at("simplex")) simplex.push_back(point_from_json(v));
    if (!simplex.empty()) simplex.push_back(simplex.front());
    overlays.paths.push_back(std::move(simplex));
    for (const auto& v : cert.at("closest"))
      overlays.points.emplace_back(point_from_json(v), "g");
  } else if (op == "transversal" && cert.at("found").get<bool>()) {
    Flat flat = flat_from_json(cert.at("flat"));
    if (flat.directions.empty()) {
      overlays.points.emplace_back(flat.basepoint, "x");
    } else {
      Vec a = sub(flat.basepoint, scale(flat.directions[0], Rat(100)));
      Vec b = add(flat.basepoint, scale(flat.directions[0], Rat(100)));
      overlays.paths.push_back({a, b});
    }
  } else if (op == "tukey") {
    for (const auto& p : cert.at("points"))
      overlays.points.emplace_back(point_from_json(p), "");
    overlays.points.emplace_back(point_from_json(cert.at("best")),
                                 "depth " + std::to_string(cert.at("depth").get<int>()));
  }
  return overlays;
}

// Prints or writes the final report; returns the verdict-driven exit code.
int emit(const GlobalOpts& g, const std::string& operation, const std::string& digest,
         Json certificate, bool verdict, const std::string& summary,
         bool verified = true) {
  Json report = report_envelope(operation, digest, g.seed, caps_of(g),
                                std::move(certificate), verified);
  std::string text = report.dump(2) + "\n";
  if (!g.out_path.empty()) write_file_atomic(g.out_path, text);
  if (g.json)
    std::cout << text;
  else
    std::cout << summary << "\n";
  return verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for families of convex bodies"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--family", g.family_paths, "family JSON file (repeatable)");
  app.add_option("--out", g.out_path, "write the JSON report to this path");
  app.add_option("--seed", g.seed, "RNG seed for generators and searches");
  app.add_option("--max-hyperplanes", g.max_hyperplanes, "arrangement hyperplane cap");
  app.add_option("--max-bodies", g.max_bodies, "partition search body cap");
  app.add_option("--grid-step", g.grid_step, "grid oracle step (rational)");
  app.add_flag("--json", g.json, "print the JSON report to stdout");

  auto sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->fallthrough();  // global options may follow the subcommand name
    return c;
  };

  // check-pik
  auto* cmd_pik = sub("check-pik", "check the k-intersection property");
  int pik_k = 2;
  cmd_pik->add_option("-k,--k", pik_k, "subfamily size")->required();

  // helly
  sub("helly", "common point of the whole family");

  // depth
  auto* cmd_depth = sub("depth", "dual depth of a point");
  std::string depth_point;
  cmd_depth->add_option("--point", depth_point, "query point, e.g. 1/2,3")->required();

  // central-point
  auto* cmd_central = sub("central-point", "max-depth point over all cells");
  std::string central_point_arg;
  cmd_central->add_option("--point", central_point_arg, "evaluate at this point instead");

  // partition
  auto* cmd_partition = sub("partition", "dual Tverberg partition search");
  int partition_r = 0;
  std::string partition_point;
  cmd_partition->add_option("-r,--r", partition_r, "number of subfamilies")->required();
  cmd_partition->add_option("--point", partition_point, "fix the common point");

  // surround
  auto* cmd_surround = sub("surround", "does a subfamily surround a point/flat");
  std::vector<int> surround_bodies;
  std::string surround_point, surround_flat_base;
  std::vector<std::string> surround_flat_dirs;
  cmd_surround->add_option("--bodies", surround_bodies, "subfamily indices (default: all)");
  cmd_surround->add_option("--point", surround_point, "query point");
  cmd_surround->add_option("--flat-base", surround_flat_base, "flat basepoint");
  cmd_surround->add_option("--flat-dir", surround_flat_dirs, "flat direction (repeatable)");

  // lemma5
  auto* cmd_lemma = sub("lemma5", "constructive simplex surround certificate");
  std::string lemma_point;
  cmd_lemma->add_option("--point", lemma_point, "base point b")->required();

  // transversal
  auto* cmd_trans = sub("transversal", "search for a transversal m-flat");
  int trans_m = 1;
  int trans_density = 4;
  cmd_trans->add_option("-m,--m", trans_m, "flat dimension (0 or 1)");
  cmd_trans->add_option("--grid-density", trans_density, "direction grid bound");

  // tukey
  auto* cmd_tukey = sub("tukey", "half-space depth of finite point sets");
  std::string tukey_points_path, tukey_at;
  cmd_tukey->add_option("--points", tukey_points_path, "points JSON file")->required();
  cmd_tukey->add_option("--at", tukey_at, "evaluate depth at this point only");

  // replicate
  auto* cmd_rep = sub("replicate", "repeat each body k times");
  int rep_k = 2;
  cmd_rep->add_option("-k,--k", rep_k, "replication count")->required();

  // gen
  auto* cmd_gen = sub("gen", "generate a family");
  std::string gen_kind;
  int gen_n = 3, gen_d = 2, gen_k = 2;
  std::string gen_thickness = "1/10";
  std::string gen_point = "0,0";
  cmd_gen->add_option("--kind", gen_kind,
                      "lines | concurrent | simplex-facets | random-pik | pik-violation | grid")
      ->required();
  cmd_gen->add_option("-n,--n", gen_n, "number of bodies");
  cmd_gen->add_option("-d,--d", gen_d, "dimension");
  cmd_gen->add_option("-k,--k", gen_k, "intersection property to plant");
  cmd_gen->add_option("--thickness", gen_thickness, "facet thickness");
  cmd_gen->add_option("--point", gen_point, "common point for concurrent lines");

  // render
  auto* cmd_render = sub("render", "render a planar family as SVG");
  std::string render_point, render_report;
  cmd_render->add_option("--point", render_point, "overlay marker point");
  cmd_render->add_option("--report", render_report, "overlay a report's certificate");

  // verify
  auto* cmd_verify = sub("verify", "re-check a report file");
  std::string verify_report_path, verify_points_path;
  cmd_verify->add_option("--report", verify_report_path, "report JSON file")->required();
  cmd_verify->add_option("--points", verify_points_path, "points file for tukey reports");

  // grid-escape (oracle exposure for harness scripts)
  auto* cmd_grid = sub("grid-escape", "grid BFS escape oracle");
  std::string grid_point;
  std::vector<int> grid_avoid;
  cmd_grid->add_option("--point", grid_point, "query point")->required();
  cmd_grid->add_option("--avoid", grid_avoid, "avoided body indices (default: all)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_pik->parsed()) {
      Family family = load_single_family(g);
      PikReport report = check_pik(family, pik_k);
      std::string summary = "pi_" + std::to_string(pik_k) + " holds";
      if (!report.holds) {
        summary = "pi_" + std::to_string(pik_k) + " fails; violating subfamily:";
        for (int b : report.violating)
          summary += " " + family.bodies[b].name + " (#" + std::to_string(b) + ")";
      }
      return emit(g, "check-pik", family_digest(family), pik_json(report), report.holds,
                  summary);
    }
    if (app.get_subcommand("helly")->parsed()) {
      Family family = load_single_family(g);
      auto point = helly_point(family);
      std::string summary = point ? "common point found" : "no common point";
      return emit(g, "helly", family_digest(family), helly_json(family.dimension, point),
                  point.has_value(), summary);
    }
    if (cmd_depth->parsed()) {
      Family family = load_single_family(g);
      CellComplex complex = build_arrangement(family, arr_opts(g));
      DepthCertificate cert = depth(family, complex, parse_point_arg(depth_point));
      return emit(g, "depth", family_digest(family), depth_json(complex, cert), true,
                  "depth " + std::to_string(cert.depth));
    }
    if (cmd_central->parsed()) {
      Family family = load_single_family(g);
      CellComplex complex = build_arrangement(family, arr_opts(g));
      std::optional<Vec> at;
      if (!central_point_arg.empty()) at = parse_point_arg(central_point_arg);
      CentralPointReport report = central_point(family, complex, at);
      return emit(g, "central-point", family_digest(family),
                  central_point_json(complex, report), report.bound_met,
                  "depth " + std::to_string(report.best.depth) + ", required " +
                      std::to_string(report.required) +
                      (report.bound_met ? " (met)" : " (not met)"));
    }
    if (cmd_partition->parsed()) {
      Family family = load_single_family(g);
      CellComplex complex = build_arrangement(family, arr_opts(g));
      std::optional<Vec> at;
      if (!partition_point.empty()) at = parse_point_arg(partition_point);
      PartitionOptions popts;
      popts.max_bodies = g.max_bodies;
      PartitionSearchResult result =
          dual_tverberg_partition(family, complex, partition_r, at, popts);
      bool verified = true;
      std::string summary = result.exhaustive ? "no certificate (exhaustive search)"
                                              : "no certificate found";
      if (result.certificate) {
        verified = verify_partition(family, complex, *result.certificate).ok;
        summary = verified ? "partition certificate found and re-verified"
                           : "partition certificate FAILED re-verification";
      }
      return emit(g, "partition", family_digest(family),
                  partition_json(complex, result, partition_r),
                  result.certificate.has_value(), summary, verified);
    }
    if (cmd_surround->parsed()) {
      Family family = load_single_family(g);
      std::vector<int> sub = surround_bodies;
      if (sub.empty())
        for (int i = 0; i < family.size(); ++i) sub.push_back(i);
      if (!surround_flat_base.empty()) {
        Flat flat;
        flat.basepoint = parse_point_arg(surround_flat_base);
        for (const std::string& dir : surround_flat_dirs)
          flat.directions.push_back(parse_point_arg(dir));
        FlatSurroundVerdict verdict = surrounds_flat(family, sub, flat, arr_opts(g));
        return emit(g, "surround-flat", family_digest(family),
                    flat_surround_json(verdict, flat), verdict.verdict.surrounded,
                    verdict.verdict.surrounded ? "surrounds the flat"
                                               : "does not surround the flat");
      }
      if (surround_point.empty())
        throw std::invalid_argument("surround needs --point or --flat-base");
      CellComplex complex = build_arrangement(family, arr_opts(g));
      SurroundVerdict verdict =
          surrounds(family, complex, sub, parse_point_arg(surround_point));
      std::string summary = !verdict.applicable
                                ? "inapplicable: point inside the subfamily union"
                                : (verdict.surrounded ? "surrounded" : "not surrounded");
      return emit(g, "surround", family_digest(family), surround_json(complex, verdict),
                  verdict.surrounded, summary);
    }
    if (cmd_lemma->parsed()) {
      Family family = load_single_family(g);
      Vec b = parse_point_arg(lemma_point);
      Lemma5Result result = lemma_surround_certificate(family, b, arr_opts(g));
      std::string summary = result.certificate ? "simplex certificate emitted"
                                               : "no certificate: " + result.reason;
      bool verified = !result.certificate || result.certificate->surround_cross_check;
      return emit(g, "lemma5", family_digest(family), lemma5_json(result, b),
                  result.certificate.has_value(), summary, verified);
    }
    if (cmd_trans->parsed()) {
      std::vector<Family> families = load_families(g);
      TransversalOptions topts;
      topts.max_bodies = g.max_bodies;
      topts.max_hyperplanes = g.max_hyperplanes;
      topts.grid_density = trans_density;
      TransversalSearchResult result = transversal_search(families, trans_m, topts);
      return emit(g, "transversal", combined_digest(families),
                  transversal_json(result, trans_m), result.certificate.has_value(),
                  result.certificate ? "transversal flat found" : "none found");
    }
    if (cmd_tukey->parsed()) {
      int dim = 0;
      std::vector<Vec> points = parse_points(read_file(tukey_points_path), &dim);
      TukeyReport report;
      if (!tukey_at.empty()) {
        Vec at = parse_point_arg(tukey_at);
        report.best = at;
        report.depth = tukey_depth(points, at);
        report.required = required_depth(static_cast<int>(points.size()), dim);
        report.bound_met = report.depth >= report.required;
      } else {
        report = discrete_central_point(points);
      }
      return emit(g, "tukey", points_digest(points, dim), tukey_json(points, report), true,
                  "depth " + std::to_string(report.depth) + ", bound " +
                      std::to_string(report.required) +
                      (report.bound_met ? " (met)" : " (not met)"));
    }
    if (cmd_rep->parsed()) {
      Family family = load_single_family(g);
      Family out = replicate_family(family, rep_k);
      Json cert;
      cert["k"] = rep_k;
      cert["family"] = family_json(out);
      return emit(g, "replicate", family_digest(family), std::move(cert), true,
                  "replicated to " + std::to_string(out.size()) + " bodies");
    }
    if (cmd_gen->parsed()) {
      Family family;
      Json cert;
      cert["kind"] = gen_kind;
      if (gen_kind == "lines") {
        family = gen_lines_general_position(gen_n, g.seed);
        cert["n"] = gen_n;
      } else if (gen_kind == "concurrent") {
        family = gen_concurrent_lines(gen_n, parse_point_arg(gen_point));
        cert["n"] = gen_n;
        cert["point"] = point_json(parse_point_arg(gen_point));
      } else if (gen_kind == "simplex-facets") {
        SimplexFacetInstance inst =
            gen_simplex_facet_instance(gen_d, rat_from_string(gen_thickness), g.seed);
        family = inst.family;
        cert["d"] = gen_d;
        cert["thickness"] = rat_to_string(inst.thickness_used);
        cert["base_point"] = point_json(inst.base_point);
      } else if (gen_kind == "random-pik") {
        family = gen_random_pik(gen_n, gen_d, gen_k, g.seed);
        cert["n"] = gen_n;
        cert["d"] = gen_d;
        cert["k"] = gen_k;
      } else if (gen_kind == "pik-violation") {
        family = gen_random_pik_violation(gen_n, g.seed);
        cert["n"] = gen_n;
      } else if (gen_kind == "grid") {
        family = gen_grid_instance(gen_n, g.seed);
        cert["n"] = gen_n;
      } else {
        throw std::invalid_argument("unknown gen kind '" + gen_kind + "'");
      }
      cert["family"] = family_json(family);
      if (!g.out_path.empty()) {
        write_file_atomic(g.out_path, serialize_family(family));
        if (!g.json) std::cout << "family written to " << g.out_path << "\n";
        if (g.json) std::cout << serialize_family(family);
        return 0;
      }
      std::cout << serialize_family(family);
      return 0;
    }
    if (cmd_render->parsed()) {
      Family family = load_single_family(g);
      SvgOverlays overlays;
      if (!render_report.empty())
        overlays = overlays_from_report(Json::parse(read_file(render_report)), family);
      if (!render_point.empty()) overlays.points.emplace_back(parse_point_arg(render_point), "x");
      std::string svg = render_svg(family, overlays);
      if (!g.out_path.empty()) {
        write_file_atomic(g.out_path, svg);
        std::cout << "svg written to " << g.out_path << "\n";
      } else {
        std::cout << svg;
      }
      return 0;
    }
    if (cmd_verify->parsed()) {
      Json report = Json::parse(read_file(verify_report_path));
      std::vector<Family> families = load_families(g);
      std::vector<Vec> points;
      int points_dim = 0;
      if (!verify_points_path.empty())
        points = parse_points(read_file(verify_points_path), &points_dim);
      VerifyReportResult result = verify_report(report, families, points, points_dim, caps_of(g));
      std::cout << (result.ok ? "report verified" : "verification FAILED: " + result.detail)
                << "\n";
      return result.ok ? 0 : 1;
    }
    if (cmd_grid->parsed()) {
      Family family = load_single_family(g);
      Vec x = parse_point_arg(grid_point);
      std::uint64_t mask = grid_avoid.empty()
                               ? (family.size() == 64 ? ~std::uint64_t{0}
                                                      : (std::uint64_t{1} << family.size()) - 1)
                               : mask_of(grid_avoid);
      GridOracleConfig config;
      config.step = rat_from_string(g.grid_step);
      config.box = default_clip_box(family, {x});
      bool escaped = grid_escape_oracle(family, mask, x, config);
      std::cout << (escaped ? "escapes" : "no escape") << "\n";
      return escaped ? 0 : 1;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
