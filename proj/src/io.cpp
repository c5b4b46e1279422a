#include "ccert/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "ccert/errors.hpp"
#include "ccert/lp.hpp"

namespace ccert {

namespace {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

Json point_json(const Vec& p) {
  Json j = Json::array();
  for (const Rat& c : p) j.push_back(rat_to_string(c));
  return j;
}

Vec point_from_json(const Json& j) {
  Vec p;
  for (const auto& c : j) p.push_back(rat_from_string(c.get<std::string>()));
  return p;
}

Json matrix_json(const Mat& m) {
  Json j = Json::array();
  for (const Vec& row : m) j.push_back(point_json(row));
  return j;
}

Mat matrix_from_json(const Json& j) {
  Mat m;
  for (const auto& row : j) m.push_back(point_from_json(row));
  return m;
}

Json family_json(const Family& family) {
  Json j;
  j["dimension"] = family.dimension;
  Json bodies = Json::array();
  for (const ConvexBody& body : family.bodies) {
    Json b;
    b["name"] = body.name;
    Json hs = Json::array();
    for (const HalfSpace& h : body.halfspaces) {
      Json e;
      e["a"] = point_json(h.normal);
      e["b"] = rat_to_string(h.offset);
      hs.push_back(std::move(e));
    }
    b["halfspaces"] = std::move(hs);
    bodies.push_back(std::move(b));
  }
  j["bodies"] = std::move(bodies);
  return j;
}

Family family_from_json(const Json& j) {
  if (!j.contains("dimension") || !j.contains("bodies"))
    throw ParseError("family file needs 'dimension' and 'bodies'");
  Family family;
  family.dimension = j.at("dimension").get<int>();
  if (family.dimension < 1) throw ParseError("dimension must be >= 1");
  std::set<std::string> names;
  for (const auto& b : j.at("bodies")) {
    ConvexBody body;
    body.name = b.at("name").get<std::string>();
    if (body.name.empty()) throw ParseError("body with empty name");
    if (!names.insert(body.name).second)
      throw ParseError("duplicate body name '" + body.name + "'");
    int idx = 0;
    for (const auto& h : b.at("halfspaces")) {
      HalfSpace hs;
      try {
        hs.normal = point_from_json(h.at("a"));
        hs.offset = rat_from_string(h.at("b").get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError("body '" + body.name + "', constraint " +
                         std::to_string(idx) + ": " + e.what());
      }
      if (static_cast<int>(hs.normal.size()) != family.dimension)
        throw ParseError("body '" + body.name + "', constraint " +
                         std::to_string(idx) + ": dimension mismatch");
      if (is_zero(hs.normal))
        throw ParseError("body '" + body.name + "', constraint " +
                         std::to_string(idx) + ": zero normal");
      body.halfspaces.push_back(std::move(hs));
      ++idx;
    }
    if (body.halfspaces.empty())
      throw ParseError("body '" + body.name + "' has no half-spaces");
    family.bodies.push_back(std::move(body));
  }
  for (const ConvexBody& body : family.bodies) {
    if (!lp_feasible_point(family.dimension, constraints_of(body)))
      throw ParseError("empty body '" + body.name + "'");
  }
  return family;
}

Family parse_family(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return family_from_json(j);
}

std::string serialize_family(const Family& family) { return family_json(family).dump(2) + "\n"; }

std::string family_digest(const Family& family) {
  return "fnv1a64:" + hex64(fnv1a64(serialize_family(family)));
}

std::string combined_digest(const std::vector<Family>& families) {
  if (families.size() == 1) return family_digest(families[0]);
  std::string joined;
  for (const Family& f : families) joined += family_digest(f) + ";";
  return "fnv1a64:" + hex64(fnv1a64(joined));
}

std::vector<Vec> parse_points(const std::string& text, int* dimension) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  int d = j.at("dimension").get<int>();
  if (d < 1) throw ParseError("dimension must be >= 1");
  std::vector<Vec> points;
  for (const auto& p : j.at("points")) {
    Vec v = point_from_json(p);
    if (static_cast<int>(v.size()) != d) throw ParseError("point dimension mismatch");
    points.push_back(std::move(v));
  }
  if (dimension) *dimension = d;
  return points;
}

std::string serialize_points(const std::vector<Vec>& points, int dimension) {
  Json j;
  j["dimension"] = dimension;
  Json arr = Json::array();
  for (const Vec& p : points) arr.push_back(point_json(p));
  j["points"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string points_digest(const std::vector<Vec>& points, int dimension) {
  return "fnv1a64:" + hex64(fnv1a64(serialize_points(points, dimension)));
}

Json caps_json(const ReportCaps& caps) {
  Json j;
  j["max_hyperplanes"] = caps.max_hyperplanes;
  j["max_bodies"] = caps.max_bodies;
  j["grid_step"] = rat_to_string(caps.grid_step);
  return j;
}

Json report_envelope(const std::string& operation, const std::string& input_digest,
                     std::uint64_t seed, const ReportCaps& caps, Json certificate,
                     bool verified) {
  Json j;
  j["operation"] = operation;
  j["input_digest"] = input_digest;
  j["seed"] = seed;
  j["caps"] = caps_json(caps);
  j["verified"] = verified;
  j["certificate"] = std::move(certificate);
  return j;
}

Json pik_json(const PikReport& report) {
  Json j;
  j["k"] = report.k;
  j["k_effective"] = report.k_effective;
  j["holds"] = report.holds;
  if (report.holds) {
    Json w = Json::array();
    for (const auto& [subset, point] : report.witnesses) {
      Json e;
      e["subfamily"] = subset;
      e["point"] = point_json(point);
      w.push_back(std::move(e));
    }
    j["witnesses"] = std::move(w);
  } else {
    j["violating"] = report.violating;
  }
  return j;
}

Json helly_json(int dimension, const std::optional<Vec>& point) {
  Json j;
  j["dimension"] = dimension;
  j["found"] = point.has_value();
  if (point) j["point"] = point_json(*point);
  return j;
}

Json cell_json(const CellComplex& complex, std::int32_t cell) {
  Json j;
  j["sign"] = sign_string(complex.cells[cell].sign);
  j["point"] = point_json(complex.cells[cell].representative);
  return j;
}

Json escape_json(const CellComplex& complex, const EscapeResult& e) {
  Json j;
  j["start_blocked"] = e.start_blocked;
  if (e.start_blocked) j["blocking_body"] = e.blocking_body;
  j["escaped"] = e.escaped;
  j["avoided"] = indices_of(e.avoided_mask);
  Json path = Json::array();
  for (std::int32_t c : e.path) path.push_back(cell_json(complex, c));
  j["path"] = std::move(path);
  Json comp = Json::array();
  for (std::int32_t c : e.component) comp.push_back(cell_json(complex, c));
  j["component"] = std::move(comp);
  return j;
}

Json depth_json(const CellComplex& complex, const DepthCertificate& cert) {
  Json j;
  j["point"] = point_json(cert.point);
  j["depth"] = cert.depth;
  j["hit_set"] = cert.hit_set;
  j["mandatory"] = cert.mandatory;
  j["escape"] = escape_json(complex, cert.escape);
  Json lb = Json::array();
  for (const DepthTranscriptEntry& e : cert.lower_bound) {
    Json t;
    t["size"] = e.size;
    t["candidates"] = e.candidates;
    t["all_failed"] = e.all_failed;
    lb.push_back(std::move(t));
  }
  j["lower_bound"] = std::move(lb);
  return j;
}

Json central_point_json(const CellComplex& complex, const CentralPointReport& report) {
  Json j;
  j["n"] = report.n;
  j["required"] = report.required;
  j["pi_d_holds"] = report.pi_d_holds;
  j["bound_met"] = report.bound_met;
  j["cells_evaluated"] = report.cells_evaluated;
  if (report.best_cell >= 0)
    j["best_cell_sign"] = sign_string(complex.cells[report.best_cell].sign);
  j["best"] = depth_json(complex, report.best);
  return j;
}

Json surround_json(const CellComplex& complex, const SurroundVerdict& verdict) {
  Json j;
  j["subfamily"] = verdict.subfamily;
  j["point"] = point_json(verdict.point);
  j["applicable"] = verdict.applicable;
  j["surrounded"] = verdict.surrounded;
  j["size_flag"] = verdict.size_flag;
  switch (verdict.evidence) {
    case SurroundEvidence::containment:
      j["evidence"] = "containment";
      j["containing_body"] = verdict.containing_body;
      break;
    case SurroundEvidence::escape:
      j["evidence"] = "escape";
      j["escape"] = escape_json(complex, verdict.escape);
      break;
    case SurroundEvidence::component:
      j["evidence"] = "component";
      j["escape"] = escape_json(complex, verdict.escape);
      break;
  }
  return j;
}

Json flat_json(const Flat& flat) {
  Json j;
  j["basepoint"] = point_json(flat.basepoint);
  j["directions"] = matrix_json(flat.directions);
  return j;
}

Flat flat_from_json(const Json& j) {
  Flat flat;
  flat.basepoint = point_from_json(j.at("basepoint"));
  flat.directions = matrix_from_json(j.at("directions"));
  return flat;
}

Json flat_surround_json(const FlatSurroundVerdict& verdict, const Flat& flat) {
  Json j;
  j["flat"] = flat_json(flat);
  j["projected_point"] = point_json(verdict.projected_point);
  j["complement"] = matrix_json(verdict.complement);
  j["verdict"] = surround_json(verdict.complex, verdict.verdict);
  return j;
}

Json partition_json(const CellComplex& complex, const PartitionSearchResult& result,
                    int r) {
  Json j;
  j["r"] = r;
  j["found"] = result.certificate.has_value();
  j["exhaustive"] = result.exhaustive;
  j["points_tried"] = result.points_tried;
  if (!result.certificate) return j;
  const PartitionCertificate& cert = *result.certificate;
  j["point"] = point_json(cert.point);
  j["r_is_prime_power"] = cert.r_is_prime_power;
  Json groups = Json::array();
  for (const GroupVerdict& g : cert.groups) {
    Json e;
    e["bodies"] = g.bodies;
    if (g.contains) {
      e["verdict"] = "contains";
      e["member"] = g.member;
    } else {
      e["verdict"] = "surrounds";
      e["surround"] = surround_json(complex, g.surround);
    }
    groups.push_back(std::move(e));
  }
  j["groups"] = std::move(groups);
  return j;
}

Json lemma5_json(const Lemma5Result& result, const Vec& base) {
  Json j;
  j["base"] = point_json(base);
  j["pi_d_holds"] = result.pi_d_holds;
  j["hypothesis_holds"] = result.hypothesis_holds;
  j["found"] = result.certificate.has_value();
  if (!result.certificate) {
    j["reason"] = result.reason;
    return j;
  }
  const SimplexCertificate& cert = *result.certificate;
  j["closest"] = matrix_json(Mat(cert.closest.begin(), cert.closest.end()));
  j["simplex"] = matrix_json(Mat(cert.simplex.begin(), cert.simplex.end()));
  j["barycentric"] = point_json(cert.barycentric);
  j["surround_cross_check"] = cert.surround_cross_check;
  j["clipped"] = cert.clipped;
  return j;
}

Json transversal_json(const TransversalSearchResult& result, int m) {
  Json j;
  j["m"] = m;
  j["found"] = result.certificate.has_value();
  j["directions_tried"] = result.directions_tried;
  if (!result.certificate) return j;
  const TransversalCertificate& cert = *result.certificate;
  j["flat"] = flat_json(cert.flat);
  j["r_values"] = cert.r_values;
  Json fams = Json::array();
  for (const TransversalFamilyPart& part : cert.families) {
    Json f;
    f["r"] = part.r;
    Json groups = Json::array();
    for (const TransversalGroup& g : part.groups) {
      Json e;
      e["bodies"] = g.bodies;
      if (g.intersects) {
        e["verdict"] = "intersects";
        e["member"] = g.member;
      } else {
        e["verdict"] = "surrounds";
      }
      groups.push_back(std::move(e));
    }
    f["groups"] = std::move(groups);
    fams.push_back(std::move(f));
  }
  j["families"] = std::move(fams);
  Json flags;
  flags["same_prime_power"] = cert.same_prime_power;
  flags["common_prime"] = cert.common_prime;
  flags["p_is_2"] = cert.p_is_2;
  flags["d_minus_m_even"] = cert.d_minus_m_even;
  flags["m_zero"] = cert.m_zero;
  j["flags"] = std::move(flags);
  return j;
}

Json tukey_json(const std::vector<Vec>& points, const TukeyReport& report) {
  Json j;
  Json pts = Json::array();
  for (const Vec& p : points) pts.push_back(point_json(p));
  j["points"] = std::move(pts);
  j["best"] = point_json(report.best);
  j["depth"] = report.depth;
  j["required"] = report.required;
  j["bound_met"] = report.bound_met;
  j["candidates_tried"] = report.candidates_tried;
  return j;
}

namespace {

ArrangementOptions arrangement_opts(const ReportCaps& caps) {
  ArrangementOptions opts;
  opts.max_hyperplanes = caps.max_hyperplanes;
  return opts;
}

VerifyReportResult fail(const std::string& detail) { return {false, detail}; }

VerifyReportResult verify_depth_report(const Json& cert, const Family& family,
                                       const ReportCaps& caps) {
  Vec x = point_from_json(cert.at("point"));
  CellComplex complex = build_arrangement(family, arrangement_opts(caps));
  DepthCertificate fresh = depth(family, complex, x);
  if (fresh.depth != cert.at("depth").get<int>())
    return fail("recomputed depth " + std::to_string(fresh.depth) +
                " differs from claimed " + std::to_string(cert.at("depth").get<int>()));
  // Validate the stored escape path independently of the fresh search.
  const Json& esc = cert.at("escape");
  std::vector<int> hit = cert.at("hit_set").get<std::vector<int>>();
  std::uint64_t all_mask =
      family.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << family.size()) - 1;
  std::uint64_t avoid = all_mask & ~mask_of(hit);
  const Json& path = esc.at("path");
  if (esc.at("escaped").get<bool>()) {
    if (path.empty()) return fail("escape path empty");
    std::int32_t prev = -1;
    for (std::size_t i = 0; i < path.size(); ++i) {
      SignVec sign = sign_from_string(path[i].at("sign").get<std::string>());
      Vec rep = point_from_json(path[i].at("point"));
      std::int32_t c = complex.locate(rep);
      if (complex.cells[c].sign != sign) return fail("path cell sign mismatch");
      if (complex.cells[c].covered_mask & avoid) return fail("path cell blocked");
      if (i == 0 && c != complex.locate(x)) return fail("path does not start at x");
      if (i > 0) {
        const auto& adj = complex.adjacency[prev];
        if (!std::binary_search(adj.begin(), adj.end(), c) && c != prev)
          return fail("path cells not face-adjacent");
      }
      prev = c;
    }
    if (!complex.cells[prev].unbounded) return fail("path does not end unbounded");
  }
  return {true, ""};
}

VerifyReportResult verify_partition_report(const Json& cert, const Family& family,
                                           const ReportCaps& caps) {
  if (!cert.at("found").get<bool>()) return {true, "report records no certificate"};
  PartitionCertificate parsed;
  parsed.point = point_from_json(cert.at("point"));
  parsed.r = cert.at("r").get<int>();
  parsed.r_is_prime_power = cert.at("r_is_prime_power").get<bool>();
  for (const auto& g : cert.at("groups")) {
    GroupVerdict verdict;
    verdict.bodies = g.at("bodies").get<std::vector<int>>();
    verdict.contains = g.at("verdict").get<std::string>() == "contains";
    if (verdict.contains) verdict.member = g.at("member").get<int>();
    parsed.groups.push_back(std::move(verdict));
  }
  if (parsed.r_is_prime_power != is_prime_power(parsed.r))
    return fail("prime power flag incorrect");
  CellComplex complex = build_arrangement(family, arrangement_opts(caps));
  VerifyOutcome outcome = verify_partition(family, complex, parsed);
  if (!outcome.ok) return fail(outcome.failing_check);
  return {true, ""};
}

VerifyReportResult verify_transversal_report(const Json& cert,
                                             const std::vector<Family>& families) {
  if (!cert.at("found").get<bool>()) return {true, "report records no certificate"};
  Flat flat = flat_from_json(cert.at("flat"));
  int m = cert.at("m").get<int>();
  if (static_cast<int>(families.size()) != m + 1)
    return fail("family count differs from m+1");
  const Json& fams = cert.at("families");
  for (std::size_t i = 0; i < families.size(); ++i) {
    const Family& family = families[i];
    const Json& part = fams.at(i);
    int r = part.at("r").get<int>();
    int expected = required_depth(family.size(), family.dimension - m);
    if (r != expected) return fail("r differs from ceil(n/(d-m+1))");
    std::uint64_t seen = 0;
    if (static_cast<int>(part.at("groups").size()) != r)
      return fail("group count differs from r");
    for (const auto& g : part.at("groups")) {
      std::vector<int> bodies = g.at("bodies").get<std::vector<int>>();
      if (bodies.empty()) return fail("empty subfamily");
      for (int b : bodies) {
        if (b < 0 || b >= family.size()) return fail("body index out of range");
        if (seen & (std::uint64_t{1} << b)) return fail("disjointness");
        seen |= std::uint64_t{1} << b;
      }
      bool intersects = g.at("verdict").get<std::string>() == "intersects";
      if (m == 0) {
        if (intersects) {
          int member = g.at("member").get<int>();
          if (!family.bodies[member].contains(flat.basepoint))
            return fail("claimed member does not contain the point");
        } else {
          CellComplex complex = build_arrangement(family);
          SurroundVerdict v = surrounds(family, complex, bodies, flat.basepoint);
          if (!v.applicable || !v.surrounded) return fail("subfamily does not surround");
        }
        continue;
      }
      if (intersects) {
        int member = g.at("member").get<int>();
        if (std::find(bodies.begin(), bodies.end(), member) == bodies.end())
          return fail("member not in subfamily");
        Mat complement = orthogonal_complement(flat.directions, family.dimension);
        ConvexBody body = family.bodies[member];
        if (!is_bounded(body)) {
          Family one;
          one.dimension = family.dimension;
          one.bodies.push_back(body);
          body = clip_to_box(body, default_clip_box(one, {flat.basepoint}));
        }
        ConvexBody proj = project_body(body, flat.directions, complement);
        Vec t = project_point(flat.basepoint, flat.directions, complement);
        if (!proj.contains(t)) return fail("claimed member does not intersect the flat");
      } else {
        FlatSurroundVerdict v = surrounds_flat(family, bodies, flat);
        if (!v.verdict.applicable || !v.verdict.surrounded)
          return fail("subfamily does not surround the flat");
      }
    }
  }
  return {true, ""};
}

}  // namespace

VerifyReportResult verify_report(const Json& report, const std::vector<Family>& families,
                                 const std::vector<Vec>& points, int points_dim,
                                 const ReportCaps& caps) {
  std::string op = report.at("operation").get<std::string>();
  const Json& cert = report.at("certificate");

  std::string digest;
  if (op == "tukey")
    digest = points_digest(points, points_dim);
  else if (!families.empty())
    digest = combined_digest(families);
  if (!digest.empty() && report.at("input_digest").get<std::string>() != digest)
    return fail("input digest mismatch: report was produced from different input");

  if (op == "check-pik") {
    const Family& family = families.at(0);
    PikReport fresh = check_pik(family, cert.at("k").get<int>());
    if (fresh.holds != cert.at("holds").get<bool>()) return fail("verdict differs");
    if (!fresh.holds) {
      std::vector<int> claimed = cert.at("violating").get<std::vector<int>>();
      std::vector<LpConstraint> cons;
      for (int b : claimed) append_constraints(cons, family.bodies.at(b));
      if (lp_feasible_point(family.dimension, cons))
        return fail("claimed violating subfamily has a common point");
    }
    return {true, ""};
  }
  if (op == "helly") {
    const Family& family = families.at(0);
    auto fresh = helly_point(family);
    if (fresh.has_value() != cert.at("found").get<bool>()) return fail("verdict differs");
    if (cert.at("found").get<bool>()) {
      Vec p = point_from_json(cert.at("point"));
      for (const ConvexBody& body : family.bodies)
        if (!body.contains(p)) return fail("claimed point not in body " + body.name);
    }
    return {true, ""};
  }
  if (op == "depth") return verify_depth_report(cert, families.at(0), caps);
  if (op == "central-point") {
    const Family& family = families.at(0);
    CellComplex complex = build_arrangement(family, arrangement_opts(caps));
    CentralPointReport fresh = central_point(family, complex);
    if (fresh.best.depth != cert.at("best").at("depth").get<int>())
      return fail("best depth differs");
    if (fresh.pi_d_holds != cert.at("pi_d_holds").get<bool>())
      return fail("pi_d flag differs");
    if (fresh.bound_met != cert.at("bound_met").get<bool>())
      return fail("bound_met differs");
    if (point_json(fresh.best.point) != cert.at("best").at("point"))
      return fail("best point differs");
    return {true, ""};
  }
  if (op == "surround") {
    const Family& family = families.at(0);
    CellComplex complex = build_arrangement(family, arrangement_opts(caps));
    std::vector<int> sub = cert.at("subfamily").get<std::vector<int>>();
    Vec x = point_from_json(cert.at("point"));
    SurroundVerdict fresh = surrounds(family, complex, sub, x);
    if (fresh.applicable != cert.at("applicable").get<bool>() ||
        fresh.surrounded != cert.at("surrounded").get<bool>())
      return fail("verdict differs");
    return {true, ""};
  }
  if (op == "surround-flat") {
    const Family& family = families.at(0);
    Flat flat = flat_from_json(cert.at("flat"));
    std::vector<int> sub = cert.at("verdict").at("subfamily").get<std::vector<int>>();
    FlatSurroundVerdict fresh = surrounds_flat(family, sub, flat, arrangement_opts(caps));
    if (fresh.verdict.applicable != cert.at("verdict").at("applicable").get<bool>() ||
        fresh.verdict.surrounded != cert.at("verdict").at("surrounded").get<bool>())
      return fail("verdict differs");
    return {true, ""};
  }
  if (op == "partition") return verify_partition_report(cert, families.at(0), caps);
  if (op == "lemma5") {
    const Family& family = families.at(0);
    Vec base = point_from_json(cert.at("base"));
    Lemma5Result fresh = lemma_surround_certificate(family, base, arrangement_opts(caps));
    if (fresh.certificate.has_value() != cert.at("found").get<bool>())
      return fail("verdict differs");
    if (fresh.pi_d_holds != cert.at("pi_d_holds").get<bool>())
      return fail("pi_d flag differs");
    if (fresh.hypothesis_holds != cert.at("hypothesis_holds").get<bool>())
      return fail("hypothesis flag differs");
    if (fresh.certificate) {
      if (matrix_json(Mat(fresh.certificate->closest.begin(),
                          fresh.certificate->closest.end())) != cert.at("closest"))
        return fail("closest points differ");
      if (!fresh.certificate->surround_cross_check)
        return fail("surround cross-check failed");
    }
    return {true, ""};
  }
  if (op == "transversal") return verify_transversal_report(cert, families);
  if (op == "tukey") {
    std::vector<Vec> pts;
    for (const auto& p : cert.at("points")) pts.push_back(point_from_json(p));
    Vec best = point_from_json(cert.at("best"));
    int fresh = tukey_depth(pts, best);
    if (fresh != cert.at("depth").get<int>()) return fail("depth differs");
    int required = required_depth(static_cast<int>(pts.size()),
                                  static_cast<int>(best.size()));
    if (required != cert.at("required").get<int>()) return fail("required differs");
    if ((fresh >= required) != cert.at("bound_met").get<bool>())
      return fail("bound_met differs");
    return {true, ""};
  }
  if (op == "replicate") {
    const Family& family = families.at(0);
    Family fresh = replicate_family(family, cert.at("k").get<int>());
    if (family_json(fresh) != cert.at("family")) return fail("replicated family differs");
    return {true, ""};
  }
  return fail("unknown operation '" + op + "'");
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ccert
