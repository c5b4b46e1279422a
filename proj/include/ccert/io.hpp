#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "ccert/analysis.hpp"
#include "ccert/theorems.hpp"

namespace ccert {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Family file schema:
// {"dimension": d, "bodies": [{"name", "halfspaces": [{"a": [...], "b"}]}]}
// with every rational a string. parse -> serialize -> parse is the identity.
Family parse_family(const std::string& text);
std::string serialize_family(const Family& family);
std::string family_digest(const Family& family);
std::string combined_digest(const std::vector<Family>& families);

// Point set file: {"dimension": d, "points": [["x","y"], ...]}.
std::vector<Vec> parse_points(const std::string& text, int* dimension = nullptr);
std::string serialize_points(const std::vector<Vec>& points, int dimension);
std::string points_digest(const std::vector<Vec>& points, int dimension);

struct ReportCaps {
  int max_hyperplanes = 14;
  int max_bodies = 9;
  Rat grid_step = make_rat(1, 16);
};

Json caps_json(const ReportCaps& caps);
Json report_envelope(const std::string& operation, const std::string& input_digest,
                     std::uint64_t seed, const ReportCaps& caps, Json certificate,
                     bool verified);

Json point_json(const Vec& p);
Vec point_from_json(const Json& j);
Json matrix_json(const Mat& m);
Mat matrix_from_json(const Json& j);
Json family_json(const Family& family);
Family family_from_json(const Json& j);

Json pik_json(const PikReport& report);
Json helly_json(int dimension, const std::optional<Vec>& point);
Json cell_json(const CellComplex& complex, std::int32_t cell);
Json escape_json(const CellComplex& complex, const EscapeResult& e);
Json depth_json(const CellComplex& complex, const DepthCertificate& cert);
Json central_point_json(const CellComplex& complex, const CentralPointReport& report);
Json surround_json(const CellComplex& complex, const SurroundVerdict& verdict);
Json flat_json(const Flat& flat);
Flat flat_from_json(const Json& j);
Json flat_surround_json(const FlatSurroundVerdict& verdict, const Flat& flat);
Json partition_json(const CellComplex& complex, const PartitionSearchResult& result,
                    int r);
Json lemma5_json(const Lemma5Result& result, const Vec& base);
Json transversal_json(const TransversalSearchResult& result, int m);
Json tukey_json(const std::vector<Vec>& points, const TukeyReport& report);

// Re-checks a report from the family (or point set) inputs alone.
struct VerifyReportResult {
  bool ok = false;
  std::string detail;
};
VerifyReportResult verify_report(const Json& report, const std::vector<Family>& families,
                                 const std::vector<Vec>& points, int points_dim,
                                 const ReportCaps& caps);

void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace ccert
