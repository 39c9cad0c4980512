#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "shortwell/energy_series.hpp"
#include "shortwell/lmethod.hpp"
#include "shortwell/models.hpp"
#include "shortwell/rational.hpp"
#include "shortwell/series.hpp"
#include "shortwell/summation.hpp"
#include "shortwell/tmethod.hpp"

namespace shortwell {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// Envelope for every emitted result.
struct ResultDocument {
  std::string schema_version = kSchemaVersion;
  std::string command;
  Json config = Json::object();      // echo of the run configuration
  Json payload = Json::object();
  Json provenance = Json::object();  // method, tolerances, basis sizes

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

// Rationals are {"numerator": "...", "denominator": "..."} decimal strings.
// Floats go through the JSON library's shortest round-trip formatting.
void to_json(Json& j, const BigRational& q);
void from_json(const Json& j, BigRational& q);
void to_json(Json& j, const RationalSeries& s);
void from_json(const Json& j, RationalSeries& s);
void to_json(Json& j, const FloatSeries& s);
void from_json(const Json& j, FloatSeries& s);
void to_json(Json& j, const EnergySeries& s);
void from_json(const Json& j, EnergySeries& s);
void to_json(Json& j, const WCoefficients& w);
void from_json(const Json& j, WCoefficients& w);
void to_json(Json& j, const RsptResult& r);
void from_json(const Json& j, RsptResult& r);
void to_json(Json& j, const BlowupRow& r);
void from_json(const Json& j, BlowupRow& r);
void to_json(Json& j, const BranchPoint& b);
void from_json(const Json& j, BranchPoint& b);
void to_json(Json& j, const PadeApproximant& p);
void from_json(const Json& j, PadeApproximant& p);
void to_json(Json& j, const QuadraticPade& p);
void from_json(const Json& j, QuadraticPade& p);
void to_json(Json& j, const TwoPointPade& p);
void from_json(const Json& j, TwoPointPade& p);
void to_json(Json& j, const RadiusEstimate& r);
void from_json(const Json& j, RadiusEstimate& r);
void to_json(Json& j, const ResultDocument& d);
void from_json(const Json& j, ResultDocument& d);

/// Pretty-printed with a trailing newline.
std::string serialize(const ResultDocument& doc);
ResultDocument parse_document(const std::string& text);

/// Reads a RationalSeries or FloatSeries (as EnergySeries) from a series
/// document, a bare EnergySeries, or a bare series object.
EnergySeries read_series_json(const Json& j);

/// Header row plus string cells; `str()` renders comma-separated lines.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  [[nodiscard]] std::string str() const;
};

/// %.17g; "nan" / "inf" / "-inf" for non-finite values.
std::string csv_number(double v);

}  // namespace shortwell
