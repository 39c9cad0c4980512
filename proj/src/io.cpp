#include "shortwell/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "shortwell/error.hpp"

namespace shortwell {

namespace {

template <class T>
Json optional_vector(const std::optional<std::vector<T>>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<std::vector<T>> read_optional_vector(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::vector<T>>();
}

SeriesMethod parse_method(const std::string& name) {
  for (auto m : {SeriesMethod::implicit, SeriesMethod::tmethod, SeriesMethod::beta, SeriesMethod::lseries,
                 SeriesMethod::rspt}) {
    if (to_string(m) == name) return m;
  }
  throw InvalidInput("unknown series method: " + name);
}

}  // namespace

void to_json(Json& j, const BigRational& q) {
  j = Json{{"numerator", q.numerator_string()}, {"denominator", q.denominator_string()}};
}

void from_json(const Json& j, BigRational& q) {
  q = BigRational::parse(j.at("numerator").get<std::string>() + "/" + j.at("denominator").get<std::string>());
}

void to_json(Json& j, const RationalSeries& s) {
  j = Json{{"domain", "rational"},
           {"variable", s.variable()},
           {"order", s.order()},
           {"coefficients", std::vector<BigRational>(s.coefficients().begin(), s.coefficients().end())}};
}

void from_json(const Json& j, RationalSeries& s) {
  if (j.at("domain") != "rational") throw InvalidInput("expected a rational series");
  auto c = j.at("coefficients").get<std::vector<BigRational>>();
  if (c.size() != j.at("order").get<std::size_t>() + 1) throw InvalidInput("series order does not match coefficients");
  s = RationalSeries(j.at("variable").get<std::string>(), std::move(c));
}

void to_json(Json& j, const FloatSeries& s) {
  j = Json{{"domain", "float"},
           {"variable", s.variable()},
           {"order", s.order()},
           {"coefficients", std::vector<double>(s.coefficients().begin(), s.coefficients().end())}};
}

void from_json(const Json& j, FloatSeries& s) {
  if (j.at("domain") != "float") throw InvalidInput("expected a float series");
  auto c = j.at("coefficients").get<std::vector<double>>();
  if (c.size() != j.at("order").get<std::size_t>() + 1) throw InvalidInput("series order does not match coefficients");
  s = FloatSeries(j.at("variable").get<std::string>(), std::move(c));
}

void to_json(Json& j, const EnergySeries& s) {
  Json params = Json::array();
  for (const auto& [name, value] : s.parameters) params.push_back(Json::array({name, value}));
  j = Json{{"model", std::string(to_string(s.model))},
           {"method", std::string(to_string(s.method))},
           {"exact", s.exact ? Json(*s.exact) : Json(nullptr)},
           {"numeric", s.numeric},
           {"parameters", params}};
}

void from_json(const Json& j, EnergySeries& s) {
  s.model = parse_model_id(j.at("model").get<std::string>());
  s.method = parse_method(j.at("method").get<std::string>());
  if (j.at("exact").is_null()) {
    s.exact.reset();
  } else {
    s.exact = j.at("exact").get<RationalSeries>();
  }
  s.numeric = j.at("numeric").get<FloatSeries>();
  s.parameters.clear();
  for (const auto& p : j.at("parameters")) s.parameters.emplace_back(p.at(0).get<std::string>(), p.at(1).get<double>());
}

void to_json(Json& j, const WCoefficients& w) { j = Json{{"w", w.w}, {"error", w.error}}; }

void from_json(const Json& j, WCoefficients& w) {
  w.w = j.at("w").get<std::array<double, 4>>();
  w.error = j.at("error").get<std::array<double, 4>>();
}

void to_json(Json& j, const RsptResult& r) {
  j = Json{{"coefficients", r.coefficients}, {"basis_size", r.basis_size}, {"wavefunctions", r.wavefunctions}};
}

void from_json(const Json& j, RsptResult& r) {
  r.coefficients = j.at("coefficients").get<std::vector<double>>();
  r.basis_size = j.at("basis_size").get<std::size_t>();
  r.wavefunctions = j.at("wavefunctions").get<std::vector<std::vector<double>>>();
}

void to_json(Json& j, const BlowupRow& r) {
  j = Json{{"L", r.box_length},
           {"j", r.order},
           {"coefficient", r.coefficient},
           {"rescaled", r.rescaled},
           {"exponent_fit", r.exponent_fit},
           {"exact_coefficient", r.exact_coefficient ? Json(*r.exact_coefficient) : Json(nullptr)},
           {"exact_rescaled", r.exact_rescaled ? Json(*r.exact_rescaled) : Json(nullptr)}};
}

void from_json(const Json& j, BlowupRow& r) {
  r.box_length = j.at("L").get<double>();
  r.order = j.at("j").get<int>();
  r.coefficient = j.at("coefficient").get<double>();
  r.rescaled = j.at("rescaled").get<double>();
  r.exponent_fit = j.at("exponent_fit").get<double>();
  r.exact_coefficient.reset();
  r.exact_rescaled.reset();
  if (!j.at("exact_coefficient").is_null()) r.exact_coefficient = j.at("exact_coefficient").get<BigRational>();
  if (!j.at("exact_rescaled").is_null()) r.exact_rescaled = j.at("exact_rescaled").get<BigRational>();
}

void to_json(Json& j, const BranchPoint& b) { j = Json{{"epsilon_c", b.epsilon}, {"lambda_c", b.lambda}}; }

void from_json(const Json& j, BranchPoint& b) {
  b.epsilon = j.at("epsilon_c").get<double>();
  b.lambda = j.at("lambda_c").get<double>();
}

void to_json(Json& j, const PadeApproximant& p) {
  j = Json{{"kind", "pade"},
           {"numerator_degree", p.numerator_degree},
           {"denominator_degree", p.denominator_degree},
           {"requested_denominator_degree", p.requested_denominator_degree},
           {"numerator", p.numerator},
           {"denominator", p.denominator},
           {"exact_numerator", optional_vector(p.exact_numerator)},
           {"exact_denominator", optional_vector(p.exact_denominator)}};
}

void from_json(const Json& j, PadeApproximant& p) {
  p.numerator_degree = j.at("numerator_degree").get<int>();
  p.denominator_degree = j.at("denominator_degree").get<int>();
  p.requested_denominator_degree = j.at("requested_denominator_degree").get<int>();
  p.numerator = j.at("numerator").get<std::vector<double>>();
  p.denominator = j.at("denominator").get<std::vector<double>>();
  p.exact_numerator = read_optional_vector<BigRational>(j, "exact_numerator");
  p.exact_denominator = read_optional_vector<BigRational>(j, "exact_denominator");
}

void to_json(Json& j, const QuadraticPade& p) {
  j = Json{{"kind", "qpade"},
           {"degrees", {p.p_degree, p.q_degree, p.r_degree}},
           {"p", p.p},
           {"q", p.q},
           {"r", p.r},
           {"exact_p", optional_vector(p.exact_p)},
           {"exact_q", optional_vector(p.exact_q)},
           {"exact_r", optional_vector(p.exact_r)},
           {"branch", p.branch},
           {"null_space_dimension", p.null_space_dimension}};
}

void from_json(const Json& j, QuadraticPade& p) {
  const auto d = j.at("degrees").get<std::vector<int>>();
  if (d.size() != 3) throw InvalidInput("quadratic approximant needs three degrees");
  p.p_degree = d[0];
  p.q_degree = d[1];
  p.r_degree = d[2];
  p.p = j.at("p").get<std::vector<double>>();
  p.q = j.at("q").get<std::vector<double>>();
  p.r = j.at("r").get<std::vector<double>>();
  p.exact_p = read_optional_vector<BigRational>(j, "exact_p");
  p.exact_q = read_optional_vector<BigRational>(j, "exact_q");
  p.exact_r = read_optional_vector<BigRational>(j, "exact_r");
  p.branch = j.at("branch").get<int>();
  p.null_space_dimension = j.at("null_space_dimension").get<int>();
}

void to_json(Json& j, const TwoPointPade& p) {
  j = Json{{"kind", "tppade"},
           {"variable", "u"},
           {"p_small", p.p_small},
           {"q_large", p.q_large},
           {"numerator", p.numerator},
           {"denominator", p.denominator},
           {"exact_numerator", optional_vector(p.exact_numerator)},
           {"exact_denominator", optional_vector(p.exact_denominator)}};
}

void from_json(const Json& j, TwoPointPade& p) {
  p.p_small = j.at("p_small").get<int>();
  p.q_large = j.at("q_large").get<int>();
  p.numerator = j.at("numerator").get<std::vector<double>>();
  p.denominator = j.at("denominator").get<std::vector<double>>();
  p.exact_numerator = read_optional_vector<BigRational>(j, "exact_numerator");
  p.exact_denominator = read_optional_vector<BigRational>(j, "exact_denominator");
}

void to_json(Json& j, const RadiusEstimate& r) {
  j = Json{{"radius", r.radius}, {"singularity_sign", r.singularity_sign}, {"intercepts", r.intercepts}};
}

void from_json(const Json& j, RadiusEstimate& r) {
  r.radius = j.at("radius").get<double>();
  r.singularity_sign = j.at("singularity_sign").get<int>();
  r.intercepts = j.at("intercepts").get<std::vector<double>>();
}

void to_json(Json& j, const ResultDocument& d) {
  j = Json{{"schema_version", d.schema_version},
           {"command", d.command},
           {"config", d.config},
           {"payload", d.payload},
           {"provenance", d.provenance}};
}

void from_json(const Json& j, ResultDocument& d) {
  d.schema_version = j.at("schema_version").get<std::string>();
  if (d.schema_version != kSchemaVersion) throw InvalidInput("unsupported schema_version " + d.schema_version);
  d.command = j.at("command").get<std::string>();
  d.config = j.at("config");
  d.payload = j.at("payload");
  d.provenance = j.at("provenance");
}

std::string serialize(const ResultDocument& doc) { return Json(doc).dump(2) + "\n"; }

ResultDocument parse_document(const std::string& text) {
  try {
    return Json::parse(text).get<ResultDocument>();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed result document: ") + e.what());
  }
}

EnergySeries read_series_json(const Json& j) {
  try {
    if (j.contains("schema_version")) {
      const auto doc = j.get<ResultDocument>();
      if (!doc.payload.contains("series")) throw InvalidInput("document carries no series");
      return doc.payload.at("series").get<EnergySeries>();
    }
    if (j.contains("method")) return j.get<EnergySeries>();
    if (j.at("domain") == "rational") {
      EnergySeries out = make_exact_series(ModelId::square, SeriesMethod::implicit, j.get<RationalSeries>());
      return out;
    }
    return make_float_series(ModelId::square, SeriesMethod::implicit, j.get<FloatSeries>());
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed series file: ") + e.what());
  }
}

std::string CsvTable::str() const {
  std::ostringstream out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace shortwell
