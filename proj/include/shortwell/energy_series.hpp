#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shortwell/models.hpp"
#include "shortwell/series.hpp"

namespace shortwell {

enum class SeriesMethod { implicit, tmethod, beta, lseries, rspt };

std::string_view to_string(SeriesMethod m);

/// eps(lambda) coefficients tagged with the method that produced them.
/// `exact` is present when the coefficients are rational; `numeric` is
/// always filled (the float image of `exact` when both exist).
struct EnergySeries {
  ModelId model = ModelId::square;
  SeriesMethod method = SeriesMethod::implicit;
  std::optional<RationalSeries> exact;
  FloatSeries numeric;
  std::vector<std::pair<std::string, double>> parameters;  // beta, L, n_max, ...
};

inline EnergySeries make_exact_series(ModelId model, SeriesMethod method, RationalSeries s) {
  EnergySeries out;
  out.model = model;
  out.method = method;
  out.numeric = s.to_float();
  out.exact = std::move(s);
  return out;
}

inline EnergySeries make_float_series(ModelId model, SeriesMethod method, FloatSeries s) {
  EnergySeries out;
  out.model = model;
  out.method = method;
  out.numeric = std::move(s);
  return out;
}

}  // namespace shortwell
