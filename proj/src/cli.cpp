#include "shortwell/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "shortwell/error.hpp"
#include "shortwell/io.hpp"
#include "shortwell/kernels.hpp"

namespace shortwell::cli {

namespace {

// Output produced by a subcommand, written only after it returns.
struct Emission {
  std::string text;
  std::string plot_script;  // written to RunConfig::plot when non-empty
};

Json echo(const RunConfig& c) {
  Json j{{"command", c.command}, {"format", c.format}};
  if (!c.model.empty()) j["model"] = c.model;
  if (c.command == "series") {
    j["method"] = c.method;
    j["order"] = c.order;
  }
  if (c.command == "tmethod" || c.command == "lmethod" || c.command == "scan") j["order"] = c.order;
  if (c.lambda) j["lambda"] = *c.lambda;
  if (c.box_length) j["L"] = *c.box_length;
  if (c.beta) j["beta"] = *c.beta;
  if (c.command == "lmethod") {
    j["nmax"] = c.n_max;
    j["extrapolate"] = c.extrapolate;
    if (!c.blowup_lengths.empty()) j["blowup"] = c.blowup_lengths;
  }
  if (c.command == "exact") j["n"] = c.n;
  if (c.command == "sum") {
    j["kind"] = c.kind;
    j["degrees"] = c.degrees;
    if (c.at) j["at"] = *c.at;
    j["series_file"] = c.series_file;
    if (!c.asymptotic.empty()) j["asymptotic"] = c.asymptotic;
  }
  if (c.command == "scan") {
    j["lambda_min"] = c.lambda_min;
    if (c.lambda_max) j["lambda_max"] = *c.lambda_max;
    j["steps"] = c.steps;
    j["methods"] = c.methods;
    j["pade"] = c.pade_degrees;
    j["qpade"] = c.qpade_degrees;
    if (!c.tppade_degrees.empty()) j["tppade"] = c.tppade_degrees;
  }
  return j;
}

ModelId require_model(const RunConfig& c) {
  if (c.model.empty()) throw InvalidInput("--model is required");
  return parse_model_id(c.model);
}

double require_positive_box(const RunConfig& c) {
  if (!c.box_length) throw InvalidInput("--L is required");
  const double l = BigRational::parse(*c.box_length).to_double();
  if (!(l > 0.0)) throw InvalidInput("--L must be positive");
  return l;
}

ResultDocument new_document(const RunConfig& c) {
  ResultDocument doc;
  doc.command = c.command;
  doc.config = echo(c);
  return doc;
}

std::string render(const RunConfig& c, const ResultDocument& doc, const CsvTable& table) {
  return c.format == "csv" ? table.str() : serialize(doc);
}

CsvTable series_table(const EnergySeries& s) {
  CsvTable t;
  if (s.exact) {
    t.header = {"j", "numerator", "denominator", "value"};
    for (std::size_t k = 0; k <= s.exact->order(); ++k) {
      const auto& q = (*s.exact)[k];
      t.rows.push_back({std::to_string(k), q.numerator_string(), q.denominator_string(), csv_number(q.to_double())});
    }
  } else {
    t.header = {"j", "value"};
    for (std::size_t k = 0; k <= s.numeric.order(); ++k) t.rows.push_back({std::to_string(k), csv_number(s.numeric[k])});
  }
  return t;
}

Emission do_series(const RunConfig& c) {
  const ModelId id = require_model(c);
  if (c.order < 0 || c.order > static_cast<int>(kMaxSeriesOrder)) throw InvalidInput("--order must be in 0..200");
  const auto order = static_cast<std::size_t>(c.order);
  ResultDocument doc = new_document(c);
  EnergySeries s;
  if (c.method == "implicit") {
    if (c.beta || c.box_length) throw InvalidInput("--beta/--L apply to the beta and lseries methods only");
    s = make_exact_series(id, SeriesMethod::implicit, ground_state_series(id, order));
    doc.provenance = {{"method", "newton_implicit_series"}, {"domain", "rational"}};
  } else if (c.method == "beta") {
    if (id != ModelId::square) throw InvalidInput("the beta method is defined for the square well");
    if (!c.beta || !(*c.beta > 0.0)) throw InvalidInput("--beta must be given and positive");
    s = make_float_series(id, SeriesMethod::beta, beta_series_numeric(*c.beta, order));
    s.parameters.emplace_back("beta", *c.beta);
    doc.provenance = {{"method", "float Newton around eps0 = -beta^2/4"}, {"domain", "float"}, {"stop_rule", 1e-14}};
  } else if (c.method == "lseries") {
    if (id != ModelId::delta) throw InvalidInput("the lseries method is defined for the delta well");
    if (!c.box_length) throw InvalidInput("--L is required for lseries");
    const BigRational l = BigRational::parse(*c.box_length);
    if (l.sign() <= 0) throw InvalidInput("--L must be positive");
    s = make_exact_series(id, SeriesMethod::lseries, delta_periodic_series(l, order));
    s.parameters.emplace_back("L", l.to_double());
    Json rescaled = Json::array();
    for (std::size_t j = 0; j <= order; ++j) rescaled.push_back((*s.exact)[j] * l.pow(2 - static_cast<int>(j)));
    doc.payload["rescaled"] = rescaled;
    doc.provenance = {{"method", "newton_implicit_series on the periodic-box condition"}, {"domain", "rational"}};
  } else {
    throw InvalidInput("--method must be implicit, beta or lseries");
  }
  doc.payload["series"] = s;
  return {render(c, doc, series_table(s)), {}};
}

Emission do_tmethod(const RunConfig& c) {
  const ModelId id = require_model(c);
  if (c.order < 1 || c.order > 4) throw InvalidInput("--order must be in 1..4");
  ModelSpec model;
  model.id = id;
  WCoefficients w;
  ResultDocument doc = new_document(c);
  if (id == ModelId::delta) {
    for (int j = 1; j <= c.order; ++j) w.w[static_cast<std::size_t>(j - 1)] = w_coefficient(model, j, {});
    doc.provenance = {{"method", "analytic (delta collapses every integral)"}};
  } else {
    const IntegrationDomain dom = default_domain(id);
    Json tails = Json::array();
    for (int j = 1; j <= c.order; ++j) {
      const auto k = static_cast<std::size_t>(j - 1);
      w.w[k] = w_coefficient(model, j, dom, &w.error[k]);
      tails.push_back(tail_bound(dom, j));
    }
    doc.provenance = {{"method", "ordered-simplex panel Gauss-Legendre"},
                      {"cutoff", dom.cutoff},
                      {"gl_order", dom.gl_order},
                      {"refined_gl_order", dom.gl_order + dom.gl_order / 2},
                      {"tolerance", dom.tolerance},
                      {"tail_bounds", tails}};
  }
  EnergySeries s = energy_series_from_w(id, w);
  s.numeric = s.numeric.truncated(static_cast<std::size_t>(c.order + 1));
  doc.payload["w"] = w;
  doc.payload["series"] = s;

  CsvTable t{{"quantity", "j", "value", "error_estimate"}, {}};
  for (int j = 1; j <= c.order; ++j) {
    const auto k = static_cast<std::size_t>(j - 1);
    t.rows.push_back({"w", std::to_string(j), csv_number(w.w[k]), csv_number(w.error[k])});
  }
  for (std::size_t j = 2; j <= s.numeric.order(); ++j) t.rows.push_back({"eps", std::to_string(j), csv_number(s.numeric[j]), ""});
  return {render(c, doc, t), {}};
}

Emission do_lmethod(const RunConfig& c) {
  const ModelId id = require_model(c);
  if (c.n_max < 1) throw InvalidInput("--nmax must be positive");
  if (c.order < 1 || c.order > 12) throw InvalidInput("--order must be in 1..12");
  ResultDocument doc = new_document(c);

  if (!c.blowup_lengths.empty()) {
    doc.provenance = {{"basis", "even_cosine"}, {"nmax", c.n_max}};
    const auto rows = blowup_report(id, c.blowup_lengths, c.order, c.n_max);
    doc.payload["blowup"] = rows;
    doc.provenance["source"] = id == ModelId::delta ? "exact L-series" : "RSPT, Richardson in 1/nmax";
    CsvTable t{{"L", "j", "coefficient", "rescaled", "exponent_fit"}, {}};
    for (const auto& r : rows) {
      t.rows.push_back({csv_number(r.box_length), std::to_string(r.order), csv_number(r.coefficient),
                        csv_number(r.rescaled), csv_number(r.exponent_fit)});
    }
    return {render(c, doc, t), {}};
  }

  const double l = require_positive_box(c);
  const PlaneWaveBasis basis{l, c.n_max, Basis::even_cosine};
  doc.provenance = {{"basis", "even_cosine"}, {"basis_size", basis.dimension()}};
  const RsptResult rspt = rspt_coefficients(id, basis, c.order);
  doc.payload["rspt"] = rspt;
  CsvTable t{{"quantity", "index", "value"}, {}};
  for (std::size_t j = 0; j < rspt.coefficients.size(); ++j) {
    t.rows.push_back({"rspt", std::to_string(j + 1), csv_number(rspt.coefficients[j])});
  }
  if (c.extrapolate) {
    const auto ex = rspt_extrapolated(id, l, c.n_max, c.order);
    doc.payload["extrapolated"] = {{"value", ex.value}, {"nmax_levels", ex.n_max_levels}, {"raw", ex.raw}};
    for (std::size_t j = 0; j < ex.value.size(); ++j) {
      t.rows.push_back({"extrapolated", std::to_string(j + 1), csv_number(ex.value[j])});
    }
  }
  if (c.lambda) {
    if (*c.lambda < 0.0) throw InvalidInput("--lambda must be non-negative");
    const double e = ground_energy_diag(id, basis, *c.lambda);
    const double sum = rspt.partial_sum(*c.lambda);
    doc.payload["diag"] = {{"lambda", *c.lambda}, {"energy", e}, {"rspt_sum", sum}};
    t.rows.push_back({"diag_energy", "0", csv_number(e)});
    t.rows.push_back({"rspt_sum", "0", csv_number(sum)});
    doc.provenance["eigensolver"] = "cyclic Jacobi, off-diagonal < 1e-13 ||H||, Rayleigh quotient";
  }
  return {render(c, doc, t), {}};
}

Emission do_exact(const RunConfig& c) {
  ModelSpec model;
  model.id = require_model(c);
  if (!c.lambda) throw InvalidInput("--lambda is required");
  model.lambda = *c.lambda;
  if (c.box_length) model.box_length = require_positive_box(c);
  model.validate();
  const double e = exact_eigenvalue(model, c.n);
  ResultDocument doc = new_document(c);
  doc.payload = {{"model", c.model}, {"lambda", model.lambda}, {"n", c.n}, {"epsilon", e}};
  doc.provenance = {{"root_tolerance", 1e-12}};
  CsvTable t{{"model", "lambda", "n", "epsilon"}, {{c.model, csv_number(model.lambda), std::to_string(c.n), csv_number(e)}}};
  return {render(c, doc, t), {}};
}

Emission do_branch(const RunConfig& c) {
  const ModelId id = require_model(c);
  const BranchPoint b = branch_point(id);
  ResultDocument doc = new_document(c);
  doc.payload["branch_point"] = b;
  doc.provenance = {{"method", "newton_2d on F = 0, dF = 0"}, {"tolerance", 1e-11}};
  CsvTable t{{"epsilon_c", "lambda_c"}, {{csv_number(b.epsilon), csv_number(b.lambda)}}};
  return {render(c, doc, t), {}};
}

std::vector<BigRational> default_asymptotic(ModelId id) {
  const LargeLambda ll = large_lambda(id, 0);
  std::vector<BigRational> a{BigRational(-1)};
  if (ll.sqrt_coefficient) a.push_back(BigRational::from_double(*ll.sqrt_coefficient));
  return a;
}

std::vector<int> default_tppade(ModelId id) {
  const int q = static_cast<int>(default_asymptotic(id).size());
  return {7 - q, q};
}

Emission do_sum(const RunConfig& c) {
  if (c.series_file.empty()) throw InvalidInput("--series-file is required");
  std::ifstream in(c.series_file);
  if (!in) throw InvalidInput("cannot read " + c.series_file);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed series file: ") + e.what());
  }
  EnergySeries s = read_series_json(j);
  if (!c.model.empty()) s.model = parse_model_id(c.model);
  const auto& d = c.degrees;

  ResultDocument doc = new_document(c);
  doc.provenance = {{"series_method", std::string(to_string(s.method))},
                    {"domain", s.exact ? "rational" : "float"}};
  if (c.kind == "radius") {
    const RadiusEstimate r = s.exact ? radius_estimate(*s.exact) : radius_estimate(s.numeric);
    doc.payload["radius"] = r;
    CsvTable t{{"kind", "radius", "singularity_sign"}, {{"radius", csv_number(r.radius), std::to_string(r.singularity_sign)}}};
    return {render(c, doc, t), {}};
  }
  if (!c.at) throw InvalidInput("--at is required");
  const double x = *c.at;
  double value = 0.0;
  if (c.kind == "pade") {
    if (d.size() != 2) throw InvalidInput("pade needs --degrees L,M");
    const auto p = s.exact ? pade(*s.exact, d[0], d[1]) : pade(s.numeric, d[0], d[1]);
    value = p.evaluate(x);
    doc.payload["approximant"] = p;
  } else if (c.kind == "qpade") {
    if (d.size() != 3) throw InvalidInput("qpade needs --degrees p,q,r");
    const auto p = s.exact ? quadratic_pade(*s.exact, d[0], d[1], d[2]) : quadratic_pade(s.numeric, d[0], d[1], d[2]);
    value = p.evaluate(x);
    doc.payload["approximant"] = p;
  } else if (c.kind == "tppade") {
    if (d.size() != 2) throw InvalidInput("tppade needs --degrees p_small,q_large");
    if (!s.exact) throw InvalidInput("tppade needs a rational series");
    std::vector<BigRational> asym;
    for (const auto& a : c.asymptotic) asym.push_back(BigRational::parse(a));
    if (asym.empty()) asym = default_asymptotic(s.model);
    const auto p = two_point_pade(*s.exact, asym, d[0], d[1]);
    value = p.evaluate(x);
    doc.payload["approximant"] = p;
    doc.payload["asymptotic"] = asym;
  } else {
    throw InvalidInput("--kind must be pade, qpade, tppade or radius");
  }
  doc.payload["at"] = x;
  doc.payload["value"] = value;
  CsvTable t{{"kind", "at", "value"}, {{c.kind, csv_number(x), csv_number(value)}}};
  return {render(c, doc, t), {}};
}

Emission do_scan(const RunConfig& c) {
  const ModelId id = require_model(c);
  if (!c.lambda_max) throw InvalidInput("--lambda-max is required");
  if (c.lambda_min < 0.0 || *c.lambda_max < c.lambda_min) throw InvalidInput("need 0 <= lambda-min <= lambda-max");
  if (c.steps < 1) throw InvalidInput("--steps must be positive");
  if (c.order < 2 || c.order > static_cast<int>(kMaxSeriesOrder)) throw InvalidInput("--order must be in 2..200");
  if (!c.plot.empty() && (c.format != "csv" || c.output.empty())) {
    throw InvalidInput("--plot needs --format csv and --output (the script plots that file)");
  }
  const RationalSeries series = ground_state_series(id, static_cast<std::size_t>(c.order));

  using Column = std::function<double(double)>;
  std::vector<std::pair<std::string, Column>> columns;
  for (const auto& m : c.methods) {
    if (m == "exact") {
      columns.emplace_back(m, [id](double x) {
        if (x == 0.0) return 0.0;
        ModelSpec spec;
        spec.id = id;
        spec.lambda = x;
        return exact_eigenvalue(spec, 0);
      });
    } else if (m == "series") {
      const FloatSeries f = series.to_float();
      columns.emplace_back(m, [f](double x) { return f.evaluate(x); });
    } else if (m == "pade") {
      if (c.pade_degrees.size() != 2) throw InvalidInput("--pade needs L,M");
      const auto p = pade(series, c.pade_degrees[0], c.pade_degrees[1]);
      columns.emplace_back(m, [p](double x) { return p.evaluate(x); });
    } else if (m == "qpade") {
      const auto& d = c.qpade_degrees;
      if (d.size() != 3) throw InvalidInput("--qpade needs p,q,r");
      const auto p = quadratic_pade(series, d[0], d[1], d[2]);
      columns.emplace_back(m, [p](double x) { return p.evaluate(x); });
    } else if (m == "tppade") {
      const auto d = c.tppade_degrees.empty() ? default_tppade(id) : c.tppade_degrees;
      if (d.size() != 2) throw InvalidInput("--tppade needs p_small,q_large");
      const auto p = two_point_pade(series, default_asymptotic(id), d[0], d[1]);
      columns.emplace_back(m, [p](double x) { return p.evaluate(x); });
    } else {
      throw InvalidInput("unknown scan method: " + m);
    }
  }

  CsvTable t;
  t.header.push_back("lambda");
  for (const auto& col : columns) t.header.push_back(col.first);
  Json rows = Json::array();
  for (int i = 0; i <= c.steps; ++i) {
    const double x = c.lambda_min + (*c.lambda_max - c.lambda_min) * i / c.steps;
    std::vector<std::string> cells{csv_number(x)};
    Json row = Json::array({x});
    for (const auto& col : columns) {
      double v = std::nan("");
      try {
        v = col.second(x);
      } catch (const NumericalError&) {
        // complex branch or pole: left blank in the table
      }
      cells.push_back(csv_number(v));
      row.push_back(std::isfinite(v) ? Json(v) : Json(nullptr));
    }
    t.rows.push_back(cells);
    rows.push_back(row);
  }
  ResultDocument doc = new_document(c);
  doc.payload = {{"columns", t.header}, {"rows", rows}};
  doc.provenance = {{"series_order", c.order}};

  Emission e{render(c, doc, t), {}};
  if (!c.plot.empty()) {
    std::ostringstream gp;
    gp << "# gnuplot script for " << c.output << "\n"
       << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel 'lambda'\n"
       << "set ylabel 'epsilon'\n"
       << "plot ";
    for (std::size_t k = 1; k < t.header.size(); ++k) {
      if (k > 1) gp << ", \\\n     ";
      gp << "'" << c.output << "' using 1:" << (k + 1) << " with linespoints";
    }
    gp << "\n";
    e.plot_script = gp.str();
  }
  return e;
}

// Pulls `--config FILE` out of the argument list and turns its key=value
// lines into `--key=value` arguments placed ahead of the explicit ones.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file name");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty() || rest.empty()) return rest;
  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  std::vector<std::string> out{rest.front()};  // the subcommand
  for (const auto& item : CLI::ConfigINI().from_config(in)) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    std::string value;
    for (std::size_t k = 0; k < item.inputs.size(); ++k) value += (k ? "," : "") + item.inputs[k];
    out.push_back("--" + item.name + "=" + value);
  }
  out.insert(out.end(), rest.begin() + 1, rest.end());
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Perturbation series, exact energies and summation for one-dimensional short-range wells",
               "shortwell"};
  app.require_subcommand(1, 1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_help_all_flag("--help-all");
  const std::vector<std::string> models{"poschl_teller", "square", "delta", "exponential"};

  auto common = [&](CLI::App* s) {
    s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    s->add_option("--output", c.output, "write here instead of standard output");
    s->add_option("--config", "key=value defaults (flags win)");
    s->callback([&c, s] { c.command = s->get_name(); });
  };
  auto model_opt = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--model", c.model, "poschl_teller | square | delta | exponential")->check(CLI::IsMember(models));
    if (required) o->required();
  };

  auto* series = app.add_subcommand("series", "ground-state eps(lambda) coefficients");
  model_opt(series, true);
  series->add_option("--method", c.method, "implicit | beta | lseries")
      ->check(CLI::IsMember({"implicit", "beta", "lseries"}))
      ->capture_default_str();
  series->add_option("--order", c.order, "highest power of lambda")->capture_default_str();
  series->add_option("--beta", c.beta, "attached delta strength (beta method)");
  series->add_option("--L", c.box_length, "box length, rational text (lseries)");
  common(series);

  auto* tmethod = app.add_subcommand("tmethod", "T-integral coefficients w_j and the derived series");
  model_opt(tmethod, true);
  c.order = 6;
  tmethod->add_option("--order", c.order, "1..4 (default 4)");
  common(tmethod);

  auto* lmethod = app.add_subcommand("lmethod", "periodic-box RSPT and diagonalization");
  model_opt(lmethod, true);
  lmethod->add_option("--L", c.box_length, "box length (not used with --blowup)");
  lmethod->add_option("--nmax", c.n_max, "plane-wave cutoff")->capture_default_str();
  lmethod->add_option("--order", c.order, "RSPT order J (default 4)");
  lmethod->add_option("--lambda", c.lambda, "also diagonalize at this strength");
  lmethod->add_flag("--extrapolate", c.extrapolate, "Richardson in 1/nmax over nmax, 2nmax, 4nmax");
  lmethod->add_option("--blowup", c.blowup_lengths, "box lengths for the coefficient blow-up table")->delimiter(',');
  common(lmethod);

  auto* exact = app.add_subcommand("exact", "exact eigenvalue");
  model_opt(exact, true);
  exact->add_option("--lambda", c.lambda, "strength")->required();
  exact->add_option("--n", c.n, "quantum number")->capture_default_str();
  exact->add_option("--L", c.box_length, "periodic box length (delta)");
  common(exact);

  auto* branch = app.add_subcommand("branch", "branch point (eps_c, lambda_c)");
  model_opt(branch, true);
  common(branch);

  auto* sum = app.add_subcommand("sum", "summation of a stored series");
  model_opt(sum, false);
  sum->add_option("--kind", c.kind, "pade | qpade | tppade | radius")
      ->check(CLI::IsMember({"pade", "qpade", "tppade", "radius"}))
      ->required();
  sum->add_option("--degrees", c.degrees, "L,M | p,q,r | p_small,q_large")->delimiter(',');
  sum->add_option("--at", c.at, "evaluation point lambda");
  sum->add_option("--series-file", c.series_file, "JSON from `series`")->required();
  sum->add_option("--asymptotic", c.asymptotic, "large-u coefficients a0,a1,... (tppade)")->delimiter(',');
  common(sum);

  auto* scan = app.add_subcommand("scan", "compare methods over a lambda grid");
  model_opt(scan, true);
  scan->add_option("--lambda-min", c.lambda_min)->capture_default_str();
  scan->add_option("--lambda-max", c.lambda_max)->required();
  scan->add_option("--steps", c.steps, "intervals")->capture_default_str();
  scan->add_option("--methods", c.methods, "exact,series,pade,qpade,tppade")->delimiter(',')->capture_default_str();
  scan->add_option("--order", c.order, "series order")->capture_default_str();
  scan->add_option("--pade", c.pade_degrees, "L,M")->delimiter(',')->capture_default_str();
  scan->add_option("--qpade", c.qpade_degrees, "p,q,r")->delimiter(',')->capture_default_str();
  scan->add_option("--tppade", c.tppade_degrees, "p_small,q_large (default 6,1 or 5,2)")->delimiter(',');
  scan->add_option("--plot", c.plot, "gnuplot script path (needs --format csv --output)");
  common(scan);

  Emission result;
  try {
    std::vector<std::string> argv = expand_config(args);
    // Per-subcommand order defaults when the flag is absent.
    const bool has_order = std::any_of(argv.begin(), argv.end(), [](const std::string& a) {
      return a == "--order" || a.rfind("--order=", 0) == 0;
    });
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
    if (!has_order) {
      if (c.command == "tmethod" || c.command == "lmethod") c.order = 4;
      if (c.command == "series" || c.command == "scan") c.order = 6;
    }
    if (c.command == "series") result = do_series(c);
    else if (c.command == "tmethod") result = do_tmethod(c);
    else if (c.command == "lmethod") result = do_lmethod(c);
    else if (c.command == "exact") result = do_exact(c);
    else if (c.command == "branch") result = do_branch(c);
    else if (c.command == "sum") result = do_sum(c);
    else if (c.command == "scan") result = do_scan(c);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::Success&) {
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }

  if (c.output.empty()) {
    out << result.text;
  } else {
    std::ofstream f(c.output, std::ios::binary);
    if (!(f << result.text)) {
      err << "error: cannot write " << c.output << "\n";
      return kExitUsage;
    }
  }
  if (!result.plot_script.empty()) {
    std::ofstream f(c.plot, std::ios::binary);
    if (!(f << result.plot_script)) {
      err << "error: cannot write " << c.plot << "\n";
      return kExitUsage;
    }
  }
  return kExitOk;
}

}  // namespace shortwell::cli
