#include "wavepack/cli/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "wavepack/analytic/autocorrelation.hpp"
#include "wavepack/core/quadrature.hpp"

namespace wavepack::cli {

using nlohmann::json;

const char* to_string(Method method) noexcept {
  switch (method) {
    case Method::Analytic: return "analytic";
    case Method::SplitOperator: return "split_operator";
    case Method::Spectral: return "spectral";
  }
  return "unknown";
}

const char* to_string(Output output) noexcept {
  switch (output) {
    case Output::SeriesCsv: return "series_csv";
    case Output::ArgandSvg: return "argand_svg";
    case Output::ReportJson: return "report_json";
  }
  return "unknown";
}

bool Scenario::has_method(Method m) const { return std::find(methods.begin(), methods.end(), m) != methods.end(); }
bool Scenario::wants(Output o) const { return std::find(outputs.begin(), outputs.end(), o) != outputs.end(); }

namespace {

std::string join(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }

/// Reads fields from one JSON object and rejects keys nobody asked for.
class Fields {
 public:
  Fields(const json& object, std::string path) : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) throw SchemaError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  bool has(const std::string& key) const { return object_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    if (!object_.contains(key)) throw SchemaError(join(path_, key), "required field is missing");
    return object_.at(key);
  }

  double number(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) throw SchemaError(join(path_, key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw SchemaError(join(path_, key), "expected a finite number");
    return d;
  }
  double number(const std::string& key, double fallback) { return has(key) ? number(key) : (seen_.insert(key), fallback); }

  double positive(const std::string& key, double fallback) {
    const double v = number(key, fallback);
    if (!(v > 0.0)) throw SchemaError(join(path_, key), "must be > 0");
    return v;
  }
  double positive(const std::string& key) {
    const double v = number(key);
    if (!(v > 0.0)) throw SchemaError(join(path_, key), "must be > 0");
    return v;
  }

  std::int64_t integer(const std::string& key, std::int64_t fallback) {
    if (!has(key)) {
      seen_.insert(key);
      return fallback;
    }
    const json& v = raw(key);
    if (!v.is_number_integer()) throw SchemaError(join(path_, key), "expected an integer");
    return v.get<std::int64_t>();
  }

  std::string string(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string()) throw SchemaError(join(path_, key), "expected a string");
    return v.get<std::string>();
  }
  std::string string(const std::string& key, const std::string& fallback) {
    if (!has(key)) {
      seen_.insert(key);
      return fallback;
    }
    return string(key);
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) {
      seen_.insert(key);
      return fallback;
    }
    const json& v = raw(key);
    if (!v.is_boolean()) throw SchemaError(join(path_, key), "expected true or false");
    return v.get<bool>();
  }

  Fields object(const std::string& key) { return Fields(raw(key), join(path_, key)); }
  void skip(const std::string& key) { seen_.insert(key); }

  Fields object_or_empty(const std::string& key) {
    static const json empty = json::object();
    if (!has(key)) {
      seen_.insert(key);
      return Fields(empty, join(path_, key));
    }
    return object(key);
  }

  void finish() const {
    for (const auto& [key, value] : object_.items())
      if (!seen_.count(key)) throw SchemaError(join(path_, key), "unknown field");
  }

  const std::string& path() const { return path_; }

 private:
  const json& object_;
  std::string path_;
  std::set<std::string> seen_;
};

SystemSpec parse_system(Fields f, json& out) {
  const std::string kind = f.string("kind");
  out["kind"] = kind;
  SystemSpec system = SystemSpec::free_particle();
  if (kind == "free") {
  } else if (kind == "acceleration") {
    const double force = f.number("force");
    system = SystemSpec::uniform_acceleration(force);
    out["force"] = force;
  } else if (kind == "harmonic") {
    const double omega = f.positive("omega");
    system = SystemSpec::harmonic(omega);
    out["omega"] = omega;
  } else if (kind == "inverted") {
    const double omega = f.positive("omega_tilde");
    system = SystemSpec::inverted(omega);
    out["omega_tilde"] = omega;
  } else {
    throw SchemaError(join(f.path(), "kind"), "expected one of free, acceleration, harmonic, inverted");
  }
  f.finish();  // a coupling that does not belong to `kind` is reported as unknown
  return system;
}

double default_timescale(const SystemSpec& system, const PacketParams& params) {
  switch (system.kind()) {
    case SystemKind::FreeParticle:
    case SystemKind::UniformAcceleration: return params.spreading_time();
    case SystemKind::Harmonic: return 2.0 * std::numbers::pi / system.omega();
    case SystemKind::Inverted: return 1.0 / system.omega_tilde();
  }
  return 1.0;
}

json resolve_check(const json& raw, const std::string& path, const Scenario& s) {
  Fields f(raw, path);
  const std::string type = f.string("type");
  json out{{"type", type}};
  auto tol = [&](const char* key, double fallback) { out[key] = f.positive(key, fallback); };
  if (type == "agreement") {
    tol("max_abs_dA", 1e-6);
    tol("max_abs_dmod2", 1e-6);
    if (s.methods.size() < 2) throw SchemaError(path, "agreement needs at least two methods");
  } else if (type == "saturation") {
    tol("rel_tolerance", 1e-3);
    const auto kind = s.system.kind();
    if (kind != SystemKind::FreeParticle && kind != SystemKind::Inverted)
      throw SchemaError(path, "saturation applies to the free and inverted systems only");
  } else if (type == "mandelstam") {
    tol("margin_tolerance", 1e-10);
    tol("coefficient_rel_tolerance", 1e-4);
    if (s.system.kind() != SystemKind::FreeParticle) throw SchemaError(path, "mandelstam applies to the free particle");
  } else if (type == "modulus") {
    const std::string quantity = f.string("quantity", "A");
    if (quantity != "A" && quantity != "A_bar") throw SchemaError(join(path, "quantity"), "expected A or A_bar");
    if (quantity == "A_bar" && !s.anticorrelation)
      throw SchemaError(join(path, "quantity"), "A_bar needs \"anticorrelation\": true");
    out["quantity"] = quantity;
    out["t"] = f.number("t");
    out["t_unit"] = f.string("t_unit", "absolute");
    to_absolute_time(out["t"].get<double>(), out["t_unit"].get<std::string>(), s.system, s.params, join(path, "t_unit"));
    out["expected_abs"] = f.number("expected_abs");
    tol("tolerance", 1e-10);
  } else if (type == "revival") {
    if (s.system.kind() != SystemKind::Harmonic) throw SchemaError(path, "revival applies to the harmonic system");
    const auto periods = f.integer("periods", 3);
    if (periods < 1) throw SchemaError(join(path, "periods"), "must be >= 1");
    out["periods"] = periods;
    tol("tolerance", 1e-10);
  } else if (type == "case1_minimum") {
    if (s.system.kind() != SystemKind::Harmonic) throw SchemaError(path, "case1_minimum applies to the harmonic system");
    tol("tolerance", 1e-10);
  } else if (type == "r_inversion") {
    if (s.system.kind() != SystemKind::Harmonic || s.params.x0() != 0.0 || s.params.p0() != 0.0)
      throw SchemaError(path, "r_inversion applies to centered harmonic packets (x0 = p0 = 0)");
    tol("tolerance", 1e-14);
  } else if (type == "return_suppression") {
    if (s.system.kind() != SystemKind::UniformAcceleration || !(s.params.p0() * s.system.force() < 0.0))
      throw SchemaError(path, "return_suppression needs an accelerated packet with p0 and force of opposite sign");
    tol("match_tolerance", 1e-6);
    out["min_ratio"] = f.positive("min_ratio", std::numbers::e);
  } else {
    throw SchemaError(join(path, "type"),
                      "unknown check type (agreement, saturation, mandelstam, modulus, revival, case1_minimum, "
                      "r_inversion, return_suppression)");
  }
  f.finish();
  return out;
}

}  // namespace

double to_absolute_time(double value, const std::string& unit, const SystemSpec& system, const PacketParams& params,
                        const std::string& path) {
  if (unit == "absolute") return value;
  if (unit == "t0") return value * params.spreading_time();
  if (unit == "T_cl") {
    if (system.kind() != SystemKind::Harmonic) throw SchemaError(path, "T_cl is defined for the harmonic system only");
    return value * 2.0 * std::numbers::pi / system.omega();
  }
  if (unit == "1/omega_tilde") {
    if (system.kind() != SystemKind::Inverted)
      throw SchemaError(path, "1/omega_tilde is defined for the inverted system only");
    return value / system.omega_tilde();
  }
  throw SchemaError(path, "unknown time unit (absolute, t0, T_cl, 1/omega_tilde)");
}

Scenario parse_scenario(const json& config, const std::string& path) {
  Fields root(config, path);
  json resolved = json::object();
  resolved["schema_version"] = kSchemaVersion;
  if (root.has("schema_version")) {
    const auto version = root.integer("schema_version", kSchemaVersion);
    if (version != kSchemaVersion)
      throw SchemaError(join(path, "schema_version"), "unsupported version " + std::to_string(version));
  } else if (path.empty()) {
    root.raw("schema_version");
  }

  const std::string name = root.string("name");
  if (name.empty() || !std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
      }))
    throw SchemaError(join(path, "name"), "use letters, digits, '-', '_' or '.'");
  resolved["name"] = name;
  const std::string description = root.string("description", "");
  resolved["description"] = description;

  json system_json = json::object();
  const SystemSpec system = parse_system(root.object("system"), system_json);
  resolved["system"] = system_json;

  Fields units = root.object_or_empty("units");
  PhysicalConstants constants{units.positive("hbar", 1.0), units.positive("mass", 1.0)};
  units.finish();
  resolved["units"] = {{"hbar", constants.hbar}, {"mass", constants.mass}};

  Fields packet = root.object_or_empty("packet");
  const double alpha = packet.positive("alpha", 1.0);
  const double x0 = packet.number("x0", 0.0);
  const double p0 = packet.number("p0", 0.0);
  packet.finish();
  resolved["packet"] = {{"alpha", alpha}, {"x0", x0}, {"p0", p0}};

  Scenario s{name,
             description,
             system,
             PacketParams(alpha, x0, p0, constants),
             0.0,
             0,
             {},
             false,
             Grid::periodic(-1.0, 1.0, 2),
             0.0,
             0.0,
             0,
             0.0,
             {},
             {},
             {}};

  Fields time = root.object("time");
  const double t_max_raw = time.positive("t_max");
  const std::string unit = time.string("unit", "absolute");
  s.t_max = to_absolute_time(t_max_raw, unit, system, s.params, join(join(path, "time"), "unit"));
  const auto n_samples = time.integer("n_samples", 201);
  if (n_samples < 1) throw SchemaError(join(join(path, "time"), "n_samples"), "must be >= 1");
  s.n_samples = static_cast<std::size_t>(n_samples);
  time.finish();
  resolved["time"] = {{"t_max", t_max_raw}, {"unit", unit}, {"n_samples", n_samples}};

  const json& methods = root.raw("methods");
  const std::string methods_path = join(path, "methods");
  if (!methods.is_array()) throw SchemaError(methods_path, "expected an array");
  if (methods.empty()) throw SchemaError(methods_path, "at least one method is required");
  for (std::size_t i = 0; i < methods.size(); ++i) {
    const std::string item_path = methods_path + "[" + std::to_string(i) + "]";
    if (!methods[i].is_string()) throw SchemaError(item_path, "expected a string");
    const auto m = methods[i].get<std::string>();
    Method method;
    if (m == "analytic") method = Method::Analytic;
    else if (m == "split_operator") method = Method::SplitOperator;
    else if (m == "spectral") method = Method::Spectral;
    else throw SchemaError(item_path, "expected analytic, split_operator or spectral");
    if (s.has_method(method)) throw SchemaError(item_path, "duplicate method");
    if (method == Method::Spectral && system.kind() != SystemKind::Harmonic)
      throw SchemaError(item_path, "the spectral method needs the harmonic system");
    s.methods.push_back(method);
  }
  resolved["methods"] = json::array();
  for (auto m : s.methods) resolved["methods"].push_back(to_string(m));

  s.anticorrelation = root.boolean("anticorrelation", false);
  if (s.anticorrelation && system.kind() != SystemKind::Harmonic)
    throw SchemaError(join(path, "anticorrelation"), "anticorrelation needs the harmonic system");
  resolved["anticorrelation"] = s.anticorrelation;

  if (s.has_method(Method::Analytic)) {
    try {
      analytic::ClosedFormSampler probe(system, s.params, s.anticorrelation);
    } catch (const UnsupportedCaseError& e) {
      throw SchemaError(methods_path, std::string("no-closed-form: ") + e.what());
    }
  }

  Fields grid = root.object_or_empty("grid");
  const double gmin = grid.number("min", -40.0);
  const double gmax = grid.number("max", 40.0);
  const auto npts = grid.integer("n_points", 4096);
  grid.finish();
  if (!(gmax > gmin)) throw SchemaError(join(path, "grid"), "max must exceed min");
  if (npts < 2 || !is_power_of_two(static_cast<std::size_t>(npts)))
    throw SchemaError(join(join(path, "grid"), "n_points"), "must be a power of two");
  s.grid = Grid::periodic(gmin, gmax, static_cast<std::size_t>(npts));
  if (s.anticorrelation && !s.grid.is_symmetric())
    throw SchemaError(join(path, "grid"), "anticorrelation needs a grid symmetric about 0");
  resolved["grid"] = {{"min", gmin}, {"max", gmax}, {"n_points", npts}};

  Fields prop = root.object_or_empty("propagator");
  s.max_dt = prop.positive("dt", default_timescale(system, s.params) / 2000.0);
  s.edge_tolerance = prop.positive("edge_tolerance", kDefaultBoundaryTolerance);
  prop.finish();
  resolved["propagator"] = {{"dt", s.max_dt}, {"edge_tolerance", s.edge_tolerance}};

  Fields spectral = root.object_or_empty("spectral");
  const auto n_max = spectral.integer("n_max", 80);
  if (n_max < 0) throw SchemaError(join(join(path, "spectral"), "n_max"), "must be >= 0");
  s.n_max = static_cast<int>(n_max);
  s.tail_tolerance = spectral.positive("tail_tolerance", 1e-10);
  spectral.finish();
  resolved["spectral"] = {{"n_max", n_max}, {"tail_tolerance", s.tail_tolerance}};

  const std::string outputs_path = join(path, "outputs");
  json outputs = json::array({"series_csv", "argand_svg", "report_json"});
  if (root.has("outputs")) outputs = root.raw("outputs");
  if (!outputs.is_array()) throw SchemaError(outputs_path, "expected an array");
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    const std::string item_path = outputs_path + "[" + std::to_string(i) + "]";
    if (!outputs[i].is_string()) throw SchemaError(item_path, "expected a string");
    const auto o = outputs[i].get<std::string>();
    Output output;
    if (o == "series_csv") output = Output::SeriesCsv;
    else if (o == "argand_svg") output = Output::ArgandSvg;
    else if (o == "report_json") output = Output::ReportJson;
    else throw SchemaError(item_path, "expected series_csv, argand_svg or report_json");
    if (!s.wants(output)) s.outputs.push_back(output);
  }
  resolved["outputs"] = json::array();
  for (auto o : s.outputs) resolved["outputs"].push_back(to_string(o));

  const std::string checks_path = join(path, "checks");
  json checks = json::array();
  if (root.has("checks")) {
    checks = root.raw("checks");
    if (!checks.is_array()) throw SchemaError(checks_path, "expected an array");
  } else {
    if (s.methods.size() > 1) checks.push_back({{"type", "agreement"}});
  }
  resolved["checks"] = json::array();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    s.checks.push_back(resolve_check(checks[i], checks_path + "[" + std::to_string(i) + "]", s));
    resolved["checks"].push_back(s.checks.back());
  }

  root.finish();
  s.resolved = std::move(resolved);
  return s;
}

std::vector<Scenario> parse_config(const json& config) {
  if (!config.is_object()) throw SchemaError("<root>", "expected an object");
  if (!config.contains("scenarios")) return {parse_scenario(config)};
  Fields root(config, "");
  const auto version = root.integer("schema_version", -1);
  if (version != kSchemaVersion) throw SchemaError("schema_version", "required and must equal 1");
  const json& list = root.raw("scenarios");
  root.finish();
  if (!list.is_array() || list.empty()) throw SchemaError("scenarios", "expected a non-empty array");
  std::vector<Scenario> out;
  std::set<std::string> names;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(parse_scenario(list[i], "scenarios[" + std::to_string(i) + "]"));
    if (!names.insert(out.back().name).second)
      throw SchemaError("scenarios[" + std::to_string(i) + "].name", "duplicate scenario name");
  }
  return out;
}

}  // namespace wavepack::cli
