#include "deltadg/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace deltadg {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw std::invalid_argument("config: \"" + key + "\" " + what);
}

template <typename T>
T get(const json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(key, std::string("has the wrong type (") + e.what() + ")");
  }
}

template <typename E>
E parse_enum(const json& j, const std::string& key,
             std::initializer_list<std::pair<const char*, E>> options) {
  const std::string v = get<std::string>(j, key);
  std::string allowed;
  for (const auto& [name, value] : options) {
    if (v == name) return value;
    allowed += allowed.empty() ? name : std::string(", ") + name;
  }
  fail(key, "must be one of {" + allowed + "}, got \"" + v + "\"");
}

const char* equation_name(Equation e) { return e == Equation::kWave ? "wave" : "advection"; }
const char* direction_name(Direction d) { return d == Direction::kRightMoving ? "right" : "left"; }
const char* mass_name(MassMatrix m) { return m == MassMatrix::kExact ? "exact" : "lumped"; }
const char* initial_name(InitialData d) { return d == InitialData::kExact ? "exact" : "trivial"; }
const char* mode_name(ExactMode m) { return m == ExactMode::kGlobal ? "global" : "causal"; }

const std::set<std::string> kTopKeys = {
    "schema_version", "name",   "equation", "direction",    "domain",  "elements",
    "breakpoints",    "degree", "t_final",  "cfl",          "dt_max",  "mass",
    "source",         "potential", "initial_data", "exact", "turnon",  "snapshots",
    "sweep",          "query"};

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) fail(where, "must be an object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) fail(where.empty() ? key : where + "." + key, "is not a known key");
}

}  // namespace

Mesh RunConfig::mesh() const {
  if (!breakpoints.empty()) return Mesh::from_breakpoints(breakpoints);
  return Mesh::uniform(a, b, elements);
}

json RunConfig::to_json() const {
  json j;
  j["schema_version"] = kConfigSchemaVersion;
  j["name"] = name;
  j["equation"] = equation_name(equation);
  j["direction"] = direction_name(direction);
  j["domain"] = {a, b};
  j["elements"] = elements;
  j["breakpoints"] = breakpoints;
  j["degree"] = degree;
  j["t_final"] = t_final;
  j["cfl"] = cfl;
  j["dt_max"] = dt_max;
  j["mass"] = mass_name(mass);
  j["source"] = source.to_json();
  j["potential"] = potential.to_json();
  j["initial_data"] = initial_name(initial_data);
  if (exact) {
    j["exact"] = {{"s", exact->s},
                  {"amplitude", exact->amplitude.to_json()},
                  {"mode", mode_name(exact->mode)},
                  {"quadrature", exact->allow_quadrature}};
  } else {
    j["exact"] = nullptr;
  }
  if (turnon)
    j["turnon"] = {{"tau", turnon->tau}, {"rate", turnon->rate}, {"apply_to_g", turnon->apply_to_g}};
  else
    j["turnon"] = nullptr;
  j["snapshots"] = snapshots;
  j["sweep"] = {{"mode", sweep.mode}, {"degrees", sweep.degrees}, {"elements", sweep.elements}};
  j["query"] = {{"t", query.t}, {"x", query.x}, {"side", query.side == Side::kLeft ? "left" : "right"}};
  return j;
}

RunConfig RunConfig::from_json(const json& j) {
  check_keys(j, kTopKeys, "");
  RunConfig c;
  if (j.contains("schema_version") && get<int>(j, "schema_version") != kConfigSchemaVersion)
    fail("schema_version", "must be " + std::to_string(kConfigSchemaVersion));
  if (j.contains("name")) {
    c.name = get<std::string>(j, "name");
    if (c.name.empty() || c.name.find('/') != std::string::npos || c.name == "." || c.name == "..")
      fail("name", "must be a non-empty directory name without '/'");
  }
  if (j.contains("equation"))
    c.equation = parse_enum<Equation>(j, "equation",
                                      {{"wave", Equation::kWave}, {"advection", Equation::kAdvection}});
  if (j.contains("direction"))
    c.direction = parse_enum<Direction>(
        j, "direction", {{"right", Direction::kRightMoving}, {"left", Direction::kLeftMoving}});
  if (j.contains("domain")) {
    const auto d = get<std::vector<double>>(j, "domain");
    if (d.size() != 2) fail("domain", "must be [a, b]");
    c.a = d[0];
    c.b = d[1];
  }
  if (j.contains("elements")) c.elements = get<int>(j, "elements");
  if (j.contains("breakpoints")) c.breakpoints = get<std::vector<double>>(j, "breakpoints");
  if (j.contains("degree")) c.degree = get<int>(j, "degree");
  if (c.degree < 1 || c.degree > ElementBasis::kMaxDegree)
    fail("degree", "must be in [1, " + std::to_string(ElementBasis::kMaxDegree) + "]");
  if (j.contains("t_final")) c.t_final = get<double>(j, "t_final");
  if (!(c.t_final >= 0.0)) fail("t_final", "must be >= 0");
  if (j.contains("cfl")) c.cfl = get<double>(j, "cfl");
  if (!(c.cfl > 0.0)) fail("cfl", "must be positive");
  if (j.contains("dt_max")) c.dt_max = get<double>(j, "dt_max");
  if (!(c.dt_max >= 0.0)) fail("dt_max", "must be >= 0");
  if (j.contains("mass"))
    c.mass = parse_enum<MassMatrix>(j, "mass",
                                    {{"exact", MassMatrix::kExact}, {"lumped", MassMatrix::kLumped}});
  try {
    if (j.contains("source")) c.source = SourceSpec::from_json(j.at("source"));
    if (j.contains("potential")) c.potential = Potential::from_json(j.at("potential"));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: malformed source or potential (") + e.what() + ")");
  }
  if (j.contains("initial_data"))
    c.initial_data = parse_enum<InitialData>(
        j, "initial_data", {{"exact", InitialData::kExact}, {"trivial", InitialData::kTrivial}});

  // Mesh rules are the mesh's own: building it validates the breakpoint at 0.
  try {
    (void)c.mesh();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }

  if (j.contains("turnon") && !j.at("turnon").is_null()) {
    const json& t = j.at("turnon");
    check_keys(t, {"tau", "rate", "apply_to_g"}, "turnon");
    TurnOn on;
    if (t.contains("tau")) on.tau = get<double>(t, "tau");
    if (t.contains("rate")) on.rate = get<double>(t, "rate");
    if (t.contains("apply_to_g")) on.apply_to_g = get<bool>(t, "apply_to_g");
    if (!(on.tau > 0.0)) fail("turnon.tau", "must be positive");
    if (!(on.rate > 0.0)) fail("turnon.rate", "must be positive");
    c.turnon = on;
  }

  if (j.contains("snapshots")) c.snapshots = get<std::vector<double>>(j, "snapshots");
  for (double s : c.snapshots)
    if (!(s >= 0.0 && s <= c.t_final)) fail("snapshots", "entries must lie in [0, t_final]");

  if (c.equation == Equation::kAdvection) {
    if (!c.potential.is_zero()) fail("potential", "is not supported for advection");
    if (c.source.max_order() > 1) fail("source", "orders above 1 are not supported for advection");
  }

  // Exact problem: explicit object, explicit null (none), or derived from a
  // single-term source without potential.
  const bool derivable = c.equation == Equation::kWave && c.source.terms().size() == 1 &&
                         c.potential.is_zero();
  if (!j.contains("exact") || j.at("exact").is_object()) {
    const json e = j.contains("exact") ? j.at("exact") : json::object();
    check_keys(e, {"s", "amplitude", "mode", "quadrature"}, "exact");
    if (derivable || e.contains("s")) {
      if (!c.potential.is_zero()) fail("exact", "is only available without a potential");
      ExactProblem p;
      p.s = e.contains("s") ? get<int>(e, "s") : c.source.terms().front().order;
      try {
        p.amplitude = e.contains("amplitude") ? TimeFunction::from_json(e.at("amplitude"))
                                              : c.source.terms().front().amplitude;
      } catch (const std::exception& ex) {
        throw std::invalid_argument(std::string("config: exact.amplitude: ") + ex.what());
      }
      if (e.contains("mode"))
        p.mode = parse_enum<ExactMode>(e, "mode",
                                       {{"global", ExactMode::kGlobal}, {"causal", ExactMode::kCausal}});
      if (e.contains("quadrature")) p.allow_quadrature = get<bool>(e, "quadrature");
      if (p.s < 0 || p.s > 4) fail("exact.s", "must be in [0, 4]");
      if (has_closed_form(p) || p.allow_quadrature) c.exact = p;
      else if (j.contains("exact"))
        fail("exact", "has no closed form; set exact.quadrature to true");
    } else if (j.contains("exact")) {
      fail("exact.s", "is required when the source is not a single term");
    }
  } else if (!j.at("exact").is_null()) {
    fail("exact", "must be an object or null");
  }
  if (c.equation == Equation::kWave && c.initial_data == InitialData::kExact && !c.exact &&
      !c.source.empty())
    fail("initial_data", "\"exact\" needs an exact problem; use \"trivial\"");

  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    check_keys(s, {"mode", "degrees", "elements"}, "sweep");
    if (s.contains("mode")) c.sweep.mode = get<std::string>(s, "mode");
    if (c.sweep.mode != "h" && c.sweep.mode != "p") fail("sweep.mode", "must be \"h\" or \"p\"");
    if (s.contains("degrees")) c.sweep.degrees = get<std::vector<int>>(s, "degrees");
    if (s.contains("elements")) c.sweep.elements = get<std::vector<int>>(s, "elements");
    for (int k : c.sweep.degrees)
      if (k < 1 || k > ElementBasis::kMaxDegree) fail("sweep.degrees", "entries must be in [1, 32]");
    for (int e : c.sweep.elements)
      if (e < 1) fail("sweep.elements", "entries must be positive");
  }

  if (j.contains("query")) {
    const json& q = j.at("query");
    check_keys(q, {"t", "x", "side"}, "query");
    if (q.contains("t")) c.query.t = get<double>(q, "t");
    if (q.contains("x")) c.query.x = get<double>(q, "x");
    if (q.contains("side"))
      c.query.side = parse_enum<Side>(q, "side", {{"left", Side::kLeft}, {"right", Side::kRight}});
    if (!(c.query.t >= 0.0)) fail("query.t", "must be >= 0");
  }
  return c;
}

json apply_overrides(json doc, const std::vector<std::string>& sets) {
  for (const std::string& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("--set expects key=value, got \"" + s + "\"");
    const std::string key = s.substr(0, eq);
    const std::string raw = s.substr(eq + 1);
    std::string pointer;
    std::stringstream parts(key);
    for (std::string part; std::getline(parts, part, '.');) {
      if (part.empty()) throw std::invalid_argument("--set: empty path component in \"" + key + "\"");
      pointer += "/" + part;
    }
    json value = json::parse(raw, nullptr, /*allow_exceptions=*/false);
    if (value.is_discarded()) value = raw;
    try {
      doc[json::json_pointer(pointer)] = value;
    } catch (const json::exception& e) {
      throw std::invalid_argument("--set " + key + ": " + e.what());
    }
  }
  return doc;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& sets) {
  json doc = json::object();
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open \"" + path + "\"");
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument("config: \"" + path + "\" is not valid JSON (" + e.what() + ")");
    }
  }
  return RunConfig::from_json(apply_overrides(std::move(doc), sets));
}

}  // namespace deltadg
