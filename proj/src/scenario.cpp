#include "gravdec/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "gravdec/constants.hpp"
#include "gravdec/errors.hpp"
#include "gravdec/kernels.hpp"

namespace gravdec {

namespace {

// Runs fn(i) for i in [0, n) on up to thread_count() workers; results are
// written by index, so assembly order never depends on scheduling.
template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double number_at(const json& obj, const char* key, const std::string& path, double fallback,
                 bool required = false) {
  if (!obj.contains(key)) {
    if (required) throw InputError(path + "." + key, "missing required field");
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number()) throw InputError(path + "." + key, "expected a number");
  return v.get<double>();
}

void require_object(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(key, "missing section");
  if (!doc.at(key).is_object()) throw InputError(key, "expected an object");
}

void reject_unknown(const json& obj, const std::string& section, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw InputError(section.empty() ? key : section + "." + key, "unknown key");
  }
}

std::string regime_of(double x) {
  if (x < 0.1) return "short";
  if (x > 10.0) return "long";
  return "crossover";
}

double lambda_a_frequency(const Scenario& s) { return state_energy_scale(s.sys, s.state) / constants::hbar; }

json time_entry(const std::function<DecoherenceTime()>& fn) {
  try {
    const DecoherenceTime d = fn();
    json e;
    e["seconds"] = std::isfinite(d.seconds) ? json(d.seconds) : json("inf");
    e["valid"] = d.valid;
    e["decoheres"] = d.decoheres;
    e["state_factor"] = d.state_factor;
    e["regime"] = std::string(to_string(d.regime));
    return e;
  } catch (const DomainError& err) {
    return json{{"error", err.what()}};
  }
}

std::string csv_cell(const json& v) {
  if (v.is_number()) return format_double(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  return "";
}

}  // namespace

void GridSpec::validate() const {
  if (n_points < 2) throw InputError("grid.n_points", "need at least 2 points");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InputError("grid.t_max", "must be positive and finite");
  if (!(t_min < t_max)) throw InputError("grid.t_min", "must be below t_max");
  if (spacing == Spacing::log && !(t_min > 0.0)) throw InputError("grid.t_min", "log grids need t_min > 0");
  if (spacing == Spacing::linear && !(t_min >= 0.0)) throw InputError("grid.t_min", "must be non-negative");
}

std::vector<double> GridSpec::times() const {
  validate();
  std::vector<double> out(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double f = static_cast<double>(i) / (n_points - 1);
    if (spacing == Spacing::log) {
      out[i] = std::exp(std::log(t_min) + f * (std::log(t_max) - std::log(t_min)));
    } else {
      out[i] = t_min + f * (t_max - t_min);
    }
  }
  out.front() = t_min;
  out.back() = t_max;
  return out;
}

void Scenario::validate() const {
  grid.validate();
  try {
    state.validate();
  } catch (const DomainError& e) {
    throw InputError("state", e.what());
  }
  try {
    sys.validate();
  } catch (const DomainError& e) {
    throw InputError("system", e.what());
  }
  try {
    source.validate();
  } catch (const DomainError& e) {
    throw InputError("source", e.what());
  }
  if (const auto* c2 = std::get_if<Config2>(&config)) {
    if (!(std::abs(c2->v1) < constants::c) || !(std::abs(c2->v2) < constants::c)) {
      throw InputError("configuration", "speeds must be below c");
    }
  }
}

NewtonianSource source_preset(const std::string& name) {
  if (name == "earth") return NewtonianSource::earth();
  if (name == "sun") return NewtonianSource::sun();
  if (name == "neutron_star") return NewtonianSource::neutron_star();
  if (name == "none") return NewtonianSource::none();
  throw InputError("source", "unknown preset '" + name + "'");
}

Scenario molecule_scenario() {
  Scenario s;
  s.name = "molecule";
  s.sys = SystemParams::with_xi_equal_l0(1e-22, 1e-6 * constants::c, 1e-9, 1.0, 1e4);
  s.source_preset = "none";
  s.source = NewtonianSource::none();
  s.grid = {GridSpec::Spacing::log, 1e-18, 1e6, 121};
  return s;
}

Scenario scenario_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("", "scenario must be a JSON object");
  reject_unknown(doc, "", {"name", "state", "system", "source", "configuration", "grid"});
  Scenario s;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw InputError("name", "expected a string");
    s.name = doc.at("name").get<std::string>();
  }

  require_object(doc, "state");
  const json& st = doc.at("state");
  reject_unknown(st, "state", {"kind", "T_g", "alpha", "r"});
  if (!st.contains("kind") || !st.at("kind").is_string()) throw InputError("state.kind", "expected a string");
  s.state.kind = parse_state_kind(st.at("kind").get<std::string>());
  s.state.T_g = number_at(st, "T_g", "state", 0.0, s.state.kind == StateKind::thermal);
  s.state.alpha = number_at(st, "alpha", "state", 0.0, s.state.kind == StateKind::coherent);
  s.state.r = number_at(st, "r", "state", 0.0, s.state.kind == StateKind::squeezed);

  require_object(doc, "system");
  const json& sy = doc.at("system");
  reject_unknown(sy, "system", {"m", "v", "v_over_c", "L0", "Xi", "eta", "T_int"});
  s.sys.m = number_at(sy, "m", "system", 0.0, true);
  if (sy.contains("v_over_c")) {
    s.sys.v = number_at(sy, "v_over_c", "system", 0.0) * constants::c;
  } else {
    s.sys.v = number_at(sy, "v", "system", 0.0, true);
  }
  s.sys.L0 = number_at(sy, "L0", "system", 0.0, true);
  s.sys.Xi = number_at(sy, "Xi", "system", s.sys.L0);
  s.sys.eta = number_at(sy, "eta", "system", 0.0);
  s.sys.T_int = number_at(sy, "T_int", "system", 0.0, true);

  if (!doc.contains("source")) {
    s.source_preset = "none";
    s.source = NewtonianSource::none();
  } else if (doc.at("source").is_string()) {
    s.source_preset = doc.at("source").get<std::string>();
    s.source = source_preset(s.source_preset);
  } else if (doc.at("source").is_object()) {
    const json& so = doc.at("source");
    reject_unknown(so, "source", {"preset", "M", "R"});
    if (so.contains("preset")) {
      if (!so.at("preset").is_string()) throw InputError("source.preset", "expected a string");
      s.source_preset = so.at("preset").get<std::string>();
      s.source = source_preset(s.source_preset);
    } else {
      s.source_preset = "custom";
      s.source.M = number_at(so, "M", "source", 0.0, true);
      s.source.R = number_at(so, "R", "source", 1.0, true);
    }
  } else {
    throw InputError("source", "expected a preset name or an object");
  }

  if (doc.contains("configuration")) {
    const json& c = doc.at("configuration");
    if (!c.is_object()) throw InputError("configuration", "expected an object");
    reject_unknown(c, "configuration", {"type", "v1", "v2"});
    const std::string type = c.value("type", std::string("config1"));
    if (type == "config1") {
      s.config = Config1{};
    } else if (type == "config2") {
      s.config = Config2{number_at(c, "v1", "configuration", 0.0, true), number_at(c, "v2", "configuration", 0.0, true)};
    } else {
      throw InputError("configuration.type", "expected 'config1' or 'config2'");
    }
  }

  if (doc.contains("grid")) {
    const json& g = doc.at("grid");
    if (!g.is_object()) throw InputError("grid", "expected an object");
    reject_unknown(g, "grid", {"spacing", "t_min", "t_max", "n_points"});
    const std::string spacing = g.value("spacing", std::string("log"));
    if (spacing == "log") {
      s.grid.spacing = GridSpec::Spacing::log;
    } else if (spacing == "linear") {
      s.grid.spacing = GridSpec::Spacing::linear;
    } else {
      throw InputError("grid.spacing", "expected 'log' or 'linear'");
    }
    s.grid.t_min = number_at(g, "t_min", "grid", s.grid.t_min);
    s.grid.t_max = number_at(g, "t_max", "grid", s.grid.t_max);
    const double n = number_at(g, "n_points", "grid", s.grid.n_points);
    if (n != std::floor(n) || n > 1e7) throw InputError("grid.n_points", "expected an integer");
    s.grid.n_points = static_cast<int>(n);
  }
  s.validate();
  return s;
}

json scenario_to_json(const Scenario& s) {
  json doc;
  doc["name"] = s.name;
  doc["state"] = {{"kind", std::string(to_string(s.state.kind))}, {"T_g", s.state.T_g}, {"alpha", s.state.alpha},
                  {"r", s.state.r}};
  doc["system"] = {{"m", s.sys.m},   {"v", s.sys.v},     {"Xi", s.sys.Xi},
                   {"L0", s.sys.L0}, {"eta", s.sys.eta}, {"T_int", s.sys.T_int}};
  if (s.source_preset == "custom") {
    doc["source"] = {{"M", s.source.M}, {"R", s.source.R}};
  } else {
    doc["source"] = {{"preset", s.source_preset}, {"M", s.source.M}, {"R", s.source.R}};
  }
  if (const auto* c2 = std::get_if<Config2>(&s.config)) {
    doc["configuration"] = {{"type", "config2"}, {"v1", c2->v1}, {"v2", c2->v2}};
  } else {
    doc["configuration"] = {{"type", "config1"}};
  }
  doc["grid"] = {{"spacing", s.grid.spacing == GridSpec::Spacing::log ? "log" : "linear"},
                 {"t_min", s.grid.t_min},
                 {"t_max", s.grid.t_max},
                 {"n_points", s.grid.n_points}};
  return doc;
}

void apply_override(json& doc, const std::string& dotted_path, const std::string& value) {
  if (dotted_path.empty()) throw InputError("", "empty override path");
  std::vector<std::string> parts;
  std::stringstream ss(dotted_path);
  for (std::string part; std::getline(ss, part, '.');) {
    if (part.empty()) throw InputError(dotted_path, "malformed path");
    parts.push_back(part);
  }
  json* node = &doc;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (node->contains(parts[i]) && (*node)[parts[i]].is_string() && parts[i] == "source") {
      // A preset string becomes an object so that M or R can be set on it.
      const std::string preset = (*node)[parts[i]].get<std::string>();
      const NewtonianSource src = source_preset(preset);
      (*node)[parts[i]] = json{{"M", src.M}, {"R", src.R}};
    }
    if (!node->contains(parts[i])) (*node)[parts[i]] = json::object();
    node = &(*node)[parts[i]];
    if (!node->is_object()) throw InputError(dotted_path, "'" + parts[i] + "' is not an object");
  }
  const std::string& leaf = parts.back();
  if (parts.size() == 1 && leaf == "source") {
    doc["source"] = value;
    return;
  }
  if (node->contains(leaf) && (*node)[leaf].is_object()) throw InputError(dotted_path, "path is not a leaf");
  if (parts.size() == 2 && parts.front() == "source" && (leaf == "M" || leaf == "R")) {
    node->erase("preset");
  }
  char* end = nullptr;
  const double number = std::strtod(value.c_str(), &end);
  if (!value.empty() && end == value.c_str() + value.size()) {
    (*node)[leaf] = number;
  } else if (value == "true" || value == "false") {
    (*node)[leaf] = value == "true";
  } else {
    (*node)[leaf] = value;
  }
}

std::string fingerprint(const Scenario& scenario) {
  const std::string canonical = scenario_to_json(scenario).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int thread_count() {
  if (const char* env = std::getenv("GRAVDEC_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

DecoherenceCurve run_eval(const Scenario& scenario, CurveMethod method, const QuadratureSpec& spec) {
  scenario.validate();
  const std::vector<double> times = scenario.grid.times();
  DecoherenceCurve curve;
  curve.fingerprint = fingerprint(scenario);
  curve.method = method;
  curve.rows.resize(times.size());
  const double nu_a = lambda_a_frequency(scenario);
  parallel_for(times.size(), [&](std::size_t i) {
    CurveRow& row = curve.rows[i];
    row.t_seconds = times[i];
    row.x = nu_a * times[i];
    row.regime = regime_of(row.x);
    if (method == CurveMethod::closed_form) {
      row.gamma = gamma(scenario.state, scenario.sys, scenario.source, scenario.config, times[i]);
    } else {
      PathModel paths;
      if (const auto* c2 = std::get_if<Config2>(&scenario.config)) {
        paths = configuration2_paths(c2->v1, c2->v2, times[i]);
      } else {
        paths = configuration1_paths(scenario.sys.Xi, scenario.sys.v, times[i]);
      }
      row.gamma = gamma_by_quadrature(paths, scenario.state, scenario.sys, scenario.source, spec).value;
    }
    if (!std::isfinite(row.gamma)) throw DomainError("non-finite Gamma at t = " + format_double(times[i]));
  });
  return curve;
}

std::string to_csv(const DecoherenceCurve& curve) {
  std::string out = "t_seconds,x,gamma,regime,method\n";
  const char* method = curve.method == CurveMethod::closed_form ? "closed_form" : "oracle";
  for (const CurveRow& row : curve.rows) {
    out += format_double(row.t_seconds);
    out += ',';
    out += format_double(row.x);
    out += ',';
    out += format_double(row.gamma);
    out += ',';
    out += row.regime;
    out += ',';
    out += method;
    out += '\n';
  }
  return out;
}

json run_tables() {
  json report;
  json cut = json::array();
  for (double L0 : {1e-6, 1e3, 1e9}) {
    const double nu = cutoff_frequency(L0);
    cut.push_back({{"L0_m", L0}, {"cutoff_sq_per_s2", nu * nu}, {"t_max_s", 1.0 / nu}});
  }
  report["cutoff"] = cut;
  json src = json::array();
  for (const char* name : {"sun", "earth", "neutron_star"}) {
    const NewtonianSource s = source_preset(name);
    src.push_back({{"source", name},
                   {"M_kg", s.M},
                   {"R_m", s.R},
                   {"GM_over_R3_per_s2", s.curvature_frequency_squared()},
                   {"perturbative_warning", std::string(name) == "neutron_star"}});
  }
  report["sources"] = src;
  json rows = json::array();
  bool all = true;
  for (const AsymptoticCheck& c : check_profile_asymptotics()) {
    rows.push_back({{"state", std::string(to_string(c.kind))},
                    {"piece", static_cast<int>(c.piece)},
                    {"small_x", c.small_x},
                    {"small_ratio", c.small_ratio},
                    {"small_ok", c.small_ok},
                    {"large_x", c.large_x},
                    {"large_value", c.large_value},
                    {"large_expected", c.large_expected},
                    {"large_slack", c.large_slack},
                    {"large_ok", c.large_ok}});
    all = all && c.small_ok && c.large_ok;
  }
  report["asymptotics"] = rows;
  report["all_pass"] = all;
  return report;
}

json run_dec_times(const Scenario& scenario) {
  scenario.validate();
  const auto& st = scenario.state;
  const auto& sys = scenario.sys;
  const auto& src = scenario.source;
  json r;
  r["fingerprint"] = fingerprint(scenario);
  r["state"] = std::string(to_string(st.kind));
  r["short_time"] = time_entry([&] { return dec_time_short(st, sys, src); });
  if (sys.eta > 0.0) {
    r["long_time"] = time_entry([&] { return dec_time_long(st, sys, src); });
  } else {
    r["long_time"] = json{{"error", "no channel: eta = 0"}};
  }
  r["numeric_root"] = time_entry([&] { return dec_time_numeric(st, sys, src, scenario.config); });
  r["saturation_value"] = saturation_value(sys, src);
  r["delta_omega"] = delta_omega(sys, src);
  try {
    const double p = momentum_threshold(sys, src);
    r["momentum_threshold"] = p;
    r["mass_threshold_at_c"] = p / constants::c;
    r["decoherence_condition"] = sys.m * sys.v > 10.0 * p;
  } catch (const DomainError& e) {
    r["momentum_threshold"] = json{{"error", e.what()}};
  }
  r["short_time_state_factor"] = std::exp(log_short_time_state_factor(st, sys, src));
  r["long_time_state_factor"] = std::exp(log_long_time_state_factor(st, sys, src));
  r["log10_long_time_state_factor"] = log_long_time_state_factor(st, sys, src) / std::log(10.0);
  if (sys.eta == 0.0 && src.M > 0.0 && (st.kind == StateKind::vacuum || st.kind == StateKind::thermal)) {
    const LogTime lt = recoherence_threshold(st, sys, src);
    r["recoherence_log10_seconds"] = lt.log10_seconds();
  }
  r["perturbative_warning"] = scenario.perturbative_warning();
  r["relativistic_warning"] = sys.relativistic_warning();
  return r;
}

SweepTable run_sweep(const Scenario& scenario, const std::string& path, const std::vector<double>& values) {
  const json base = scenario_to_json(scenario);
  {
    // The path must address an existing numeric leaf.
    const json* node = &base;
    std::stringstream ss(path);
    for (std::string part; std::getline(ss, part, '.');) {
      if (!node->is_object() || !node->contains(part)) throw InputError(path, "unknown scenario field");
      node = &node->at(part);
    }
    if (!node->is_number()) throw InputError(path, "sweep path must address a numeric field");
  }
  SweepTable table;
  table.header = {"value",           "cutoff_sq_per_s2", "short_time_s",        "short_valid",
                  "long_time_s",     "numeric_root_s",   "long_state_factor",   "saturation_value"};
  table.rows.resize(values.size());
  parallel_for(values.size(), [&](std::size_t i) {
    json doc = base;
    apply_override(doc, path, format_double(values[i]));
    const Scenario s = scenario_from_json(doc);
    const json d = run_dec_times(s);
    const double nu = cutoff_frequency(s.sys.L0);
    auto seconds = [](const json& e) { return e.contains("seconds") ? csv_cell(e["seconds"]) : std::string("none"); };
    table.rows[i] = {format_double(values[i]),
                     format_double(nu * nu),
                     seconds(d["short_time"]),
                     d["short_time"].contains("valid") ? csv_cell(d["short_time"]["valid"]) : "false",
                     seconds(d["long_time"]),
                     seconds(d["numeric_root"]),
                     csv_cell(d["long_time_state_factor"]),
                     csv_cell(d["saturation_value"])};
  });
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) out += (i ? "," : "") + table.header[i];
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += '\n';
  }
  return out;
}

json run_oracle_check(const Scenario& scenario, const QuadratureSpec& spec, double threshold,
                      const std::vector<double>& times, double max_u) {
  scenario.validate();
  std::vector<double> ts = times;
  if (ts.empty()) {
    const double nu_a = lambda_a_frequency(scenario);
    for (double x : {0.5, 2.0, 10.0}) ts.push_back(x / nu_a);
  }
  const double nu = cutoff_frequency(scenario.sys.L0);
  json points = json::array();
  std::vector<json> results(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) {
    const double t = ts[i];
    json p{{"t_seconds", t}, {"u", nu * t}};
    if (nu * t > max_u) {
      p["status"] = "skipped";
      results[i] = p;
      return;
    }
    const double closed = gamma(scenario.state, scenario.sys, scenario.source, scenario.config, t);
    PathModel paths;
    if (const auto* c2 = std::get_if<Config2>(&scenario.config)) {
      paths = configuration2_paths(c2->v1, c2->v2, t);
    } else {
      paths = configuration1_paths(scenario.sys.Xi, scenario.sys.v, t);
    }
    p["closed_form"] = closed;
    try {
      const QuadratureResult q = gamma_by_quadrature(paths, scenario.state, scenario.sys, scenario.source, spec);
      const double scale = std::max({std::abs(closed), std::abs(q.value), std::numeric_limits<double>::min()});
      const double dev = closed == q.value ? 0.0 : std::abs(closed - q.value) / scale;
      p["oracle"] = q.value;
      p["oracle_error"] = q.error;
      p["relative_deviation"] = dev;
      p["status"] = dev <= threshold ? "pass" : "fail";
    } catch (const ConvergenceError& e) {
      p["oracle"] = e.best_estimate();
      p["status"] = "convergence_failure";
      p["error"] = e.what();
    }
    results[i] = p;
  });
  double worst = 0.0;
  bool pass = true;
  int checked = 0;
  for (const json& p : results) {
    points.push_back(p);
    const std::string status = p["status"].get<std::string>();
    if (status == "skipped") continue;
    ++checked;
    if (status != "pass") pass = false;
    if (p.contains("relative_deviation")) worst = std::max(worst, p["relative_deviation"].get<double>());
  }
  return json{{"fingerprint", fingerprint(scenario)},
              {"threshold", threshold},
              {"points", points},
              {"checked", checked},
              {"max_relative_deviation", worst},
              {"pass", pass && checked > 0}};
}

}  // namespace gravdec
