#pragma once

#include <string>
#include <vector>

#include "gravdec/asymptotics.hpp"
#include "gravdec/decoherence.hpp"
#include "gravdec/oracle.hpp"
#include "gravdec/state.hpp"
#include "gravdec/units.hpp"

#include "json.hpp"

namespace gravdec {

using json = nlohmann::json;

struct GridSpec {
  enum class Spacing { log, linear };
  Spacing spacing = Spacing::log;
  double t_min = 1e-18;
  double t_max = 1e6;
  int n_points = 121;

  void validate() const;  // InputError with field path "grid.*"
  std::vector<double> times() const;
};

struct Scenario {
  std::string name = "scenario";
  GravitonState state;
  SystemParams sys;
  // Preset name ("earth", "sun", "neutron_star", "none") or "custom".
  std::string source_preset = "none";
  NewtonianSource source;
  Configuration config = Config1{};
  GridSpec grid;

  bool perturbative_warning() const { return source_preset == "neutron_star"; }
  void validate() const;
};

// Resolves "earth" | "sun" | "neutron_star" | "none"; InputError otherwise.
NewtonianSource source_preset(const std::string& name);

// Molecule example: m = 1e-22 kg, T_int = 1e4 K, eta = 1, v = 1e-6 c, L0 = Xi = 1e-9 m.
Scenario molecule_scenario();

Scenario scenario_from_json(const json& doc);
json scenario_to_json(const Scenario& scenario);

// Sets a numeric or string leaf addressed by a dotted path, e.g. "state.r".
// Unknown or non-leaf paths throw InputError.
void apply_override(json& doc, const std::string& dotted_path, const std::string& value);

// FNV-1a 64 over the canonical JSON of the resolved scenario, as 16 hex digits.
std::string fingerprint(const Scenario& scenario);

enum class CurveMethod { closed_form, oracle };

struct CurveRow {
  double t_seconds = 0.0;
  double x = 0.0;
  double gamma = 0.0;
  std::string regime;  // "short" (x < 0.1), "crossover", "long" (x > 10)
};

struct DecoherenceCurve {
  std::string fingerprint;
  CurveMethod method = CurveMethod::closed_form;
  std::vector<CurveRow> rows;
};

// Worker count from GRAVDEC_THREADS (default: hardware concurrency, at least 1).
int thread_count();

DecoherenceCurve run_eval(const Scenario& scenario, CurveMethod method = CurveMethod::closed_form,
                          const QuadratureSpec& spec = {});
std::string to_csv(const DecoherenceCurve& curve);
// Shortest representation that round-trips to the same double.
std::string format_double(double value);

json run_tables();
json run_dec_times(const Scenario& scenario);

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Evaluates decoherence times for each value of the numeric field at `path`.
SweepTable run_sweep(const Scenario& scenario, const std::string& path, const std::vector<double>& values);
std::string to_csv(const SweepTable& table);

// Closed form against gamma_by_quadrature at `times` (default: Lambda_A t / hbar in {0.5, 2, 10}).
// Points with Lambda t / hbar above `max_u` are reported as skipped.
json run_oracle_check(const Scenario& scenario, const QuadratureSpec& spec = {}, double threshold = 1e-6,
                      const std::vector<double>& times = {}, double max_u = 200.0);

}  // namespace gravdec
