// gravdec command-line front end.
//
//   gravdec eval --config scenario.json --set state.r=2 --out curve.csv
//   gravdec tables
//   gravdec dec-time --set state.kind=squeezed --set state.r=100
//   gravdec sweep --path state.r --values 0,1,10,100
//   gravdec oracle-check --set state.kind=thermal --set state.T_g=1e-6
//   gravdec cross-section --theta 3.14159 --mass 5.97e24
//   gravdec kernel --t-prime 0 --t-max 1e-17 --n 50
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gravdec/constants.hpp"
#include "gravdec/decoherence.hpp"
#include "gravdec/errors.hpp"
#include "gravdec/kernels.hpp"
#include "gravdec/scenario.hpp"

namespace {

using gravdec::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitDomain = 4;

struct ScenarioArgs {
  std::string config_path;
  std::vector<std::string> overrides;
};

void add_scenario_options(CLI::App* cmd, ScenarioArgs& args) {
  cmd->add_option("-c,--config", args.config_path, "scenario JSON file (default: molecule example)");
  cmd->add_option("-s,--set", args.overrides, "override a field by dotted path, e.g. state.r=100");
}

gravdec::Scenario load_scenario(const ScenarioArgs& args) {
  json doc;
  if (args.config_path.empty()) {
    doc = gravdec::scenario_to_json(gravdec::molecule_scenario());
  } else {
    std::ifstream in(args.config_path);
    if (!in) throw gravdec::InputError("config", "cannot open '" + args.config_path + "'");
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw gravdec::InputError("config", e.what());
    }
  }
  for (const std::string& item : args.overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw gravdec::InputError(item, "override must look like path=value");
    gravdec::apply_override(doc, item.substr(0, eq), item.substr(eq + 1));
  }
  return gravdec::scenario_from_json(doc);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw gravdec::InputError("out", "cannot write '" + out_path + "'");
  out << text;
}

std::vector<double> parse_list(const std::string& text, const std::string& field) {
  std::vector<double> values;
  if (text.empty()) return values;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size()) {
      throw gravdec::InputError(field, "not a number: '" + item + "'");
    }
    values.push_back(v);
  }
  return values;
}

int report_error(const char* kind, const std::string& field, const std::string& message, double best, bool as_json,
                 int code) {
  if (as_json) {
    json e{{"error", kind}, {"message", message}, {"exit_code", code}};
    if (!field.empty()) e["field"] = field;
    if (std::isfinite(best)) e["best_estimate"] = best;
    std::cerr << e.dump() << "\n";
  } else {
    std::cerr << "gravdec: " << kind << " error: " << message << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graviton-induced decoherence of composite particles"};
  app.fallthrough();
  app.require_subcommand(1);
  bool error_json = false;
  std::string out_path;
  app.add_flag("--error-json", error_json, "print failures as JSON on stderr");
  app.add_option("-o,--out", out_path, "write output to a file instead of stdout");

  ScenarioArgs eval_args;
  std::string method = "closed_form";
  auto* eval = app.add_subcommand("eval", "sample Gamma(t) on the scenario grid, CSV");
  add_scenario_options(eval, eval_args);
  eval->add_option("--method", method, "closed_form or oracle")->check(CLI::IsMember({"closed_form", "oracle"}));

  auto* tables = app.add_subcommand("tables", "regenerate the squared-frequency table and asymptotics report, JSON");

  ScenarioArgs dec_args;
  auto* dec = app.add_subcommand("dec-time", "decoherence times and thresholds, JSON");
  add_scenario_options(dec, dec_args);

  ScenarioArgs sweep_args;
  std::string sweep_path;
  std::string sweep_values;
  auto* sweep = app.add_subcommand("sweep", "decoherence times over a list of values, CSV");
  add_scenario_options(sweep, sweep_args);
  sweep->add_option("--path", sweep_path, "numeric scenario field, e.g. state.r")->required();
  sweep->add_option("--values", sweep_values, "comma-separated values");

  ScenarioArgs oracle_args;
  double threshold = 1e-6;
  std::string oracle_x;
  auto* oracle = app.add_subcommand("oracle-check", "closed form against brute-force quadrature, JSON");
  add_scenario_options(oracle, oracle_args);
  oracle->add_option("--threshold", threshold, "maximum relative deviation");
  oracle->add_option("--x", oracle_x, "comma-separated Lambda_A t / hbar values (default 0.5,2,10)");

  double theta = gravdec::pi;
  double mass = 5.972e24;
  auto* xsec = app.add_subcommand("cross-section", "graviton scattering cross section, JSON");
  xsec->add_option("--theta", theta, "scattering angle in radians");
  xsec->add_option("--mass", mass, "source mass in kg");

  ScenarioArgs kernel_args;
  double t_prime = 0.0;
  double t_min = 0.0;
  double t_max = 1e-17;
  int n_points = 101;
  auto* kern = app.add_subcommand("kernel", "slice N_g(t, t') at fixed t', CSV");
  add_scenario_options(kern, kernel_args);
  kern->add_option("--t-prime", t_prime, "fixed second time, s");
  kern->add_option("--t-min", t_min, "first time, s");
  kern->add_option("--t-max", t_max, "last time, s");
  kern->add_option("--n", n_points, "number of samples")->check(CLI::Range(2, 10000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    if (error_json) return report_error("config", "", e.what(), NAN, true, kExitConfig);
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*eval) {
      const auto s = load_scenario(eval_args);
      const auto m = method == "oracle" ? gravdec::CurveMethod::oracle : gravdec::CurveMethod::closed_form;
      emit(gravdec::to_csv(gravdec::run_eval(s, m)), out_path);
      return kExitOk;
    }
    if (*tables) {
      const json r = gravdec::run_tables();
      emit(r.dump(2) + "\n", out_path);
      return r["all_pass"].get<bool>() ? kExitOk : kExitFail;
    }
    if (*dec) {
      emit(gravdec::run_dec_times(load_scenario(dec_args)).dump(2) + "\n", out_path);
      return kExitOk;
    }
    if (*sweep) {
      const auto s = load_scenario(sweep_args);
      emit(gravdec::to_csv(gravdec::run_sweep(s, sweep_path, parse_list(sweep_values, "values"))), out_path);
      return kExitOk;
    }
    if (*oracle) {
      const auto s = load_scenario(oracle_args);
      const auto x = parse_list(oracle_x, "x");
      std::vector<double> times;
      const double nu_a = gravdec::state_energy_scale(s.sys, s.state) / gravdec::constants::hbar;
      for (double xv : x) times.push_back(xv / nu_a);
      const json r = gravdec::run_oracle_check(s, {}, threshold, times);
      emit(r.dump(2) + "\n", out_path);
      return r["pass"].get<bool>() ? kExitOk : kExitFail;
    }
    if (*xsec) {
      const double v = gravdec::cross_section(theta, mass);
      const double scale = gravdec::constants::G * mass / (gravdec::constants::c * gravdec::constants::c);
      json r{{"theta", theta}, {"mass_kg", mass}, {"dsigma_domega_m2", v}, {"in_units_of_GM_over_c2_sq", v / (scale * scale)}};
      emit(r.dump(2) + "\n", out_path);
      return kExitOk;
    }
    if (*kern) {
      const auto s = load_scenario(kernel_args);
      gravdec::KernelParams p{gravdec::cutoff_frequency(s.sys.L0), gravdec::tidal_zz(s.source), s.state};
      std::string csv = "t_seconds,t_prime_seconds,noise_kernel\n";
      for (int i = 0; i < n_points; ++i) {
        const double t = t_min + (t_max - t_min) * i / (n_points - 1);
        csv += gravdec::format_double(t) + "," + gravdec::format_double(t_prime) + "," +
               gravdec::format_double(gravdec::noise_kernel(p, t, t_prime)) + "\n";
      }
      emit(csv, out_path);
      return kExitOk;
    }
  } catch (const gravdec::InputError& e) {
    return report_error("config", e.field(), e.what(), NAN, error_json, kExitConfig);
  } catch (const gravdec::ConvergenceError& e) {
    return report_error("convergence", "", e.what(), e.best_estimate(), error_json, kExitConvergence);
  } catch (const gravdec::DomainError& e) {
    return report_error("domain", "", e.what(), NAN, error_json, kExitDomain);
  } catch (const json::exception& e) {
    return report_error("config", "", e.what(), NAN, error_json, kExitConfig);
  }
  return kExitOk;
}
