#include <cmath>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "gravdec/constants.hpp"
#include "gravdec/errors.hpp"
#include "gravdec/scenario.hpp"

using namespace gravdec;

namespace {

double sig2(double v) {
  const double e = std::floor(std::log10(std::abs(v))) - 1.0;
  return std::round(v / std::pow(10.0, e)) * std::pow(10.0, e);
}

json molecule_json() { return scenario_to_json(molecule_scenario()); }

Scenario with(const std::string& path, const std::string& value, json doc = molecule_json()) {
  apply_override(doc, path, value);
  return scenario_from_json(doc);
}

}  // namespace

TEST_CASE("molecule curve crosses one near 1e5 s") {
  const auto curve = run_eval(molecule_scenario());
  REQUIRE(curve.rows.size() == 121);
  const std::string csv = to_csv(curve);
  CHECK(csv.rfind("t_seconds,x,gamma,regime,method\n", 0) == 0);
  double crossing = 0.0;
  for (std::size_t i = 0; i < curve.rows.size(); ++i) {
    CHECK(std::isfinite(curve.rows[i].gamma));
    if (i > 0) CHECK(curve.rows[i].t_seconds > curve.rows[i - 1].t_seconds);
    if (crossing == 0.0 && curve.rows[i].gamma >= 1.0) crossing = curve.rows[i].t_seconds;
  }
  CHECK(crossing > 3e4);
  CHECK(crossing < 3e5);
  CHECK(curve.rows.front().regime == "crossover");
  CHECK(curve.rows.back().regime == "long");
}

TEST_CASE("curves are deterministic") {
  const auto a = run_eval(molecule_scenario());
  const auto b = run_eval(molecule_scenario());
  CHECK(a.fingerprint == b.fingerprint);
  CHECK(to_csv(a) == to_csv(b));
  setenv("GRAVDEC_THREADS", "1", 1);
  CHECK(thread_count() == 1);
  const std::string serial = to_csv(run_eval(molecule_scenario()));
  setenv("GRAVDEC_THREADS", "4", 1);
  CHECK(thread_count() == 4);
  CHECK(to_csv(run_eval(molecule_scenario())) == serial);
  unsetenv("GRAVDEC_THREADS");
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(with("grid.t_max", "0"), InputError);
  try {
    with("grid.n_points", "1");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.field() == "grid.n_points");
  }
  const auto lin = with("grid.spacing", "linear");
  const auto t = lin.grid.times();
  CHECK(t.size() == 121);
  CHECK(t[1] - t[0] == doctest::Approx(t[2] - t[1]));
}

TEST_CASE("fingerprint follows every physical input") {
  const std::string base = fingerprint(molecule_scenario());
  const std::pair<const char*, const char*> changes[] = {
      {"system.m", "2e-22"},   {"system.v", "301"},        {"system.L0", "2e-9"},  {"system.Xi", "3e-9"},
      {"system.eta", "0.5"},   {"system.T_int", "300"},    {"source", "earth"},    {"state.kind", "coherent"},
      {"grid.t_min", "1e-17"}, {"grid.n_points", "50"},    {"grid.t_max", "1e5"},
  };
  for (const auto& [path, value] : changes) {
    CAPTURE(path);
    CHECK(fingerprint(with(path, value)) != base);
  }
  json doc = molecule_json();
  apply_override(doc, "state.kind", "squeezed");
  apply_override(doc, "state.r", "0.5");
  const std::string sq = fingerprint(scenario_from_json(doc));
  apply_override(doc, "state.r", "0.6");
  CHECK(fingerprint(scenario_from_json(doc)) != sq);
}

TEST_CASE("scenario JSON round trip and overrides") {
  const auto s = molecule_scenario();
  const auto back = scenario_from_json(scenario_to_json(s));
  CHECK(fingerprint(back) == fingerprint(s));

  json doc = molecule_json();
  apply_override(doc, "source", "earth");
  CHECK(scenario_from_json(doc).source.M == NewtonianSource::earth().M);
  apply_override(doc, "source.M", "1e20");
  const auto custom = scenario_from_json(doc);
  CHECK(custom.source.M == 1e20);
  CHECK(custom.source.R == NewtonianSource::earth().R);

  CHECK_THROWS_AS(with("system.nope", "1"), InputError);
  CHECK_THROWS_AS(with("state.kind", "cat"), InputError);
  CHECK_THROWS_AS(with("system.m", "heavy"), InputError);
  CHECK_THROWS_AS(source_preset("moon"), InputError);
  CHECK(source_preset("neutron_star").M == NewtonianSource::neutron_star().M);

  json cfg = molecule_json();
  apply_override(cfg, "configuration.type", "config2");
  CHECK_THROWS_AS(scenario_from_json(cfg), InputError);
  apply_override(cfg, "configuration.v1", "10");
  apply_override(cfg, "configuration.v2", "5");
  CHECK(std::get<Config2>(scenario_from_json(cfg).config).v1 == 10.0);

  json minimal = json::parse(R"({"state": {"kind": "vacuum"},
      "system": {"m": 1e-22, "v_over_c": 1e-6, "L0": 1e-9, "eta": 1, "T_int": 1e4}})");
  const auto m = scenario_from_json(minimal);
  CHECK(m.sys.Xi == m.sys.L0);
  CHECK(m.sys.v == doctest::Approx(1e-6 * constants::c));
  CHECK_THROWS_AS(scenario_from_json(json::parse(R"({"system": {}})")), InputError);
}

TEST_CASE("shortest round-trip floats") {
  for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300, 1e-18}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("tables report") {
  const json r = run_tables();
  CHECK(r["all_pass"].get<bool>());
  const double expected[] = {9.0e28, 9.0e10, 9.0e-2};
  for (int i = 0; i < 3; ++i) CHECK(sig2(r["cutoff"][i]["cutoff_sq_per_s2"].get<double>()) == doctest::Approx(expected[i]));
  CHECK(sig2(r["cutoff"][1]["t_max_s"].get<double>()) == doctest::Approx(3.3e-6));
  const double gm[] = {3.9e-7, 1.5e-6, 1.7e8};
  for (int i = 0; i < 3; ++i) CHECK(sig2(r["sources"][i]["GM_over_R3_per_s2"].get<double>()) == doctest::Approx(gm[i]));
  CHECK(r["sources"][2]["perturbative_warning"].get<bool>());
  CHECK(r["asymptotics"].size() == 16);
}

TEST_CASE("decoherence time report") {
  const json r = run_dec_times(molecule_scenario());
  CHECK(r["long_time"]["seconds"].get<double>() == doctest::Approx(1.0e5).epsilon(0.15));
  CHECK_FALSE(r["short_time"]["valid"].get<bool>());
  CHECK_FALSE(r["decoherence_condition"].get<bool>());

  json doc = molecule_json();
  apply_override(doc, "state.kind", "squeezed");
  apply_override(doc, "state.r", "100");
  const json sq = run_dec_times(scenario_from_json(doc));
  CHECK(std::abs(sq["log10_long_time_state_factor"].get<double>() + 29.0) < 0.5);

  const json no_bath = run_dec_times(with("system.eta", "0"));
  CHECK(no_bath["long_time"].contains("error"));
  CHECK(no_bath["saturation_value"].get<double>() > 0.0);
  CHECK_FALSE(no_bath["numeric_root"]["decoheres"].get<bool>());

  const json ns = run_dec_times(with("source", "neutron_star"));
  CHECK(ns["perturbative_warning"].get<bool>());
}

TEST_CASE("sweeps") {
  json doc = molecule_json();
  apply_override(doc, "state.kind", "squeezed");
  apply_override(doc, "state.r", "0");
  const auto s = scenario_from_json(doc);
  const auto t = run_sweep(s, "state.r", {0.0, 1.0, 10.0, 100.0});
  REQUIRE(t.rows.size() == 4);
  const auto col = std::find(t.header.begin(), t.header.end(), "long_time_s") - t.header.begin();
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(std::stod(t.rows[i][col]) < std::stod(t.rows[i - 1][col]));
  }
  CHECK(t.rows[0][0] == "0");

  const auto empty = run_sweep(s, "state.r", {});
  CHECK(empty.rows.empty());
  CHECK(to_csv(empty) == "value,cutoff_sq_per_s2,short_time_s,short_valid,long_time_s,numeric_root_s,long_state_factor,"
                         "saturation_value\n");

  const auto l0 = run_sweep(molecule_scenario(), "system.L0", {1e-6, 1e3, 1e9});
  const auto cc = std::find(l0.header.begin(), l0.header.end(), "cutoff_sq_per_s2") - l0.header.begin();
  const double expected[] = {9.0e28, 9.0e10, 9.0e-2};
  for (int i = 0; i < 3; ++i) CHECK(sig2(std::stod(l0.rows[i][cc])) == doctest::Approx(expected[i]));

  CHECK_THROWS_AS(run_sweep(s, "state.kind", {1.0}), InputError);
  CHECK_THROWS_AS(run_sweep(s, "state.missing", {1.0}), InputError);
}

TEST_CASE("oracle check report") {
  const json vac = run_oracle_check(molecule_scenario());
  CHECK(vac["pass"].get<bool>());
  CHECK(vac["checked"].get<int>() == 3);

  json doc = molecule_json();
  apply_override(doc, "state.kind", "thermal");
  apply_override(doc, "state.T_g", "5e5");
  apply_override(doc, "configuration.type", "config2");
  apply_override(doc, "configuration.v1", "300");
  apply_override(doc, "configuration.v2", "100");
  apply_override(doc, "system.eta", "0");
  CHECK(run_oracle_check(scenario_from_json(doc))["pass"].get<bool>());

  json sq = molecule_json();
  apply_override(sq, "state.kind", "squeezed");
  apply_override(sq, "state.r", "0");
  const json a = run_oracle_check(scenario_from_json(sq));
  for (int i = 0; i < 3; ++i) {
    const double o = a["points"][i]["oracle"].get<double>();
    const double v = vac["points"][i]["oracle"].get<double>();
    CHECK(std::abs(o - v) <= 1e-12 * std::abs(v));
  }
  CHECK(a["max_relative_deviation"].get<double>() <= 1e-12);

  json cold = molecule_json();
  apply_override(cold, "state.kind", "thermal");
  apply_override(cold, "state.T_g", "1e-6");
  const json skipped = run_oracle_check(scenario_from_json(cold));
  CHECK(skipped["checked"].get<int>() == 0);
  CHECK_FALSE(skipped["pass"].get<bool>());
}
