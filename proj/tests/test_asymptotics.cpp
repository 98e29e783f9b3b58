#include <cmath>

#include "doctest.h"
#include "gravdec/asymptotics.hpp"
#include "gravdec/constants.hpp"
#include "gravdec/errors.hpp"

using namespace gravdec;

namespace {

SystemParams molecule() { return SystemParams::with_xi_equal_l0(1e-22, 1e-6 * constants::c, 1e-9, 1.0, 1e4); }

// Heavy fast particle whose short-time formula is self-consistent.
SystemParams heavy() { return SystemParams::with_xi_equal_l0(100.0, 1e4, 1e-9, 0.0, 1e4); }

}  // namespace

TEST_CASE("delta omega") {
  const auto sys = molecule();
  CHECK(delta_omega(sys, NewtonianSource::none()) == 1.0);
  auto near_earth = sys;
  near_earth.L0 = near_earth.Xi = 1e-6;
  // The subtracted term is about 1e-34, below double resolution around 1.
  const double h = near_earth.L0 / constants::c;
  CHECK(6.0 * h * h * NewtonianSource::earth().curvature_frequency_squared() ==
        doctest::Approx(6.0 * 1.5e-6 / 9.0e28).epsilon(0.05));
  CHECK(delta_omega(near_earth, NewtonianSource::earth()) == doctest::Approx(1.0).epsilon(1e-15));
  for (const auto& src : {NewtonianSource::sun(), NewtonianSource::earth(), NewtonianSource::neutron_star()})
    CHECK(delta_omega(sys, src) <= 1.0);
  CHECK(delta_omega_thermal(sys, NewtonianSource::none(), 1.0) == 1.0);
}

TEST_CASE("long-time vacuum decoherence time") {
  const auto t = dec_time_long(GravitonState::vacuum(), molecule(), NewtonianSource::none());
  CHECK(t.seconds == doctest::Approx(1.0e5).epsilon(0.15));
  CHECK(t.valid);
  CHECK(t.regime == TimeRegime::long_time_formula);
  auto no_bath = molecule();
  no_bath.eta = 0.0;
  CHECK_THROWS_AS(dec_time_long(GravitonState::vacuum(), no_bath, NewtonianSource::none()), DomainError);
  CHECK(dec_time_long(GravitonState::coherent(0.0), molecule(), NewtonianSource::none()).seconds == t.seconds);
}

TEST_CASE("numeric root agrees with the long-time formula") {
  const auto sys = molecule();
  const auto formula = dec_time_long(GravitonState::vacuum(), sys, NewtonianSource::none());
  const auto root = dec_time_numeric(GravitonState::vacuum(), sys, NewtonianSource::none());
  REQUIRE(root.decoheres);
  CHECK(root.valid);
  CHECK(std::abs(gamma1(GravitonState::vacuum(), sys, NewtonianSource::none(), root.seconds) - 1.0) <= 1e-8);
  CHECK(root.seconds == doctest::Approx(formula.seconds).epsilon(0.25));
}

TEST_CASE("decoherence condition thresholds") {
  const auto sys = molecule();
  CHECK(momentum_threshold(sys, NewtonianSource::none()) == doctest::Approx(110.0).epsilon(0.03));
  CHECK(mass_threshold(sys, NewtonianSource::none()) == doctest::Approx(3.7e-7).epsilon(0.05));
  const auto s = dec_time_short(GravitonState::vacuum(), sys, NewtonianSource::none());
  CHECK_FALSE(s.valid);
  CHECK(dec_time_short(GravitonState::coherent(0.0), sys, NewtonianSource::none()).seconds == s.seconds);
}

TEST_CASE("short-time formula matches the numeric root when valid") {
  const auto sys = heavy();
  for (const auto& st : {GravitonState::vacuum(), GravitonState::coherent(1.5), GravitonState::squeezed(0.6),
                         GravitonState::thermal(2e6)}) {
    const auto s = dec_time_short(st, sys, NewtonianSource::none());
    CAPTURE(to_string(st.kind));
    REQUIRE(s.valid);
    const auto root = dec_time_numeric(st, sys, NewtonianSource::none());
    REQUIRE(root.decoheres);
    CHECK(root.seconds == doctest::Approx(s.seconds).epsilon(0.3));
  }
}

TEST_CASE("state ordering of decoherence times") {
  const auto sys = molecule();
  const auto none = NewtonianSource::none();
  const double vac_long = dec_time_long(GravitonState::vacuum(), sys, none).seconds;
  CHECK(dec_time_long(GravitonState::squeezed(0.5), sys, none).seconds < vac_long);
  CHECK(dec_time_long(GravitonState::coherent(0.5), sys, none).seconds < vac_long);
  const auto h = heavy();
  const double vac_short = dec_time_short(GravitonState::vacuum(), h, none).seconds;
  CHECK(dec_time_short(GravitonState::coherent(0.5), h, none).seconds < vac_short);
  // The squeezed x^4 coefficient is reduced by e^{-2r}, which lengthens the short time.
  CHECK(dec_time_short(GravitonState::squeezed(0.5), h, none).seconds > vac_short);
  CHECK(dec_time_numeric(GravitonState::squeezed(0.5), h, none).seconds > dec_time_numeric(GravitonState::vacuum(), h, none).seconds);
}

TEST_CASE("squeezed long-time enhancement") {
  const double f = std::exp(log_long_time_state_factor(GravitonState::squeezed(100.0), molecule(), NewtonianSource::none()));
  CHECK(f == doctest::Approx(std::pow(0.5 * std::exp(200.0), -1.0 / 3.0)).epsilon(1e-12));
  CHECK(f > 1.3e-29 / 2.0);
  CHECK(f < 1.3e-29 * 2.0);
  const auto t = dec_time_long(GravitonState::squeezed(100.0), molecule(), NewtonianSource::none());
  CHECK(std::isfinite(t.seconds));
  CHECK(t.seconds > 0.0);
}

TEST_CASE("saturation without an internal bath") {
  auto sys = molecule();
  sys.eta = 0.0;
  const double sat = saturation_value(sys, NewtonianSource::none());
  CHECK(sat == doctest::Approx(16.0 / (5.0 * pi) * 1e-12 * std::pow(1e-22 / constants::planck_mass(), 2)).epsilon(1e-12));
  CHECK(sat < 1e-40);
  const auto root = dec_time_numeric(GravitonState::vacuum(), sys, NewtonianSource::none());
  CHECK_FALSE(root.decoheres);
  CHECK(std::isinf(root.seconds));

  auto planck = SystemParams::with_xi_equal_l0(constants::planck_mass(), 0.999999 * constants::c, 1e-9, 0.0, 1e4);
  CHECK(saturation_value(planck, NewtonianSource::none()) == doctest::Approx(16.0 / (5.0 * pi)).epsilon(1e-5));
  auto huge = planck;
  huge.m = 2.0 * constants::planck_mass();
  huge.v = 0.9 * constants::c;
  CHECK(saturation_value(huge, NewtonianSource::none()) > 1.0);
  const auto r = dec_time_numeric(GravitonState::vacuum(), huge, NewtonianSource::none());
  REQUIRE(r.decoheres);
  CHECK(r.seconds < 10.0 * huge.L0 / constants::c);
}

TEST_CASE("recoherence thresholds") {
  auto sys = molecule();
  sys.eta = 0.0;
  sys.L0 = sys.Xi = 1e3;
  const auto earth = NewtonianSource::earth();
  const double arg = recoherence_exponent_argument(sys, earth);
  CHECK(std::abs(std::log10(arg) - 16.0) < 1.0);
  const auto vac = recoherence_threshold(GravitonState::vacuum(), sys, earth);
  CHECK(std::isinf(vac.seconds()));
  CHECK(vac.log_seconds == doctest::Approx(arg / 8.0 - std::log(constants::c / sys.L0)));
  CHECK(vacuum_recoherence_asymptote(sys, earth, vac.log_seconds + std::log(10.0)) < 0.0);

  const auto th = recoherence_threshold(GravitonState::thermal(1.0), sys, earth);
  const double lead = pi * constants::k_B / (4.0 * constants::hbar * earth.curvature_frequency_squared());
  CHECK(th.seconds() > lead);
  CHECK(th.seconds() / 1e17 > 1.0 / 3.0);
  CHECK(th.seconds() / 1e17 < 3.0);

  const NewtonianSource heavier{2.0 * earth.M, earth.R};
  CHECK(recoherence_threshold(GravitonState::vacuum(), sys, heavier).log_seconds < vac.log_seconds);

  auto bath = sys;
  bath.eta = 1.0;
  CHECK_THROWS_AS(recoherence_threshold(GravitonState::vacuum(), bath, earth), DomainError);
  CHECK_THROWS_AS(recoherence_threshold(GravitonState::vacuum(), sys, NewtonianSource::none()), DomainError);
  CHECK_THROWS_AS(recoherence_threshold(GravitonState::coherent(1.0), sys, earth), DomainError);
}

TEST_CASE("Gamma turns negative past a computable recoherence threshold") {
  auto sys = molecule();
  sys.eta = 0.0;
  // Exponent argument of about 80 keeps the threshold representable.
  const auto earth = NewtonianSource::earth();
  sys.L0 = sys.Xi = constants::c / std::sqrt(80.0 * earth.curvature_frequency_squared());
  const auto vac = recoherence_threshold(GravitonState::vacuum(), sys, earth);
  const double t = 10.0 * vac.seconds();
  CHECK(gamma1(GravitonState::vacuum(), sys, earth, t) < 0.0);
  CHECK(gamma1(GravitonState::vacuum(), sys, earth, 1e-3 * vac.seconds()) > 0.0);
}

TEST_CASE("profile asymptotics table") {
  const auto rows = check_profile_asymptotics();
  CHECK(rows.size() == 16);
  for (const auto& r : rows) {
    CAPTURE(to_string(r.kind));
    CAPTURE(static_cast<int>(r.piece));
    CHECK(r.small_ok);
    CHECK(r.large_ok);
  }
}

TEST_CASE("log time accessor") {
  CHECK(LogTime{std::log(5.0)}.seconds() == doctest::Approx(5.0));
  CHECK(std::isinf(LogTime{1e20}.seconds()));
  CHECK(LogTime{std::log(1e17)}.log10_seconds() == doctest::Approx(17.0));
  CHECK(short_time_lower_bound(molecule()) > 0.0);
}
