#include <cmath>

#include "doctest.h"
#include "gravdec/constants.hpp"
#include "gravdec/errors.hpp"
#include "gravdec/state.hpp"
#include "gravdec/units.hpp"

using namespace gravdec;

namespace {

// Rounds to two significant figures.
double sig2(double v) {
  const double e = std::floor(std::log10(std::abs(v))) - 1.0;
  return std::round(v / std::pow(10.0, e)) * std::pow(10.0, e);
}

}  // namespace

TEST_CASE("Planck units") {
  const double ep = constants::planck_energy();
  CHECK(ep == doctest::Approx(std::sqrt(constants::hbar * std::pow(constants::c, 5) / constants::G)).epsilon(1e-12));
  CHECK(sig2(ep) == doctest::Approx(2.0e9));
  CHECK(sig2(constants::planck_mass()) == doctest::Approx(2.2e-8));
  CHECK(constants::planck_mass() == doctest::Approx(ep / (constants::c * constants::c)).epsilon(1e-14));
  CHECK(constants::planck_length() ==
        doctest::Approx(std::sqrt(constants::hbar * constants::G / std::pow(constants::c, 3))).epsilon(1e-14));
}

TEST_CASE("cutoff frequency table") {
  const double l0[] = {1e-6, 1e3, 1e9};
  const double expected[] = {9.0e28, 9.0e10, 9.0e-2};
  for (int i = 0; i < 3; ++i) {
    const double nu = cutoff_frequency(l0[i]);
    CHECK(sig2(nu * nu) == doctest::Approx(expected[i]).epsilon(1e-12));
    CHECK(cutoff_from_detector(l0[i]) == doctest::Approx(constants::hbar * nu).epsilon(1e-15));
  }
  CHECK(cutoff_frequency(constants::c) == doctest::Approx(1.0).epsilon(1e-15));
  // t_max = hbar / Lambda for L0 = 1e-6 m.
  CHECK(sig2(1.0 / cutoff_frequency(1e-6)) == doctest::Approx(3.3e-15));
  CHECK_THROWS_AS(cutoff_from_detector(0.0), DomainError);
  CHECK_THROWS_AS(cutoff_frequency(-1.0), DomainError);
}

TEST_CASE("source presets and tidal component") {
  CHECK(sig2(NewtonianSource::sun().curvature_frequency_squared()) == doctest::Approx(3.9e-7));
  CHECK(sig2(NewtonianSource::earth().curvature_frequency_squared()) == doctest::Approx(1.5e-6));
  CHECK(sig2(NewtonianSource::neutron_star().curvature_frequency_squared()) == doctest::Approx(1.7e8));
  CHECK(sig2(tidal_zz(NewtonianSource::earth())) == doctest::Approx(3.1e-6));
  CHECK(tidal_zz(NewtonianSource::none()) == 0.0);
  CHECK_THROWS_AS((NewtonianSource{-1.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((NewtonianSource{1.0, 0.0}.validate()), DomainError);
}

TEST_CASE("internal ratio") {
  auto sys = SystemParams::with_xi_equal_l0(1e-22, 1e-6 * constants::c, 1e-9, 1.0, 1e4);
  const double L = internal_length(sys.m, sys.T_int);
  CHECK(std::abs(std::log10(L / constants::planck_length())) < 1.5);
  CHECK(internal_ratio(sys) == doctest::Approx(sys.eta * L / sys.L0).epsilon(1e-12));
  sys.eta = 0.0;
  CHECK(internal_ratio(sys) == 0.0);
  sys.m = 0.0;
  CHECK_THROWS_AS(internal_ratio(sys), DomainError);
}

TEST_CASE("system validation") {
  const auto ok = SystemParams::with_xi_equal_l0(1e-22, 300.0, 1e-9, 1.0, 1e4);
  CHECK_NOTHROW(ok.validate());
  CHECK(ok.Xi == ok.L0);
  CHECK_FALSE(ok.relativistic_warning());
  auto fast = ok;
  fast.v = 0.2 * constants::c;
  CHECK(fast.relativistic_warning());
  fast.v = constants::c;
  CHECK_THROWS_AS(fast.validate(), DomainError);
  auto bad = ok;
  bad.eta = -1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = ok;
  bad.T_int = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("dimensionless groups") {
  const auto sys = SystemParams::with_xi_equal_l0(1e-22, 1e-6 * constants::c, 1e-6, 1.0, 1e4);
  const auto g = to_dimensionless(sys, NewtonianSource::none(), GravitonState::vacuum());
  CHECK(g.x_at(3.3e-15) == doctest::Approx(1.0).epsilon(0.02));
  CHECK(g.tidal_ratio == 0.0);
  CHECK(g.v_over_c * constants::c == doctest::Approx(sys.v).epsilon(1e-12));
  CHECK(g.m_over_MP * constants::planck_mass() == doctest::Approx(sys.m).epsilon(1e-12));
  CHECK(g.xi_over_LA == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(constants::hbar * g.x_scale == doctest::Approx(cutoff_from_detector(sys.L0)).epsilon(1e-12));

  const double T_g = constants::hbar / (pi * constants::k_B);
  const auto gt = to_dimensionless(sys, NewtonianSource::none(), GravitonState::thermal(T_g));
  CHECK(gt.x_at(2.0) == doctest::Approx(2.0).epsilon(1e-12));

  auto far = sys;
  far.L0 = far.Xi = 1e3;
  const auto ge = to_dimensionless(far, NewtonianSource::earth(), GravitonState::vacuum());
  CHECK(ge.tidal_ratio == doctest::Approx(std::pow(far.L0 / constants::c, 2) * 1.5e-6).epsilon(0.05));
  CHECK(ge.T_zz_phys == doctest::Approx(tidal_zz(NewtonianSource::earth())));
}

TEST_CASE("state kinds") {
  CHECK(parse_state_kind("squeezed") == StateKind::squeezed);
  CHECK(to_string(StateKind::thermal) == "thermal");
  CHECK_THROWS_AS(parse_state_kind("cat"), InputError);
}
