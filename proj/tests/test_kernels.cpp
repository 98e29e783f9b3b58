#include <cmath>
#include <random>

#include "doctest.h"
#include "gravdec/constants.hpp"
#include "gravdec/errors.hpp"
#include "gravdec/kernels.hpp"
#include "gravdec/oracle.hpp"
#include "gravdec/units.hpp"

using namespace gravdec;

namespace {

constexpr double kNu = 2.0;    // cutoff, 1/s
constexpr double kTzz = 0.4;   // tau_z = 0.1

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Temperature giving pi k_B T_g = theta * hbar * kNu.
double temperature_for(double theta) { return theta * constants::hbar * kNu / (pi * constants::k_B); }

KernelParams params(const GravitonState& s, double T_zz = kTzz) { return {kNu, T_zz, s}; }

const GravitonState kStates[] = {GravitonState::vacuum(), GravitonState::thermal(temperature_for(0.6)),
                                 GravitonState::coherent(1.4), GravitonState::squeezed(0.35)};

}  // namespace

TEST_CASE("mode Hadamard functions") {
  const double w = 3.7;
  CHECK(hadamard(GravitonState::vacuum(), w, 1.2, 1.2) == doctest::Approx(2.0 / (pi * pi * w)).epsilon(1e-15));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 20; ++i) {
    const double t = u(rng), tp = u(rng);
    CHECK(hadamard(GravitonState::squeezed(0.0), w, t, tp) == hadamard(GravitonState::vacuum(), w, t, tp));
    CHECK(rel(hadamard(GravitonState::thermal(1e-40), w, t, tp), hadamard(GravitonState::vacuum(), w, t, tp)) <= 1e-15);
  }
  const double coh = hadamard(GravitonState::coherent(2.0), w, 0.3, 1.1) - hadamard(GravitonState::vacuum(), w, 0.3, 1.1);
  CHECK(coh == doctest::Approx(4.0 * std::cos(w * 0.3) * std::cos(w * 1.1) * 2.0 / (pi * pi * w)).epsilon(1e-13));
  CHECK_THROWS_AS(hadamard(GravitonState::vacuum(), 0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("coincident kernels") {
  const double nu6 = std::pow(kNu, 6);
  CHECK(noise_kernel(params(GravitonState::vacuum(), 0.0), 0.7, 0.7) ==
        doctest::Approx(2.0 * nu6 / (15.0 * pi) / 6.0).epsilon(1e-14));
  const double tz = kTzz / (kNu * kNu);
  CHECK(noise_kernel_coincident(params(GravitonState::vacuum()), 5.0) ==
        doctest::Approx(nu6 / (15.0 * pi) * (1.0 / 3.0 - tz)).epsilon(1e-14));
  const double th = 0.6;
  const double extra = nu6 * 8.0 * std::pow(th, 4) / (45.0 * pi) * (4.0 / 21.0 * th * th - tz / 5.0);
  const double thermal = noise_kernel_coincident(params(kStates[1]), 2.0) - noise_kernel_coincident(params(kStates[0]), 2.0);
  CHECK(thermal == doctest::Approx(extra).epsilon(1e-12));
  for (const auto& s : kStates) {
    for (double t : {0.1, 1.3, 4.0}) {
      const auto p = params(s);
      const double up = noise_kernel(p, t, t * (1.0 + 1e-7));
      if (ScaledKernel::from_params(p).has_nonstationary()) {
        // The t + t' dependence is first order in the offset; average both sides.
        const double down = noise_kernel(p, t, t * (1.0 - 1e-7));
        CHECK(rel(0.5 * (up + down), noise_kernel_coincident(p, t)) <= 1e-8);
      } else {
        CHECK(rel(up, noise_kernel_coincident(p, t)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("closed-form kernels match frequency quadrature") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  for (const auto& s : kStates) {
    for (int i = 0; i < 6; ++i) {
      const double t = u(rng), tp = u(rng);
      const double closed = noise_kernel(params(s), t, tp);
      const double quad = kernel_by_quadrature(params(s), t, tp);
      CAPTURE(to_string(s.kind));
      CAPTURE(t);
      CAPTURE(tp);
      CHECK(std::abs(closed - quad) <= 1e-9 * std::abs(noise_kernel_coincident(params(s), t)));
    }
  }
  const double c = kernel_by_quadrature(params(GravitonState::vacuum(), 0.0), 1.0, 1.0);
  CHECK(c == doctest::Approx(2.0 * std::pow(kNu, 6) / (15.0 * pi) / 6.0).epsilon(1e-10));
  CHECK(kernel_by_quadrature(params(GravitonState::squeezed(0.0)), 0.4, 2.9) ==
        doctest::Approx(kernel_by_quadrature(params(GravitonState::vacuum()), 0.4, 2.9)).epsilon(1e-12));
}

TEST_CASE("kernel symmetries") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (const auto& s : kStates) {
    const auto p = params(s);
    for (int i = 0; i < 20; ++i) {
      const double t = u(rng), tp = u(rng), shift = u(rng);
      CHECK(noise_kernel(p, t, tp) == doctest::Approx(noise_kernel(p, tp, t)).epsilon(1e-14));
      if (s.kind == StateKind::vacuum || s.kind == StateKind::thermal) {
        CHECK(noise_kernel(p, t + shift, tp + shift) == doctest::Approx(noise_kernel(p, t, tp)).epsilon(1e-10));
      }
    }
  }
  for (const auto& s : {kStates[2], kStates[3]}) {
    const auto p = params(s);
    CHECK(std::abs(noise_kernel(p, 1.0, 0.5) - noise_kernel(p, 2.0, 1.5)) > 1e-3 * std::abs(noise_kernel(p, 1.0, 0.5)));
  }
}

TEST_CASE("kernels reduce to vacuum") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  const auto vac = params(GravitonState::vacuum());
  for (int i = 0; i < 20; ++i) {
    const double t = u(rng), tp = u(rng);
    const double v = noise_kernel(vac, t, tp);
    const double scale = noise_kernel_coincident(vac, t);
    CHECK(std::abs(noise_kernel(params(GravitonState::squeezed(0.0)), t, tp) - v) <= 1e-15 * scale);
    CHECK(std::abs(noise_kernel(params(GravitonState::coherent(0.0)), t, tp) - v) <= 1e-15 * scale);
    CHECK(std::abs(noise_kernel(params(GravitonState::thermal(temperature_for(1e-4))), t, tp) - v) <= 1e-12 * scale);
  }
}

TEST_CASE("internal noise strength") {
  CHECK(internal_noise_strength(0.0, 1e4) == 0.0);
  CHECK(internal_noise_strength(1.0, 1e4) == doctest::Approx(pi * constants::k_B * 1e4 / constants::hbar));
  const auto sys = SystemParams::with_xi_equal_l0(1e-22, 1e-6 * constants::c, 1e-9, 1.0, 1e4);
  const double lambda = cutoff_from_detector(sys.L0);
  const double direct = sys.eta * pi * constants::k_B * sys.T_int * lambda;
  const double erest = sys.m * constants::c * constants::c;
  CHECK(rel(internal_ratio(sys) * erest * erest, direct) <= 1e-12);
  CHECK(rel(internal_noise_strength(sys.eta, sys.T_int) * constants::hbar * lambda, direct) <= 1e-12);
  CHECK_THROWS_AS(internal_noise_strength(-1.0, 1e4), DomainError);
}

TEST_CASE("angular integrals") {
  CHECK(angular_integral(3, 3, 3, 3) == doctest::Approx(32.0 * pi / 15.0));
  CHECK(angular_integral(1, 1, 2, 2) == doctest::Approx(-16.0 * pi / 15.0));
  CHECK(angular_integral(1, 2, 1, 2) == doctest::Approx(24.0 * pi / 15.0));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          const double a = angular_integral(i, j, k, l);
          CHECK(a == angular_integral(j, i, k, l));
          CHECK(a == angular_integral(i, j, l, k));
          CHECK(a == angular_integral(k, l, i, j));
        }
  CHECK_THROWS_AS(angular_integral(0, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(angular_integral(1, 1, 1, 4), DomainError);
}

TEST_CASE("kernel parameter validation") {
  CHECK_THROWS_AS((KernelParams{0.0, 0.0, GravitonState::vacuum()}.validate()), DomainError);
  CHECK_THROWS_AS((KernelParams{1.0, -1.0, GravitonState::vacuum()}.validate()), DomainError);
  CHECK_THROWS_AS(GravitonState::thermal(0.0).validate(), DomainError);
  CHECK_THROWS_AS(GravitonState::coherent(-1.0).validate(), DomainError);
  CHECK_THROWS_AS(GravitonState::squeezed(-0.1).validate(), DomainError);
}
