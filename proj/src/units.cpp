#include "gravdec/units.hpp"

#include <cmath>
#include <string>

#include "gravdec/constants.hpp"
#include "gravdec/errors.hpp"

namespace gravdec {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

void SystemParams::validate() const {
  require_positive(m, "m");
  require_positive(v, "v");
  require_positive(Xi, "Xi");
  require_positive(L0, "L0");
  require_positive(T_int, "T_int");
  if (!(eta >= 0.0) || !std::isfinite(eta)) throw DomainError("eta must be non-negative");
  if (!(v < constants::c)) throw DomainError("v must be below the speed of light");
}

bool SystemParams::relativistic_warning() const { return v / constants::c > 0.1; }

void NewtonianSource::validate() const {
  if (!(M >= 0.0) || !std::isfinite(M)) throw DomainError("source mass must be non-negative");
  require_positive(R, "source radius");
}

double NewtonianSource::curvature_frequency_squared() const {
  validate();
  return constants::G * M / (R * R * R);
}

double cutoff_from_detector(double L0) {
  require_positive(L0, "L0");
  return constants::hbar * constants::c / L0;
}

double cutoff_frequency(double L0) {
  require_positive(L0, "L0");
  return constants::c / L0;
}

double tidal_zz(const NewtonianSource& source) { return 2.0 * source.curvature_frequency_squared(); }

double internal_length(double m, double T_int) {
  require_positive(m, "m");
  const double rest = m * constants::c * constants::c;
  return pi * constants::k_B * T_int * constants::hbar * constants::c / (rest * rest);
}

double internal_ratio(const SystemParams& sys) {
  require_positive(sys.m, "m");
  const double lambda = cutoff_from_detector(sys.L0);
  const double rest = sys.m * constants::c * constants::c;
  return sys.eta * pi * constants::k_B * sys.T_int * lambda / (rest * rest);
}

double state_energy_scale(const SystemParams& sys, const GravitonState& state) {
  state.validate();
  if (state.kind == StateKind::thermal) {
    return pi * constants::k_B * state.T_g;
  }
  return cutoff_from_detector(sys.L0);
}

DimensionlessGroups to_dimensionless(const SystemParams& sys, const NewtonianSource& source,
                                     const GravitonState& state) {
  sys.validate();
  source.validate();
  const double lambda_a = state_energy_scale(sys, state);
  const double rest = sys.m * constants::c * constants::c;
  const double hbar_over_lambda = constants::hbar / lambda_a;

  DimensionlessGroups g;
  g.x_scale = lambda_a / constants::hbar;
  g.v_over_c = sys.v / constants::c;
  g.m_over_MP = sys.m / constants::planck_mass();
  g.kappa_over_Erest2 = sys.eta * pi * constants::k_B * sys.T_int * lambda_a / (rest * rest);
  g.tidal_ratio = hbar_over_lambda * hbar_over_lambda * source.curvature_frequency_squared();
  g.T_zz_phys = tidal_zz(source);
  g.xi_over_LA = sys.Xi * lambda_a / (constants::hbar * constants::c);
  return g;
}

}  // namespace gravdec
