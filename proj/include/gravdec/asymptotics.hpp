#pragma once

#include <string_view>
#include <vector>

#include "gravdec/decoherence.hpp"
#include "gravdec/state.hpp"
#include "gravdec/units.hpp"

namespace gravdec {

enum class TimeRegime { short_time_formula, long_time_formula, numeric_root };
std::string_view to_string(TimeRegime regime);

struct DecoherenceTime {
  double seconds = 0.0;  // +inf when the channel never reaches Gamma = 1
  TimeRegime regime = TimeRegime::numeric_root;
  bool valid = false;      // the regime's self-consistency condition, factor-10 margin
  bool decoheres = true;   // false when Gamma stays below 1
  double state_factor = 1.0;  // multiplier relative to the vacuum formula
};

// A time kept as its natural logarithm; seconds() saturates at +inf.
struct LogTime {
  double log_seconds = 0.0;

  double seconds() const;
  double log10_seconds() const;
};

// 1 - 6 (hbar/Lambda)^2 G M / R^3.
double delta_omega(const SystemParams& sys, const NewtonianSource& source);
// 1 + 6 [(hbar/Lambda)^2 - (7/20) (hbar / pi k_B T_g)^2] G M / R^3.
double delta_omega_thermal(const SystemParams& sys, const NewtonianSource& source, double T_g);

// Multipliers applied to the vacuum times: returned as natural logs so that
// large squeezing stays representable.
double log_short_time_state_factor(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source);
double log_long_time_state_factor(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source);

// x^4 regime; valid when the time is below hbar / Lambda / 10.
DecoherenceTime dec_time_short(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source);
// x^3 regime driven by the internal bath; valid when above 10 hbar / Lambda_A.
DecoherenceTime dec_time_long(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source);
// Root of Gamma(t) = 1 for the exact closed form.
DecoherenceTime dec_time_numeric(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source,
                                 const Configuration& config = Config1{});

// sqrt(90 pi / dOmega) M_P c in kg m/s, and the same divided by c.
double momentum_threshold(const SystemParams& sys, const NewtonianSource& source);
double mass_threshold(const SystemParams& sys, const NewtonianSource& source);

// Graviton-only plateau (16 / 5 pi) dOmega (v/c)^2 (m/M_P)^2 (Xi/L0)^2.
double saturation_value(const SystemParams& sys, const NewtonianSource& source);

// (Lambda/hbar)^2 R^3 / (G M), the exponent of the vacuum threshold before the 1/8.
double recoherence_exponent_argument(const SystemParams& sys, const NewtonianSource& source);
// Time after which Gamma_1 turns negative for a structureless particle (eta = 0).
// Only vacuum and thermal states are defined.
LogTime recoherence_threshold(const GravitonState& state, const SystemParams& sys, const NewtonianSource& source);
// Long-time Gamma_1 with eta = 0 as ln x grows: (16/5 pi) b^2 m^2 (1 - 8 rho ln x), evaluated at ln t.
double vacuum_recoherence_asymptote(const SystemParams& sys, const NewtonianSource& source, double log_t);

// Short-time validity lower bound (8/3) eta L(m, T_int) / c; exposed, not enforced.
double short_time_lower_bound(const SystemParams& sys);

}  // namespace gravdec

namespace gravdec {

// One row of the profile-function tables: leading small-x term c x^p and the
// stated large-x behaviour, both checked numerically.
struct AsymptoticCheck {
  StateKind kind = StateKind::vacuum;
  Piece piece = Piece::I;
  double small_x = 1e-2;
  double small_ratio = 0.0;  // f(small_x) / (c small_x^p)
  bool small_ok = false;
  double large_x = 1e3;
  double large_value = 0.0;
  double large_expected = 0.0;
  double large_slack = 0.0;
  bool large_ok = false;
};

std::vector<AsymptoticCheck> check_profile_asymptotics(double small_x = 1e-2, double large_x = 1e3);

}  // namespace gravdec
