#pragma once

#include <string>
#include <string_view>

namespace gravdec {

enum class StateKind { vacuum, thermal, coherent, squeezed };

std::string_view to_string(StateKind kind);
StateKind parse_state_kind(std::string_view name);

// Initial graviton state. Only the parameter matching `kind` is read:
// T_g (kelvin) for thermal, alpha for coherent, r for squeezed (phase 0).
struct GravitonState {
  StateKind kind = StateKind::vacuum;
  double T_g = 0.0;
  double alpha = 0.0;
  double r = 0.0;

  static GravitonState vacuum() { return {}; }
  static GravitonState thermal(double T_g) { return {StateKind::thermal, T_g, 0.0, 0.0}; }
  static GravitonState coherent(double alpha) { return {StateKind::coherent, 0.0, alpha, 0.0}; }
  static GravitonState squeezed(double r) { return {StateKind::squeezed, 0.0, 0.0, r}; }

  // Throws DomainError when the active parameter violates its invariant.
  void validate() const;
};

}  // namespace gravdec
