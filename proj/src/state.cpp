#include "gravdec/state.hpp"

#include <cmath>
#include <string>

#include "gravdec/errors.hpp"

namespace gravdec {

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::vacuum:
      return "vacuum";
    case StateKind::thermal:
      return "thermal";
    case StateKind::coherent:
      return "coherent";
    case StateKind::squeezed:
      return "squeezed";
  }
  return "unknown";
}

StateKind parse_state_kind(std::string_view name) {
  if (name == "vacuum") return StateKind::vacuum;
  if (name == "thermal") return StateKind::thermal;
  if (name == "coherent") return StateKind::coherent;
  if (name == "squeezed") return StateKind::squeezed;
  throw InputError("state.kind", "unknown graviton state '" + std::string(name) + "'");
}

void GravitonState::validate() const {
  switch (kind) {
    case StateKind::vacuum:
      return;
    case StateKind::thermal:
      if (!(T_g > 0.0) || !std::isfinite(T_g)) throw DomainError("thermal state requires T_g > 0");
      return;
    case StateKind::coherent:
      if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError("coherent state requires alpha >= 0");
      return;
    case StateKind::squeezed:
      if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("squeezed state requires r >= 0");
      return;
  }
}

}  // namespace gravdec
