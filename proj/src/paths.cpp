#include "gravdec/paths.hpp"

#include <cmath>
#include <string>

#include "gravdec/errors.hpp"

namespace gravdec {

void PathConfiguration::validate() const {
  const std::size_t n = t.size();
  if (n < 2) throw InputError("paths.t", "need at least two samples");
  if (Xi.size() != n || V.size() != n || dxi.size() != n || dv.size() != n) {
    throw InputError("paths", "sample arrays must match the time grid length");
  }
  if (t.front() != 0.0) throw InputError("paths.t", "grid must start at t = 0");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(t[i] > t[i - 1])) {
      throw InputError("paths.t", "grid not strictly increasing at index " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(Xi[i]) || !std::isfinite(V[i]) || !std::isfinite(dxi[i]) || !std::isfinite(dv[i])) {
      throw InputError("paths", "non-finite sample at index " + std::to_string(i));
    }
  }
}

PathConfiguration PathModel::sample(int n_points) const {
  if (n_points < 2) throw InputError("paths.n_points", "need at least two samples");
  PathConfiguration out;
  out.t.resize(n_points);
  out.Xi.resize(n_points);
  out.V.resize(n_points);
  out.dxi.resize(n_points);
  out.dv.resize(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double s = t_final * i / (n_points - 1);
    out.t[i] = s;
    out.Xi[i] = Xi(s);
    out.V[i] = V(s);
    out.dxi[i] = dxi(s);
    out.dv[i] = dv(s);
  }
  return out;
}

PathModel configuration1_paths(double Xi, double v, double t_final) {
  PathModel m;
  m.t_final = t_final;
  m.segments = 2;
  const double half = 0.5 * t_final;
  m.Xi = [Xi](double) { return Xi; };
  m.V = [](double) { return 0.0; };
  m.dxi = [v, half, t_final](double s) { return 2.0 * v * (s <= half ? s : t_final - s); };
  m.dv = [v, half](double s) { return s < half ? 2.0 * v : -2.0 * v; };
  return m;
}

PathModel configuration2_paths(double v1, double v2, double t_final) {
  PathModel m;
  m.t_final = t_final;
  m.segments = 1;
  const double mean = 0.5 * (v1 + v2);
  const double diff = v1 - v2;
  m.Xi = [mean](double s) { return mean * s; };
  m.V = [mean](double) { return mean; };
  m.dxi = [diff](double s) { return diff * s; };
  m.dv = [diff](double) { return diff; };
  return m;
}

}  // namespace gravdec
