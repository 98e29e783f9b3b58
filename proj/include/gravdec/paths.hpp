#pragma once

#include <functional>
#include <vector>

namespace gravdec {

// Sampled superposition paths: mean position Xi(t), its velocity V(t), the
// separation dxi(t) and its rate dv(t), all in SI units.
struct PathConfiguration {
  std::vector<double> t;
  std::vector<double> Xi;
  std::vector<double> V;
  std::vector<double> dxi;
  std::vector<double> dv;

  // Throws InputError unless the grid starts at 0, is strictly increasing and
  // every array has the grid's length.
  void validate() const;
  double final_time() const { return t.empty() ? 0.0 : t.back(); }
};

// Same paths as callables on [0, t_final]. `segments` equal pieces are
// integrated separately so kinks land on panel edges.
struct PathModel {
  std::function<double(double)> Xi;
  std::function<double(double)> V;
  std::function<double(double)> dxi;
  std::function<double(double)> dv;
  double t_final = 0.0;
  int segments = 1;

  PathConfiguration sample(int n_points) const;
};

// Fixed mean position Xi, separation rising as 2 v s up to t/2 and back to 0 at t.
PathModel configuration1_paths(double Xi, double v, double t_final);
// Straight paths xi_k = v_k s.
PathModel configuration2_paths(double v1, double v2, double t_final);

}  // namespace gravdec
