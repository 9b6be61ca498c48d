#pragma once

#include <vector>

namespace radar {

struct StepSizeGrid {
  std::vector<double> etas;  // ascending
  double base = 0.0;         // eta_1 before any clamping
  int raw_count = 0;         // count from the doubling formula
  bool clamped = false;      // some entries were capped at the admissible maximum

  int size() const { return static_cast<int>(etas.size()); }
};

// Doubling grid: base * 2^{i-1}, i = 1..count, entries above `cap` replaced by
// cap and duplicates dropped. count >= 1.
StepSizeGrid doubling_grid(double base, int count, double cap = 0.0);

// ceil(log2(x) / 2) + 1, at least 1; x <= 1 gives 1.
int half_log2_count(double x);

// R-OGD experts for the plain meta layer: base sqrt(D^2/(G^2 zeta T)),
// count ceil(log2(1+2T)/2)+1; T == 1 yields a single step.
StepSizeGrid stepsize_grid_radar(double D, double G, double zeta, int T);

// Largest OMD step allowed with margin delta*M:
// delta M / (G + sqrt(G^2 + 2 zeta delta^2 M^2 L^2)).
double omd_max_step(double delta, double G, double L, double zeta, double M);

// OMD experts: base sqrt(D^2/(8 zeta G^2 T)),
// count ceil(log2(8 zeta delta^2 G^2 T / (1+sqrt(1+2 zeta delta^2 L^2))^2)/2)+1,
// capped at omd_max_step with M = G.
StepSizeGrid stepsize_grid_radarv(double D, double G, double L, double zeta, double delta, int T);

// Small-loss R-OGD experts: base sqrt(D/(2 zeta L G T)),
// count ceil(log2(G T/(2 L D zeta))/2)+1, capped at 1/(2 zeta L).
StepSizeGrid stepsize_grid_radars(double D, double G, double L, double zeta, int T);

struct CombinedGrid {
  StepSizeGrid v, s;  // OMD part first, R-OGD part second
  int size() const { return v.size() + s.size(); }
};
CombinedGrid stepsize_grid_radarb(double D, double G, double L, double zeta_v, double zeta_s, double delta,
                                  int T);

}  // namespace radar
