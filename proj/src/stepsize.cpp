#include "radar/stepsize.hpp"

#include <cmath>

#include "radar/errors.hpp"

namespace radar {

namespace {
void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string("step-size grid: ") + what + " must be positive");
}
void require_horizon(int T) {
  if (T < 1) throw DomainError("step-size grid: horizon must be at least 1");
}
}  // namespace

int half_log2_count(double x) {
  if (!(x > 1.0)) return 1;
  return static_cast<int>(std::ceil(0.5 * std::log2(x))) + 1;
}

StepSizeGrid doubling_grid(double base, int count, double cap) {
  require_positive(base, "base step");
  if (count < 1) count = 1;
  StepSizeGrid g;
  g.base = base;
  g.raw_count = count;
  for (int i = 0; i < count; ++i) {
    double eta = std::ldexp(base, i);
    if (cap > 0.0 && eta > cap) {
      eta = cap;
      g.clamped = true;
    }
    if (!g.etas.empty() && eta <= g.etas.back()) continue;
    g.etas.push_back(eta);
  }
  return g;
}

StepSizeGrid stepsize_grid_radar(double D, double G, double zeta, int T) {
  require_positive(D, "D");
  require_positive(G, "G");
  require_positive(zeta, "zeta");
  require_horizon(T);
  const double base = std::sqrt(D * D / (G * G * zeta * T));
  const int count = T == 1 ? 1 : half_log2_count(1.0 + 2.0 * T);
  return doubling_grid(base, count);
}

double omd_max_step(double delta, double G, double L, double zeta, double M) {
  require_positive(delta, "delta");
  require_positive(G, "G");
  require_positive(M, "M");
  if (!(L >= 0.0)) throw DomainError("step-size grid: L must be nonnegative");
  return delta * M / (G + std::sqrt(G * G + 2.0 * zeta * delta * delta * M * M * L * L));
}

StepSizeGrid stepsize_grid_radarv(double D, double G, double L, double zeta, double delta, int T) {
  require_positive(D, "D");
  require_positive(G, "G");
  require_positive(L, "L");
  require_positive(zeta, "zeta");
  require_positive(delta, "delta");
  require_horizon(T);
  const double base = std::sqrt(D * D / (8.0 * zeta * G * G * T));
  const double q = 1.0 + std::sqrt(1.0 + 2.0 * zeta * delta * delta * L * L);
  const int count = T == 1 ? 1 : half_log2_count(8.0 * zeta * delta * delta * G * G * T / (q * q));
  const double cap = omd_max_step(delta, G, L, zeta, G);
  StepSizeGrid g = doubling_grid(std::min(base, cap), count, cap);
  g.base = base;
  return g;
}

StepSizeGrid stepsize_grid_radars(double D, double G, double L, double zeta, int T) {
  require_positive(D, "D");
  require_positive(G, "G");
  require_positive(L, "L");
  require_positive(zeta, "zeta");
  require_horizon(T);
  const double base = std::sqrt(D / (2.0 * zeta * L * G * T));
  const int count = T == 1 ? 1 : half_log2_count(G * T / (2.0 * L * D * zeta));
  const double cap = 1.0 / (2.0 * zeta * L);
  StepSizeGrid g = doubling_grid(std::min(base, cap), count, cap);
  g.base = base;
  return g;
}

CombinedGrid stepsize_grid_radarb(double D, double G, double L, double zeta_v, double zeta_s, double delta,
                                  int T) {
  return {stepsize_grid_radarv(D, G, L, zeta_v, delta, T), stepsize_grid_radars(D, G, L, zeta_s, T)};
}

}  // namespace radar
