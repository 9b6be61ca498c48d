#pragma once

#include <cstdint>
#include <vector>

#include "radar/convex_set.hpp"
#include "radar/losses.hpp"

namespace radar {

// sum_{t>=2} d(u_t, u_{t-1})
double path_length(const Manifold& m, const std::vector<Point>& comparators);

// sum_t f_t(u_t)
double comparator_loss(const LossSequence& losses, const std::vector<Point>& comparators);

// Lower-bound proxy for the gradient variation: the supremum over the set is
// replaced by a max over a fixed probe cloud (plus any extra points handed in
// per round). Probes come from seed 0 so runs with different seeds agree.
class VariationProbe {
 public:
  static constexpr int kDefaultProbes = 64;

  VariationProbe(const GeodesicBall& set, int count = kDefaultProbes, std::uint64_t seed = 0);

  const std::vector<Point>& probes() const { return probes_; }
  std::uint64_t seed() const { return seed_; }

  // max_x ||grad prev(x) - grad cur(x)||_x^2 over probes and `extra`.
  double step(const LossFunction& prev, const LossFunction& cur, const std::vector<Point>& extra = {}) const;
  // Sum of step() over consecutive pairs.
  double total(const LossSequence& losses) const;

 private:
  std::shared_ptr<const Manifold> m_;
  std::vector<Point> probes_;
  std::uint64_t seed_;
};

struct TraceRow {
  int t = 0;
  double loss = 0.0;       // f_t(x_t)
  double comp_loss = 0.0;  // f_t(u_t)
  double cum_regret = 0.0;
  double P_t = 0.0;
  double V_t_proxy = 0.0;
  double F_t = 0.0;
  double bound_value = 0.0;
  bool bound_ok = true;
};

using RegretTrace = std::vector<TraceRow>;

struct RegretSummary {
  double P_T = 0.0, V_T_proxy = 0.0, F_T = 0.0, regret = 0.0;
};

RegretSummary summarize(const RegretTrace& trace);

}  // namespace radar
