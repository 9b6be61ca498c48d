#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radar/metrics.hpp"
#include "radar/radar.hpp"
#include "radar/scenario.hpp"

namespace radar {

enum class TuningMode { Oracle, Adaptive };

std::string to_string(TuningMode m);
TuningMode tuning_mode_from_string(const std::string& s);

// Per-round snapshot of what the bound checks need.
struct RoundRecord {
  Point played;
  double loss = 0.0;
  MetaLedger ledger;             // after observing f_t (empty for single learners)
  std::vector<double> hint_err;  // prefix sum_s ||grad f_s(y_s) - M_s||^2 per OMD expert
  bool play_confined = true;     // inside the set the learner may play from
  bool anchors_confined = true;  // every OMD y_t inside the decision set
};

struct RunOutcome {
  std::string algorithm;
  TuningMode mode = TuningMode::Oracle;
  RegretTrace trace;
  std::vector<RoundRecord> records;
  std::vector<Point> comparators;
  LossSequence losses;

  // effective constants
  std::vector<double> etas;
  int n_omd = 0;        // leading OMD experts in `etas`
  double beta = 0.0;    // fixed meta rate (oracle) or last rate used (adaptive)
  double tau = 0.0;
  double zeta = 1.0;
  double D = 0.0;       // decision-set diameter
  double D_meta = 0.0;  // diameter of the set the meta layer plays in
  double V_T_probe = 0.0;  // probe-only variation used for oracle rates
  double F_bar_pass1 = 0.0;
  bool bound_applicable = true;
  int probe_count = VariationProbe::kDefaultProbes;
  std::uint64_t probe_seed = 0;

  double confined_play_fraction = 1.0;
  double confined_anchor_fraction = 1.0;
};

struct RunOptions {
  std::string algorithm = "radar";
  TuningMode mode = TuningMode::Oracle;
  MeanKind mean = MeanKind::Frechet;
  std::optional<double> eta;  // single learners only; default is the grid base
};

// Throws DomainError when the algorithm cannot run on the scenario as asked.
void validate_run(const Scenario& s, const RunOptions& opt);

// Runs `opt.algorithm` on the scenario (twice for oracle-tuned meta rates),
// then fills the trace: losses, comparator losses, cumulative regret, P_t,
// the variation proxy, F_t and the algorithm's pathwise bound at every t.
RunOutcome run_algorithm(Scenario& scenario, const RunOptions& opt);

// Prefix dynamic-regret bound for the run at round t (1-based), +inf when
// no pathwise bound applies (adaptive meta rates).
double regret_bound_at(const RunOutcome& r, const Scenario& s, int t);

// Single-expert bounds.
double rogd_bound(double D, double P, double eta, double zeta, double G, int t);
double omd_bound(double D, double P, double eta, double zeta, double hint_err);
double small_loss_rogd_bound(double D, double P, double eta, double zeta, double L, double F);

std::string trace_csv(const RegretTrace& trace);

}  // namespace radar
