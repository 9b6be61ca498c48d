#include "radar/runner.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "radar/errors.hpp"
#include "radar/hedge.hpp"

namespace radar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_optimistic(const std::string& a) { return a == "radar_v" || a == "radar_s" || a == "radar_b"; }

// Set each play must land in: improper learners get the delta*G margin.
double play_margin(const std::string& a, const Scenario& s) {
  if (a == "omd" || a == "radar_v" || a == "radar_b") return s.delta * s.G;
  return 0.0;
}

struct Pass {
  std::unique_ptr<OnlineLearner> learner;
  std::vector<RoundRecord> records;
  LossSequence losses;
};

LearnerSetup setup_for(const Scenario& s, const RunOptions& opt) {
  LearnerSetup ls{.manifold = s.manifold,
                  .set = s.set,
                  .T = s.T,
                  .G = s.G,
                  .L = s.L,
                  .delta = s.delta,
                  .start = s.start,
                  .mean = opt.mean};
  return ls;
}

std::unique_ptr<OnlineLearner> build(const std::string& alg, const LearnerSetup& ls, std::optional<double> eta) {
  if (alg == "rogd" && eta) return std::make_unique<RogdLearner>(ls, *eta);
  if (alg == "omd" && eta) return std::make_unique<OmdLearner>(ls, *eta);
  return make_learner(alg, ls);
}

Pass simulate(Scenario& s, const std::string& alg, const LearnerSetup& ls, std::optional<double> eta) {
  Pass p;
  p.learner = build(alg, ls, eta);
  if (s.reset) s.reset();
  const Manifold& m = *s.manifold;
  const double margin = play_margin(alg, s);
  const auto inside = [&](const Point& x, double radius) {
    return m.dist(s.set.center(), x) <= radius + kContainTol;
  };
  p.records.reserve(s.T);
  p.losses.reserve(s.T);
  for (int t = 1; t <= s.T; ++t) {
    const Point x = p.learner->play();
    LossFunction f = s.next_loss(t, x);
    RoundRecord rec;
    rec.played = x;
    rec.loss = f.value(x);
    rec.play_confined = inside(x, s.set.radius() + margin);
    for (const Point& y : p.learner->omd_anchors()) rec.anchors_confined = rec.anchors_confined && inside(y, s.set.radius());
    p.learner->observe(f);
    if (const MetaLedger* led = p.learner->ledger()) rec.ledger = *led;
    rec.hint_err = p.learner->omd_hint_errors();
    p.records.push_back(std::move(rec));
    p.losses.push_back(std::move(f));
  }
  return p;
}

// Optimistic-Hedge meta term: (2 + ln N)/beta + beta sum ||l - m||_inf^2 - sum ||dw||_1^2 / (4 beta).
double optimistic_meta_term(const MetaLedger& led, int n, double beta) {
  return (2.0 + std::log(static_cast<double>(n))) / beta + beta * led.sum_sq_pred_err -
         led.sum_sq_weight_move / (4.0 * beta);
}

}  // namespace

std::string to_string(TuningMode m) { return m == TuningMode::Oracle ? "oracle" : "adaptive"; }

TuningMode tuning_mode_from_string(const std::string& s) {
  if (s == "oracle") return TuningMode::Oracle;
  if (s == "adaptive") return TuningMode::Adaptive;
  throw DomainError("unknown tuning mode '" + s + "' (expected oracle or adaptive)");
}

double rogd_bound(double D, double P, double eta, double zeta, double G, int t) {
  return (D * D + 2.0 * D * P) / (2.0 * eta) + eta * zeta * G * G * t / 2.0;
}

double omd_bound(double D, double P, double eta, double zeta, double hint_err) {
  return eta * zeta * hint_err + (D * D + 2.0 * D * P) / (2.0 * eta);
}

double small_loss_rogd_bound(double D, double P, double eta, double zeta, double L, double F) {
  const double c = eta * zeta * L;
  if (c >= 1.0) return kInf;
  return (D * D + 2.0 * D * P) / (2.0 * eta * (1.0 - c)) + c * F / (1.0 - c);
}

void validate_run(const Scenario& s, const RunOptions& opt) {
  const std::string& alg = opt.algorithm;
  if (alg != "rogd" && alg != "omd" && alg != "radar" && !is_optimistic(alg))
    throw DomainError("unknown algorithm '" + alg + "'");
  if (opt.eta && alg != "rogd" && alg != "omd") throw DomainError("a fixed eta only applies to rogd and omd");
  if (opt.mean == MeanKind::Geodesic && alg != "radar")
    throw DomainError("the geodesic mean is only supported by radar; " + alg + " needs the Frechet mean");
  if ((alg == "omd" || is_optimistic(alg)) && !(s.L > 0.0))
    throw DomainError(alg + " needs a loss family with declared smoothness L; scenario '" + s.kind +
                      "' declares none");
}

RunOutcome run_algorithm(Scenario& s, const RunOptions& opt) {
  validate_run(s, opt);
  const std::string& alg = opt.algorithm;

  RunOutcome r;
  r.algorithm = alg;
  r.mode = opt.mode;
  r.D = s.set.diameter();
  r.probe_count = VariationProbe::kDefaultProbes;
  r.probe_seed = 0;

  LearnerSetup ls = setup_for(s, opt);
  const VariationProbe probe(s.set, r.probe_count, r.probe_seed);

  if (is_optimistic(alg) && opt.mode == TuningMode::Oracle) {
    // First pass with adaptive rates measures V_T and F_T, second pass fixes beta.
    Pass first = simulate(s, alg, ls, std::nullopt);
    const auto* meta = dynamic_cast<const OptimisticMeta*>(first.learner.get());
    const int N = static_cast<int>(first.learner->etas().size());
    const double D = meta->meta_diameter();
    const double zeta_v = meta->zeta_used();
    r.V_T_probe = probe.total(first.losses);
    r.F_bar_pass1 = first.learner->ledger()->cum_loss;
    double beta = 0.0;
    if (alg == "radar_v") beta = beta_radarv(N, D, s.G, s.L, zeta_v, r.V_T_probe);
    else if (alg == "radar_s") beta = beta_radars(N, D, s.L, r.F_bar_pass1);
    else beta = beta_radarb(N, D, s.G, s.L, zeta_v, r.V_T_probe, r.F_bar_pass1);
    ls.beta = beta;
  }

  std::optional<double> eta = opt.eta;
  if (!eta && alg == "rogd")
    eta = stepsize_grid_radar(r.D, s.G, zeta(s.manifold->curvature(), r.D), s.T).base;
  if (!eta && alg == "omd") {
    const double z = zeta(s.manifold->curvature(), r.D + 2.0 * s.delta * s.G);
    eta = stepsize_grid_radarv(r.D, s.G, s.L, z, s.delta, s.T).etas.front();
  }

  Pass run = simulate(s, alg, ls, eta);
  r.records = std::move(run.records);
  r.losses = std::move(run.losses);
  r.etas = run.learner->etas();
  r.zeta = run.learner->zeta_used();
  r.D_meta = run.learner->meta_diameter();
  if (r.D_meta == 0.0) r.D_meta = r.D + 2.0 * play_margin(alg, s);
  if (const auto* meta = dynamic_cast<const OptimisticMeta*>(run.learner.get())) {
    r.n_omd = meta->omd_count();
    r.tau = meta->tau();
    r.bound_applicable = !meta->adaptive();
    if (opt.mode == TuningMode::Adaptive) r.V_T_probe = probe.total(r.losses);
  } else if (alg == "omd") {
    r.n_omd = 1;
  }
  if (!r.records.empty() && r.records.back().ledger.beta > 0.0) r.beta = r.records.back().ledger.beta;

  r.comparators = s.comparators(r.losses);
  const Manifold& m = *s.manifold;

  r.trace.resize(s.T);
  double cum = 0.0, P = 0.0, V = 0.0, F = 0.0;
  int plays_ok = 0, anchors_ok = 0;
  for (int i = 0; i < s.T; ++i) {
    TraceRow& row = r.trace[i];
    const Point& u = r.comparators[i];
    row.t = i + 1;
    row.loss = r.records[i].loss;
    row.comp_loss = r.losses[i].value(u);
    cum += row.loss - row.comp_loss;
    if (i > 0) {
      P += m.dist(r.comparators[i - 1], u);
      V += probe.step(r.losses[i - 1], r.losses[i], {r.records[i].played, u});
    }
    F += row.comp_loss;
    row.cum_regret = cum;
    row.P_t = P;
    row.V_t_proxy = V;
    row.F_t = F;
    plays_ok += r.records[i].play_confined;
    anchors_ok += r.records[i].anchors_confined;
  }
  for (int i = 0; i < s.T; ++i) {
    TraceRow& row = r.trace[i];
    row.bound_value = regret_bound_at(r, s, row.t);
    // Means are solved to a 1e-9 residual, so allow that much per round.
    const double slack = 1e-8 * (1.0 + std::abs(row.bound_value)) + 1e-8 * s.G * row.t;
    row.bound_ok = row.cum_regret <= row.bound_value + slack;
  }
  if (s.T > 0) {
    r.confined_play_fraction = static_cast<double>(plays_ok) / s.T;
    r.confined_anchor_fraction = static_cast<double>(anchors_ok) / s.T;
  }
  return r;
}

double regret_bound_at(const RunOutcome& r, const Scenario& s, int t) {
  if (!r.bound_applicable) return kInf;
  const TraceRow& row = r.trace.at(t - 1);
  const RoundRecord& rec = r.records.at(t - 1);
  const double D = r.D, P = row.P_t, F = row.F_t;
  const double zeta_D = zeta(s.manifold->curvature(), D);
  const double zeta_v = zeta(s.manifold->curvature(), D + 2.0 * s.delta * s.G);
  const std::string& a = r.algorithm;

  if (a == "rogd") return rogd_bound(D, P, r.etas.front(), zeta_D, s.G, t);
  if (a == "omd") return omd_bound(D, P, r.etas.front(), zeta_v, rec.hint_err.front());

  double best = kInf;
  if (a == "radar") {
    const Eigen::VectorXd w1 = radar_initial_weights(static_cast<int>(r.etas.size()));
    const double beta = rec.ledger.beta;
    for (std::size_t i = 0; i < r.etas.size(); ++i) {
      const double meta = std::log(1.0 / w1[i]) / beta + beta * s.G * s.G * D * D * t / 8.0;
      best = std::min(best, meta + rogd_bound(D, P, r.etas[i], zeta_D, s.G, t));
    }
    return best;
  }

  const int N = static_cast<int>(r.etas.size());
  for (int i = 0; i < N; ++i) {
    double expert = kInf;
    if (i < r.n_omd) {
      expert = omd_bound(D, P, r.etas[i], zeta_v, rec.hint_err.at(i));
    } else {
      expert = std::min(rogd_bound(D, P, r.etas[i], zeta_D, s.G, t),
                        small_loss_rogd_bound(D, P, r.etas[i], zeta_D, s.L, F));
    }
    best = std::min(best, expert);
  }
  return optimistic_meta_term(rec.ledger, N, rec.ledger.beta) + best;
}

std::string trace_csv(const RegretTrace& trace) {
  std::ostringstream os;
  os << "t,loss,comp_loss,cum_regret,P_t,V_t_proxy,F_t,bound_value,bound_ok\n";
  char buf[512];
  for (const TraceRow& r : trace) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s\n", r.t, r.loss, r.comp_loss,
                  r.cum_regret, r.P_t, r.V_t_proxy, r.F_t, r.bound_value, r.bound_ok ? "true" : "false");
    os << buf;
  }
  return os.str();
}

}  // namespace radar
