#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radar/convex_set.hpp"
#include "radar/experts.hpp"
#include "radar/losses.hpp"
#include "radar/stepsize.hpp"

namespace radar {

enum class MeanKind { Frechet, Geodesic };

// What every learner is told up front.
struct LearnerSetup {
  std::shared_ptr<const Manifold> manifold;
  GeodesicBall set;
  int T = 1;
  double G = 1.0;
  double L = 0.0;      // smoothness; needed by RADAR_v, RADAR_s, RADAR_b and OMD
  double delta = 0.0;  // improper margin is delta * G
  Point start;         // common initial iterate, projected onto the set
  MeanKind mean = MeanKind::Frechet;
  std::optional<double> beta;  // fixed meta learning rate; empty means the learner's default
  double mean_tol = 1e-9;
};

// Meta-layer bookkeeping exposed for bound checks. Sums run over completed rounds.
struct MetaLedger {
  Eigen::VectorXd weights;          // weights behind the most recent play
  Eigen::VectorXd expert_cum_loss;  // sum_s f_s(x_{s,i})
  double cum_loss = 0.0;            // sum_s f_s(x_s)
  Eigen::VectorXd cum_surrogate;    // sum_s l_{s,i}
  double cum_mixed_surrogate = 0.0; // sum_s <w_s, l_s>
  double sum_sq_pred_err = 0.0;     // sum_s ||l_s - m_s||_inf^2
  double sum_sq_weight_move = 0.0;  // sum_{s>=2} ||w_s - w_{s-1}||_1^2
  double beta = 0.0;                // rate used for the most recent play
  double gamma = 0.0;               // optimism mix (RADAR_b)
};

class OnlineLearner {
 public:
  virtual ~OnlineLearner() = default;
  virtual std::string name() const = 0;
  // x_t for the current round. Calling twice in a round returns the same point.
  virtual const Point& play() = 0;
  virtual void observe(const LossFunction& f) = 0;

  virtual std::vector<double> etas() const = 0;
  virtual std::vector<Point> expert_points() const { return {}; }
  // y_t of every OMD expert (empty for learners without one).
  virtual std::vector<Point> omd_anchors() const { return {}; }
  // Running sum_s ||grad f_s(y_s) - M_s||^2 of every OMD expert.
  virtual std::vector<double> omd_hint_errors() const { return {}; }
  virtual const MetaLedger* ledger() const { return nullptr; }
  // Effective meta rates/diameters, reported in run summaries.
  virtual double meta_diameter() const { return 0.0; }
  virtual double zeta_used() const { return 1.0; }
  int rounds_done() const { return t_; }

 protected:
  int t_ = 0;
};

class RogdLearner final : public OnlineLearner {
 public:
  RogdLearner(const LearnerSetup& s, double eta);
  std::string name() const override { return "rogd"; }
  const Point& play() override { return e_.point(); }
  void observe(const LossFunction& f) override;
  std::vector<double> etas() const override { return {e_.eta()}; }
  double zeta_used() const override { return zeta_; }

 private:
  RogdExpert e_;
  double zeta_;
};

class OmdLearner final : public OnlineLearner {
 public:
  OmdLearner(const LearnerSetup& s, double eta);
  std::string name() const override { return "omd"; }
  const Point& play() override { return e_.propose(); }
  void observe(const LossFunction& f) override;
  std::vector<double> etas() const override { return {e_.eta()}; }
  std::vector<Point> omd_anchors() const override { return {e_.anchor()}; }
  std::vector<double> omd_hint_errors() const override { return {e_.hint_error_sum()}; }
  double zeta_used() const override { return zeta_; }

 private:
  OmdExpert e_;
  double zeta_;
};

// Hedge over R-OGD experts on the doubling grid, weights started at
// (N+1)/(i(i+1)N), plays the weighted mean of expert iterates.
class Radar final : public OnlineLearner {
 public:
  explicit Radar(const LearnerSetup& s);
  // Same, with an explicit grid (used for N = 1 consistency checks).
  Radar(const LearnerSetup& s, std::vector<double> grid);

  std::string name() const override { return "radar"; }
  const Point& play() override;
  void observe(const LossFunction& f) override;
  std::vector<double> etas() const override;
  std::vector<Point> expert_points() const override;
  const MetaLedger* ledger() const override { return &led_; }
  const Eigen::VectorXd& initial_weights() const { return w1_; }
  double meta_diameter() const override { return set_.diameter(); }
  double zeta_used() const override { return zeta_; }

 private:
  std::shared_ptr<const Manifold> m_;
  GeodesicBall set_;
  MeanKind mean_;
  double tol_, beta_, zeta_;
  std::vector<RogdExpert> experts_;
  Eigen::VectorXd w_, w1_;
  MetaLedger led_;
  std::optional<Point> x_;
};

// Shared machinery of the optimistic-Hedge learners (RADAR_v, RADAR_s, RADAR_b).
class OptimisticMeta : public OnlineLearner {
 public:
  const Point& play() override;
  void observe(const LossFunction& f) override;
  std::vector<double> etas() const override;
  std::vector<Point> expert_points() const override;
  std::vector<Point> omd_anchors() const override;
  std::vector<double> omd_hint_errors() const override;
  const MetaLedger* ledger() const override { return &led_; }
  double meta_diameter() const override { return D_; }
  int omd_count() const { return static_cast<int>(omd_.size()); }
  double zeta_used() const override { return zeta_; }
  bool adaptive() const { return !fixed_beta_.has_value(); }
  double tau() const { return tau_; }

 protected:
  OptimisticMeta(const LearnerSetup& s, bool uses_hint, bool mixes_hint, double play_margin);

  void add_omd_experts(const LearnerSetup& s, const StepSizeGrid& grid, double zeta);
  void add_rogd_experts(const LearnerSetup& s, const StepSizeGrid& grid);
  void finish_setup();

  // Rate for the current round from the running accumulators.
  virtual double adaptive_beta() const = 0;

  std::shared_ptr<const Manifold> m_;
  GeodesicBall set_;
  EnlargedSet play_set_;
  MeanKind mean_;
  double tol_;
  double G_, L_, D_, zeta_;
  int n_ = 0;
  std::optional<double> fixed_beta_;
  bool uses_hint_, mixes_hint_;
  double tau_ = 0.0;

  std::vector<OmdExpert> omd_;
  std::vector<RogdExpert> rogd_;

  Eigen::VectorXd w_prev_, w_;
  Eigen::VectorXd m_t_, m_v_;
  double dv_sum_ = 0.0, ds_sum_ = 0.0;     // cumulative ||l - m^v||_2^2 and ||l||_2^2
  double sum_sq_err_v_ = 0.0;              // cumulative ||l - m^v||_inf^2
  std::function<Tangent(const Point&)> prev_grad_;
  std::vector<Point> pts_;
  std::optional<Point> x_;
  MetaLedger led_;

 private:
  Point mean_of(const Eigen::VectorXd& w) const;
};

// OMD experts, optimistic Hedge with hint <grad f_{t-1}(xbar_t), log(xbar_t, x_{t,i})>.
class RadarV final : public OptimisticMeta {
 public:
  explicit RadarV(const LearnerSetup& s);
  std::string name() const override { return "radar_v"; }
  const StepSizeGrid& grid() const { return grid_; }

 protected:
  double adaptive_beta() const override;

 private:
  StepSizeGrid grid_;
};

// R-OGD experts with the small-loss grid, Hedge on linearized losses, no hint.
class RadarS final : public OptimisticMeta {
 public:
  explicit RadarS(const LearnerSetup& s);
  std::string name() const override { return "radar_s"; }
  const StepSizeGrid& grid() const { return grid_; }

 protected:
  double adaptive_beta() const override;

 private:
  StepSizeGrid grid_;
};

// Both expert families; the hint is scaled by gamma_t, itself learned by
// two-expert Hedge with rate tau = 1/(8 N G^2 D^2).
class RadarB final : public OptimisticMeta {
 public:
  explicit RadarB(const LearnerSetup& s);
  // Explicit expert counts; either may be zero (not both).
  RadarB(const LearnerSetup& s, int n_omd, int n_rogd);
  std::string name() const override { return "radar_b"; }
  const CombinedGrid& grid() const { return grid_; }

 protected:
  double adaptive_beta() const override;

 private:
  void build(const LearnerSetup& s);
  CombinedGrid grid_;
};

// Rates the analysis prescribes given the (in hindsight) problem quantities.
double beta_radar(double G, double D, int T);
double beta_cap(double D, double G, double L, double zeta);
double beta_radarv(int N, double D, double G, double L, double zeta, double V);
double beta_radars(int N, double D, double L, double F);
double beta_radarb(int N, double D, double G, double L, double zeta, double V, double F);

std::unique_ptr<OnlineLearner> make_learner(const std::string& algorithm, const LearnerSetup& s);

}  // namespace radar
