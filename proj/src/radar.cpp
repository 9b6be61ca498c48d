#include "radar/radar.hpp"

#include <cmath>
#include <stdexcept>

#include "radar/errors.hpp"
#include "radar/hedge.hpp"
#include "radar/means.hpp"

namespace radar {

namespace {

void require_smooth(const LearnerSetup& s, const char* who) {
  if (!(s.L > 0.0)) throw DomainError(std::string(who) + " needs a loss family with declared L > 0");
}
void require_margin(const LearnerSetup& s, const char* who) {
  if (!(s.delta > 0.0)) throw DomainError(std::string(who) + " needs an improper margin delta > 0");
}

Point checked_mean(const Manifold& m, MeanKind kind, const std::vector<Point>& pts, const Eigen::VectorXd& w,
                   double tol, const GeodesicBall& hull) {
  Point x = kind == MeanKind::Frechet ? frechet_mean(m, pts, w, tol) : geodesic_mean(m, pts, w);
  // Every expert sits in `hull`, a convex set, so the mean must too.
  const double excess = m.dist(hull.center(), x) - hull.radius();
  if (excess > 1e-7) throw std::logic_error("weighted mean left the convex hull ball by " + std::to_string(excess));
  return hull.project(x);
}

}  // namespace

// ---------------- single-step learners ----------------

RogdLearner::RogdLearner(const LearnerSetup& s, double eta)
    : e_(s.manifold, s.set, eta, s.start), zeta_(zeta(s.manifold->curvature(), s.set.diameter())) {}

void RogdLearner::observe(const LossFunction& f) {
  e_.update(f);
  ++t_;
}

OmdLearner::OmdLearner(const LearnerSetup& s, double eta)
    : e_(s.manifold, s.set, eta, s.delta, s.G, s.L,
         zeta(s.manifold->curvature(), s.set.diameter() + 2.0 * s.delta * s.G), s.start),
      zeta_(zeta(s.manifold->curvature(), s.set.diameter() + 2.0 * s.delta * s.G)) {
  require_margin(s, "OMD");
}

void OmdLearner::observe(const LossFunction& f) {
  e_.update(f);
  ++t_;
}

// ---------------- RADAR ----------------

Radar::Radar(const LearnerSetup& s)
    : Radar(s, stepsize_grid_radar(s.set.diameter(), s.G, zeta(s.manifold->curvature(), s.set.diameter()), s.T)
                   .etas) {}

Radar::Radar(const LearnerSetup& s, std::vector<double> grid)
    : m_(s.manifold),
      set_(s.set),
      mean_(s.mean),
      tol_(s.mean_tol),
      beta_(s.beta ? *s.beta : beta_radar(s.G, s.set.diameter(), s.T)),
      zeta_(zeta(s.manifold->curvature(), s.set.diameter())) {
  if (grid.empty()) throw DomainError("RADAR needs at least one step size");
  for (double eta : grid) experts_.emplace_back(m_, set_, eta, s.start);
  w1_ = radar_initial_weights(static_cast<int>(grid.size()));
  w_ = w1_;
  led_.expert_cum_loss = Eigen::VectorXd::Zero(w_.size());
  led_.cum_surrogate = Eigen::VectorXd::Zero(w_.size());
  led_.beta = beta_;
}

std::vector<double> Radar::etas() const {
  std::vector<double> out;
  for (const auto& e : experts_) out.push_back(e.eta());
  return out;
}

std::vector<Point> Radar::expert_points() const {
  std::vector<Point> out;
  for (const auto& e : experts_) out.push_back(e.point());
  return out;
}

const Point& Radar::play() {
  if (!x_) {
    x_ = checked_mean(*m_, mean_, expert_points(), w_, tol_, set_);
    led_.weights = w_;
  }
  return *x_;
}

void Radar::observe(const LossFunction& f) {
  const Point x = play();
  Eigen::VectorXd losses(experts_.size());
  for (std::size_t i = 0; i < experts_.size(); ++i) losses[i] = f.value(experts_[i].point());
  led_.cum_loss += f.value(x);
  led_.expert_cum_loss += losses;
  w_ = hedge_update(w_, losses, beta_);
  for (auto& e : experts_) e.update(f);
  x_.reset();
  ++t_;
}

// ---------------- optimistic meta ----------------

OptimisticMeta::OptimisticMeta(const LearnerSetup& s, bool uses_hint, bool mixes_hint, double play_margin)
    : m_(s.manifold),
      set_(s.set),
      play_set_(enlarge(s.set, play_margin)),
      mean_(s.mean),
      tol_(s.mean_tol),
      G_(s.G),
      L_(s.L),
      D_(play_set_.diameter()),
      zeta_(zeta(s.manifold->curvature(), play_set_.diameter())),
      fixed_beta_(s.beta),
      uses_hint_(uses_hint),
      mixes_hint_(mixes_hint) {
  if (fixed_beta_ && !(*fixed_beta_ > 0.0)) throw DomainError("meta learning rate must be positive");
}

void OptimisticMeta::add_omd_experts(const LearnerSetup& s, const StepSizeGrid& grid, double zeta) {
  for (double eta : grid.etas) omd_.emplace_back(m_, set_, eta, s.delta, s.G, s.L, zeta, s.start);
}

void OptimisticMeta::add_rogd_experts(const LearnerSetup& s, const StepSizeGrid& grid) {
  for (double eta : grid.etas) rogd_.emplace_back(m_, set_, eta, s.start);
}

void OptimisticMeta::finish_setup() {
  n_ = static_cast<int>(omd_.size() + rogd_.size());
  if (n_ < 1) throw DomainError("meta learner needs at least one expert");
  w_prev_ = Eigen::VectorXd::Constant(n_, 1.0 / n_);
  w_ = w_prev_;
  m_t_ = m_v_ = Eigen::VectorXd::Zero(n_);
  led_.expert_cum_loss = Eigen::VectorXd::Zero(n_);
  led_.cum_surrogate = Eigen::VectorXd::Zero(n_);
  led_.weights = w_;
  tau_ = 1.0 / (8.0 * n_ * G_ * G_ * D_ * D_);
}

std::vector<double> OptimisticMeta::etas() const {
  std::vector<double> out;
  for (const auto& e : omd_) out.push_back(e.eta());
  for (const auto& e : rogd_) out.push_back(e.eta());
  return out;
}

std::vector<Point> OptimisticMeta::expert_points() const {
  if (x_) return pts_;
  std::vector<Point> out;
  for (const auto& e : rogd_) out.push_back(e.point());
  return out;  // OMD points only exist once the round has been proposed
}

std::vector<Point> OptimisticMeta::omd_anchors() const {
  std::vector<Point> out;
  for (const auto& e : omd_) out.push_back(e.anchor());
  return out;
}

std::vector<double> OptimisticMeta::omd_hint_errors() const {
  std::vector<double> out;
  for (const auto& e : omd_) out.push_back(e.hint_error_sum());
  return out;
}

Point OptimisticMeta::mean_of(const Eigen::VectorXd& w) const {
  return checked_mean(*m_, mean_, pts_, w, tol_, play_set_.as_ball());
}

const Point& OptimisticMeta::play() {
  if (x_) return *x_;
  pts_.clear();
  for (auto& e : omd_) pts_.push_back(e.propose());
  for (const auto& e : rogd_) pts_.push_back(e.point());

  const double beta = fixed_beta_ ? *fixed_beta_ : adaptive_beta();

  m_v_.setZero();
  if (uses_hint_ && prev_grad_) {
    const Point xbar = mean_of(w_prev_);
    const Tangent g = prev_grad_(xbar);
    for (int i = 0; i < n_; ++i) m_v_[i] = m_->inner(xbar, g, m_->log(xbar, pts_[i]));
  }
  double gamma = uses_hint_ ? 1.0 : 0.0;
  if (mixes_hint_) {
    // two-expert Hedge between hint m^v and hint 0, written as a logistic
    gamma = 1.0 / (1.0 + std::exp(-tau_ * (ds_sum_ - dv_sum_)));
  }
  m_t_ = gamma * m_v_;
  w_ = optimistic_hedge_weights(led_.cum_surrogate, m_t_, beta);
  x_ = mean_of(w_);
  led_.weights = w_;
  led_.beta = beta;
  led_.gamma = gamma;
  return *x_;
}

void OptimisticMeta::observe(const LossFunction& f) {
  const Point x = play();
  const Tangent g = f.grad(x);
  Eigen::VectorXd ell(n_), vals(n_);
  for (int i = 0; i < n_; ++i) {
    ell[i] = m_->inner(x, g, m_->log(x, pts_[i]));
    vals[i] = f.value(pts_[i]);
  }
  led_.cum_loss += f.value(x);
  led_.expert_cum_loss += vals;
  led_.cum_mixed_surrogate += w_.dot(ell);
  const double err = (ell - m_t_).lpNorm<Eigen::Infinity>();
  led_.sum_sq_pred_err += err * err;
  if (t_ >= 1) {
    const double mv = (w_ - w_prev_).lpNorm<1>();
    led_.sum_sq_weight_move += mv * mv;
  }
  dv_sum_ += (ell - m_v_).squaredNorm();
  ds_sum_ += ell.squaredNorm();
  const double ev = (ell - m_v_).lpNorm<Eigen::Infinity>();
  sum_sq_err_v_ += ev * ev;
  led_.cum_surrogate += ell;

  for (auto& e : omd_) e.update(f);
  for (auto& e : rogd_) e.update(f);
  prev_grad_ = f.grad;
  w_prev_ = w_;
  x_.reset();
  ++t_;
}

// ---------------- RADAR_v ----------------

RadarV::RadarV(const LearnerSetup& s) : OptimisticMeta(s, true, false, s.delta * s.G) {
  require_smooth(s, "RADAR_v");
  require_margin(s, "RADAR_v");
  grid_ = stepsize_grid_radarv(s.set.diameter(), s.G, s.L, zeta_, s.delta, s.T);
  add_omd_experts(s, grid_, zeta_);
  finish_setup();
}

double RadarV::adaptive_beta() const {
  const double b = std::sqrt((2.0 + std::log(n_)) / (1.0 + led_.sum_sq_pred_err));
  return std::min(b, beta_cap(D_, G_, L_, zeta_));
}

// ---------------- RADAR_s ----------------

RadarS::RadarS(const LearnerSetup& s) : OptimisticMeta(s, false, false, 0.0) {
  require_smooth(s, "RADAR_s");
  grid_ = stepsize_grid_radars(s.set.diameter(), s.G, s.L, zeta_, s.T);
  add_rogd_experts(s, grid_);
  finish_setup();
}

double RadarS::adaptive_beta() const {
  return std::sqrt((2.0 + std::log(n_)) / (1.0 + 2.0 * L_ * D_ * D_ * led_.cum_loss));
}

// ---------------- RADAR_b ----------------

RadarB::RadarB(const LearnerSetup& s) : OptimisticMeta(s, true, true, s.delta * s.G) {
  require_smooth(s, "RADAR_b");
  require_margin(s, "RADAR_b");
  grid_ = stepsize_grid_radarb(s.set.diameter(), s.G, s.L, zeta_, zeta(s.manifold->curvature(), s.set.diameter()),
                               s.delta, s.T);
  build(s);
}

RadarB::RadarB(const LearnerSetup& s, int n_omd, int n_rogd)
    : OptimisticMeta(s, n_omd > 0, n_omd > 0, s.delta * s.G) {
  require_smooth(s, "RADAR_b");
  require_margin(s, "RADAR_b");
  if (n_omd < 0 || n_rogd < 0 || n_omd + n_rogd == 0) throw DomainError("RADAR_b needs a positive expert count");
  grid_ = stepsize_grid_radarb(s.set.diameter(), s.G, s.L, zeta_, zeta(s.manifold->curvature(), s.set.diameter()),
                               s.delta, s.T);
  grid_.v.etas.resize(std::min<std::size_t>(grid_.v.etas.size(), n_omd));
  grid_.s.etas.resize(std::min<std::size_t>(grid_.s.etas.size(), n_rogd));
  build(s);
}

void RadarB::build(const LearnerSetup& s) {
  add_omd_experts(s, grid_.v, zeta_);
  add_rogd_experts(s, grid_.s);
  // With no OMD family there is nothing for the hint to help; gamma stays 0.
  if (omd_.empty()) uses_hint_ = mixes_hint_ = false;
  finish_setup();
}

double RadarB::adaptive_beta() const {
  const double q = std::min(sum_sq_err_v_, D_ * D_ * led_.cum_loss) + 8.0 * G_ * G_ * D_ * D_ * std::log(2.0);
  const double b = std::sqrt((2.0 + std::log(n_)) / (n_ * (1.0 + q)));
  return std::min(b, beta_cap(D_, G_, L_, zeta_));
}

// ---------------- rates ----------------

double beta_radar(double G, double D, int T) {
  if (!(G > 0.0) || !(D > 0.0) || T < 1) throw DomainError("beta_radar: constants must be positive");
  return std::sqrt(8.0 / (G * G * D * D * T));
}

double beta_cap(double D, double G, double L, double zeta) {
  return 1.0 / std::sqrt(12.0 * (std::pow(D, 4) * L * L + D * D * G * G * zeta * zeta));
}

double beta_radarv(int N, double D, double G, double L, double zeta, double V) {
  const double cap = beta_cap(D, G, L, zeta);
  if (!(V > 0.0)) return cap;
  return std::min(std::sqrt((2.0 + std::log(N)) / (3.0 * D * D * V)), cap);
}

double beta_radars(int N, double D, double L, double F) {
  return std::sqrt((2.0 + std::log(N)) / (2.0 * L * D * D * std::max(F, 1e-12)));
}

double beta_radarb(int N, double D, double G, double L, double zeta, double V, double F) {
  const double q = D * D * std::min(3.0 * (V + G * G), F) + 8.0 * G * G * D * D * std::log(2.0);
  return std::min(std::sqrt((2.0 + std::log(N)) / (N * q)), beta_cap(D, G, L, zeta));
}

std::unique_ptr<OnlineLearner> make_learner(const std::string& algorithm, const LearnerSetup& s) {
  const double D = s.set.diameter();
  if (algorithm == "rogd") {
    const double z = zeta(s.manifold->curvature(), D);
    return std::make_unique<RogdLearner>(s, std::sqrt(D * D / (s.G * s.G * z * s.T)));
  }
  if (algorithm == "omd") {
    require_smooth(s, "OMD");
    require_margin(s, "OMD");
    const double z = zeta(s.manifold->curvature(), D + 2.0 * s.delta * s.G);
    const double eta = std::min(std::sqrt(D * D / (8.0 * z * s.G * s.G * s.T)), omd_max_step(s.delta, s.G, s.L, z, s.G));
    return std::make_unique<OmdLearner>(s, eta);
  }
  if (algorithm == "radar") return std::make_unique<Radar>(s);
  if (algorithm == "radar_v") return std::make_unique<RadarV>(s);
  if (algorithm == "radar_s") return std::make_unique<RadarS>(s);
  if (algorithm == "radar_b") return std::make_unique<RadarB>(s);
  throw DomainError("unknown algorithm '" + algorithm + "'");
}

}  // namespace radar
