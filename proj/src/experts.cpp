#include "radar/experts.hpp"

#include <cmath>
#include <sstream>

#include "radar/errors.hpp"
#include "radar/stepsize.hpp"

namespace radar {

Point rogd_step(const Manifold& m, const Point& x, const Tangent& g, double eta, const GeodesicBall& set) {
  m.check_tangent(x, g);
  if (!(eta >= 0.0)) throw DomainError("R-OGD step size must be nonnegative");
  return set.project(m.exp(x, -eta * g));
}

OmdStep omd_round(const Manifold& m, const Point& y, const Tangent& hint,
                  const std::function<Tangent(const Point&)>& observe, double eta, const GeodesicBall& set,
                  double margin) {
  m.check_tangent(y, hint);
  if (!(eta >= 0.0)) throw DomainError("OMD step size must be nonnegative");
  const EnlargedSet wide = enlarge(set, margin);
  OmdStep s;
  s.x_prime = m.exp(y, -eta * hint);
  s.played = wide.project(s.x_prime);
  s.grad = observe(s.x_prime);
  m.check_tangent(s.x_prime, s.grad);
  s.y_next = set.project(m.exp(s.x_prime, -eta * s.grad + m.log(s.x_prime, y)));
  return s;
}

RogdExpert::RogdExpert(std::shared_ptr<const Manifold> m, const GeodesicBall& set, double eta, Point start)
    : m_(std::move(m)), set_(set), eta_(eta), x_(set.project(start)) {
  if (!(eta > 0.0)) throw DomainError("R-OGD step size must be positive");
}

void RogdExpert::update(const LossFunction& f) { x_ = rogd_step(*m_, x_, f.grad(x_), eta_, set_); }

OmdExpert::OmdExpert(std::shared_ptr<const Manifold> m, const GeodesicBall& set, double eta, double delta,
                     double G, double L, double zeta, Point start)
    : m_(std::move(m)), set_(set), eta_(eta), margin_(delta * G), y_(set.project(start)) {
  const double cap = omd_max_step(delta, G, L, zeta, G);
  // a hair of slack so grids clamped exactly at the cap pass
  if (!(eta > 0.0) || eta > cap * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "OMD step size " << eta << " violates the admissible maximum " << cap;
    throw DomainError(os.str());
  }
}

const Point& OmdExpert::propose() {
  if (proposed_) return x_;
  hint_ = prev_grad_ ? prev_grad_(y_) : m_->zero(y_);
  x_prime_ = m_->exp(y_, -eta_ * hint_);
  x_ = enlarge(set_, margin_).project(x_prime_);
  proposed_ = true;
  return x_;
}

void OmdExpert::update(const LossFunction& f) {
  propose();
  const Tangent gy = f.grad(y_);
  const Tangent diff = gy - hint_;
  hint_err_ += m_->inner(y_, diff, diff);

  const Tangent g = f.grad(x_prime_);
  y_ = set_.project(m_->exp(x_prime_, -eta_ * g + m_->log(x_prime_, y_)));
  prev_grad_ = f.grad;
  proposed_ = false;
}

}  // namespace radar
