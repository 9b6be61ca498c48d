#pragma once

#include <functional>
#include <memory>

#include "radar/convex_set.hpp"
#include "radar/losses.hpp"

namespace radar {

// project(set, exp(x, -eta g)).
Point rogd_step(const Manifold& m, const Point& x, const Tangent& g, double eta, const GeodesicBall& set);

struct OmdStep {
  Point x_prime;   // exp(y, -eta M)
  Point played;    // x_prime projected onto the enlarged set
  Tangent grad;    // gradient of f_t at x_prime
  Point y_next;
};

// One optimistic extragradient round with improper plays:
//   x' = exp(y, -eta M), x = proj_{N_margin}(x'),
//   y+ = proj_N exp(x', -eta grad f(x') + log(x', y)).
OmdStep omd_round(const Manifold& m, const Point& y, const Tangent& hint,
                  const std::function<Tangent(const Point&)>& observe, double eta, const GeodesicBall& set,
                  double margin);

class RogdExpert {
 public:
  RogdExpert(std::shared_ptr<const Manifold> m, const GeodesicBall& set, double eta, Point start);

  const Point& point() const { return x_; }
  double eta() const { return eta_; }
  // Gradient step with the loss's own gradient at the current iterate.
  void update(const LossFunction& f);

 private:
  std::shared_ptr<const Manifold> m_;
  GeodesicBall set_;
  double eta_;
  Point x_;
};

// OMD expert with hint M_t = grad f_{t-1}(y_t) (zero in the first round).
class OmdExpert {
 public:
  // Throws DomainError when eta exceeds omd_max_step(delta, G, L, zeta, G).
  OmdExpert(std::shared_ptr<const Manifold> m, const GeodesicBall& set, double eta, double delta, double G,
            double L, double zeta, Point start);

  double eta() const { return eta_; }
  double margin() const { return margin_; }
  const Point& anchor() const { return y_; }  // y_t
  // Computes and returns x_t for the current round. Idempotent within a round.
  const Point& propose();
  // Consumes f_t: advances y and records ||grad f_t(y_t) - M_t||^2.
  void update(const LossFunction& f);

  double hint_error_sum() const { return hint_err_; }

 private:
  std::shared_ptr<const Manifold> m_;
  GeodesicBall set_;
  double eta_, margin_;
  Point y_;
  std::function<Tangent(const Point&)> prev_grad_;
  bool proposed_ = false;
  Tangent hint_;
  Point x_prime_, x_;
  double hint_err_ = 0.0;
};

}  // namespace radar
