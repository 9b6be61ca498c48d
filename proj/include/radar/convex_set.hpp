#pragma once

#include <memory>

#include "radar/manifold.hpp"

namespace radar {

inline constexpr double kContainTol = 1e-10;

// Closed geodesic ball. Balls are the only decision sets: they have an exact
// projection on every supported geometry and enlarge to balls again.
class GeodesicBall {
 public:
  GeodesicBall(std::shared_ptr<const Manifold> m, Point center, double radius);

  const Manifold& manifold() const { return *m_; }
  std::shared_ptr<const Manifold> manifold_ptr() const { return m_; }
  const Point& center() const { return center_; }
  double radius() const { return radius_; }
  double diameter() const { return 2.0 * radius_; }

  bool contains(const Point& x) const;
  Point project(const Point& x) const;

 private:
  std::shared_ptr<const Manifold> m_;
  Point center_;
  double radius_;
};

// N_c = {x : d(x, N) <= c}. For a ball base this is the concentric ball with
// radius + c; the reported diameter is D + 2c.
class EnlargedSet {
 public:
  EnlargedSet(GeodesicBall base, double margin);

  const GeodesicBall& base() const { return base_; }
  double margin() const { return margin_; }
  double diameter() const { return base_.diameter() + 2.0 * margin_; }
  const GeodesicBall& as_ball() const { return ball_; }

  bool contains(const Point& x) const { return ball_.contains(x); }
  Point project(const Point& x) const { return ball_.project(x); }

 private:
  GeodesicBall base_;
  double margin_;
  GeodesicBall ball_;
};

EnlargedSet enlarge(const GeodesicBall& set, double margin);

}  // namespace radar
