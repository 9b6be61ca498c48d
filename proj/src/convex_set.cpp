#include "radar/convex_set.hpp"

#include <cmath>

#include "radar/errors.hpp"

namespace radar {

GeodesicBall::GeodesicBall(std::shared_ptr<const Manifold> m, Point center, double radius)
    : m_(std::move(m)), center_(std::move(center)), radius_(radius) {
  if (!m_) throw DomainError("ball needs a manifold");
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) throw DomainError("ball radius must be positive");
  m_->check_point(center_);
}

bool GeodesicBall::contains(const Point& x) const {
  return m_->dist(center_, x) <= radius_ + kContainTol;
}

Point GeodesicBall::project(const Point& x) const {
  const double d = m_->dist(center_, x);
  if (d <= radius_ + kContainTol) return x;
  Point p = m_->exp(center_, (radius_ / d) * m_->log(center_, x));
  // the ray endpoint is on the boundary up to rounding; make sure a second
  // projection is a no-op
  if (m_->dist(center_, p) > radius_ + kContainTol)
    p = m_->exp(center_, ((radius_ - kContainTol) / d) * m_->log(center_, x));
  return p;
}

EnlargedSet::EnlargedSet(GeodesicBall base, double margin)
    : base_(std::move(base)),
      margin_(margin),
      ball_(base_.manifold_ptr(), base_.center(), base_.radius() + (margin > 0.0 ? margin : 0.0)) {
  if (!(margin >= 0.0) || !std::isfinite(margin)) throw DomainError("enlargement margin must be nonnegative");
}

EnlargedSet enlarge(const GeodesicBall& set, double margin) { return EnlargedSet(set, margin); }

}  // namespace radar
