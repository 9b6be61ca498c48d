#include "radar/metrics.hpp"

#include "radar/errors.hpp"

namespace radar {

double path_length(const Manifold& m, const std::vector<Point>& comparators) {
  double p = 0.0;
  for (std::size_t t = 1; t < comparators.size(); ++t) p += m.dist(comparators[t - 1], comparators[t]);
  return p;
}

double comparator_loss(const LossSequence& losses, const std::vector<Point>& comparators) {
  if (losses.size() != comparators.size()) throw DomainError("one comparator per loss expected");
  double f = 0.0;
  for (std::size_t t = 0; t < losses.size(); ++t) f += losses[t].value(comparators[t]);
  return f;
}

VariationProbe::VariationProbe(const GeodesicBall& set, int count, std::uint64_t seed)
    : m_(set.manifold_ptr()), seed_(seed) {
  Rng rng(seed);
  probes_.push_back(set.center());
  while (static_cast<int>(probes_.size()) < count) probes_.push_back(m_->random_point(set.center(), set.radius(), rng));
}

double VariationProbe::step(const LossFunction& prev, const LossFunction& cur, const std::vector<Point>& extra) const {
  double best = 0.0;
  auto probe = [&](const Point& x) {
    const Tangent d = prev.grad(x) - cur.grad(x);
    best = std::max(best, m_->inner(x, d, d));
  };
  for (const auto& x : probes_) probe(x);
  for (const auto& x : extra) probe(x);
  return best;
}

double VariationProbe::total(const LossSequence& losses) const {
  double v = 0.0;
  for (std::size_t t = 1; t < losses.size(); ++t) v += step(losses[t - 1], losses[t]);
  return v;
}

RegretSummary summarize(const RegretTrace& trace) {
  if (trace.empty()) return {};
  const auto& last = trace.back();
  return {last.P_t, last.V_t_proxy, last.F_t, last.cum_regret};
}

}  // namespace radar
