#include "ordcomp/order.hpp"

#include "ordcomp/error.hpp"

namespace ordcomp {

namespace {

bool subsumed(const Rectangle& r, const std::vector<Rectangle>& rects) {
  for (const auto& o : rects)
    if (r.lower.subset_of(o.lower) && r.upper.subset_of(o.upper)) return true;
  return false;
}

// An off-diagonal pair inside a × b, if any.
std::optional<std::pair<Point, Point>> off_diagonal(const RSet& a, const RSet& b) {
  auto x = a.pick();
  if (!x) return std::nullopt;
  if (auto y = b.pick_other_than(*x)) return std::pair{*x, *y};
  // b == {x}; try another point of a.
  if (!b.contains(*x)) return std::nullopt;
  if (auto x2 = a.pick_other_than(*x)) return std::pair{*x2, *x};
  return std::nullopt;
}

}  // namespace

std::variant<OrderPresentation, AntisymmetryViolation> OrderPresentation::validate(
    CarrierPtr carrier, std::vector<Rectangle> rectangles) {
  std::vector<Rectangle> rects;
  for (auto& r : rectangles) {
    require_same_carrier(*carrier, r.lower.carrier());
    require_same_carrier(*carrier, r.upper.carrier());
    if (r.lower.is_empty() || r.upper.is_empty()) continue;
    if (!subsumed(r, rects)) rects.push_back(std::move(r));
  }

  // Composition fixpoint. New rectangles are built from existing lower and
  // upper sides only, so the loop terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n = rects.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!rects[i].upper.intersects(rects[j].lower)) continue;
        Rectangle c{rects[i].lower, rects[j].upper};
        if (subsumed(c, rects)) continue;
        rects.push_back(std::move(c));
        changed = true;
      }
    }
  }

  for (std::size_t i = 0; i < rects.size(); ++i) {
    for (std::size_t j = i; j < rects.size(); ++j) {
      // x ∈ lower_i ∩ upper_j and y ∈ upper_i ∩ lower_j give x ≤ y ≤ x.
      auto xs = rects[i].lower & rects[j].upper;
      auto ys = rects[i].upper & rects[j].lower;
      if (auto w = off_diagonal(xs, ys)) return AntisymmetryViolation{w->first, w->second};
    }
  }
  return OrderPresentation(std::move(carrier), std::move(rects));
}

OrderPresentation OrderPresentation::make(CarrierPtr carrier, std::vector<Rectangle> rectangles) {
  auto v = validate(carrier, std::move(rectangles));
  if (auto* bad = std::get_if<AntisymmetryViolation>(&v))
    throw InputError("order is not antisymmetric: " + carrier->format(bad->x) + " and " +
                     carrier->format(bad->y));
  return std::get<OrderPresentation>(std::move(v));
}

OrderPresentation OrderPresentation::discrete(CarrierPtr carrier) {
  return OrderPresentation(std::move(carrier), {});
}

bool OrderPresentation::leq(const Point& x, const Point& y) const {
  if (!carrier_->contains(x) || !carrier_->contains(y)) throw InputError("unknown point");
  if (x == y) return true;
  for (const auto& r : rects_)
    if (r.lower.contains(x) && r.upper.contains(y)) return true;
  return false;
}

RSet OrderPresentation::upclose(const RSet& s) const {
  require_same_carrier(*carrier_, s.carrier());
  RSet out = s;
  for (const auto& r : rects_)
    if (r.lower.intersects(s)) out = out | r.upper;
  return out;
}

RSet OrderPresentation::downclose(const RSet& s) const {
  require_same_carrier(*carrier_, s.carrier());
  RSet out = s;
  for (const auto& r : rects_)
    if (r.upper.intersects(s)) out = out | r.lower;
  return out;
}

}  // namespace ordcomp
