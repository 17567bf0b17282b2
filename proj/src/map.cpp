#include "ordcomp/map.hpp"

#include <algorithm>

#include "ordcomp/error.hpp"

namespace ordcomp {

SpaceMap::SpaceMap(SpacePtr source, SpacePtr target, std::vector<Point> named_images,
                   std::vector<BlockRule> rules, std::map<Point, Point> exceptions)
    : source_(std::move(source)),
      target_(std::move(target)),
      named_(std::move(named_images)),
      rules_(std::move(rules)),
      exceptions_(std::move(exceptions)) {
  const Carrier& s = source_->carrier();
  const Carrier& t = target_->carrier();
  if (named_.size() != s.named_count()) throw InputError("map needs one image per named point");
  if (rules_.size() != s.block_count()) throw InputError("map needs one rule per block");
  for (const auto& p : named_)
    if (!t.contains(p)) throw InputError("map image outside the target");
  for (const auto& r : rules_) {
    if (r.kind == BlockRule::Kind::IntoBlock && r.block >= t.block_count())
      throw InputError("map rule names an unknown target block");
    if (r.kind == BlockRule::Kind::Constant && !t.contains(r.point))
      throw InputError("map rule constant outside the target");
  }
  for (const auto& [from, to] : exceptions_) {
    if (from.is_named() || !s.contains(from)) throw InputError("map exception must be a block point");
    if (!t.contains(to)) throw InputError("map exception image outside the target");
  }
}

SpaceMap SpaceMap::from_table(SpacePtr source, SpacePtr target, const std::vector<int>& images) {
  if (!source->is_finite()) throw PreconditionError("from_table needs a finite source");
  std::vector<Point> named;
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= target->carrier().named_count())
      throw InputError("map table value out of range");
    named.push_back(Point::named(static_cast<std::uint32_t>(v)));
  }
  return SpaceMap(std::move(source), std::move(target), std::move(named));
}

SpaceMap SpaceMap::identity(SpacePtr x) {
  std::vector<Point> named;
  for (std::uint32_t i = 0; i < x->carrier().named_count(); ++i) named.push_back(Point::named(i));
  std::vector<BlockRule> rules;
  for (std::uint32_t b = 0; b < x->carrier().block_count(); ++b)
    rules.push_back({BlockRule::Kind::IntoBlock, b, {}});
  return SpaceMap(x, x, std::move(named), std::move(rules));
}

Point SpaceMap::operator()(const Point& p) const {
  if (!source_->carrier().contains(p)) throw InputError("point outside the map's source");
  if (p.is_named()) return named_[p.id];
  if (auto it = exceptions_.find(p); it != exceptions_.end()) return it->second;
  const auto& r = rules_[p.id];
  if (r.kind == BlockRule::Kind::Constant) return r.point;
  return Point::block(r.block, p.index);
}

RSet SpaceMap::image(const RSet& s) const {
  require_same_carrier(source_->carrier(), s.carrier());
  const CarrierPtr& tc = target_->carrier_ptr();
  std::vector<Point> points;
  for (auto i : s.named().indices()) points.push_back(named_[i]);
  RSet out = RSet::empty(tc);
  for (std::uint32_t b = 0; b < s.carrier().block_count(); ++b) {
    Trace regular = s.trace(b);
    std::vector<std::uint64_t> exc;
    for (const auto& [from, to] : exceptions_) {
      if (from.id != b) continue;
      if (regular.contains(from.index)) points.push_back(to);
      exc.push_back(from.index);
    }
    // Drop the exceptional indices from the regular part.
    std::vector<std::uint64_t> elems;
    if (regular.cofinite)
      std::set_union(regular.elems.begin(), regular.elems.end(), exc.begin(), exc.end(),
                     std::back_inserter(elems));
    else
      std::set_difference(regular.elems.begin(), regular.elems.end(), exc.begin(), exc.end(),
                          std::back_inserter(elems));
    regular.elems = std::move(elems);
    if (regular.is_empty()) continue;
    const auto& r = rules_[b];
    if (r.kind == BlockRule::Kind::Constant) {
      points.push_back(r.point);
    } else {
      std::vector<Trace> traces(tc->block_count());
      traces[r.block] = regular;
      out = out | RSet(tc, std::move(traces), Bits(tc->named_count()));
    }
  }
  return out | RSet::of(tc, points);
}

RSet SpaceMap::preimage(const RSet& t) const {
  require_same_carrier(target_->carrier(), t.carrier());
  const CarrierPtr& sc = source_->carrier_ptr();
  Bits named(sc->named_count());
  for (std::uint32_t i = 0; i < sc->named_count(); ++i)
    if (t.contains(named_[i])) named.set(i);
  std::vector<Trace> traces;
  for (const auto& r : rules_) {
    if (r.kind == BlockRule::Kind::Constant)
      traces.push_back({t.contains(r.point), {}});
    else
      traces.push_back(t.trace(r.block));
  }
  RSet out(sc, std::move(traces), std::move(named));
  std::vector<Point> add, remove;
  for (const auto& [from, to] : exceptions_) (t.contains(to) ? add : remove).push_back(from);
  return (out - RSet::of(sc, remove)) | RSet::of(sc, add);
}

std::vector<std::uint64_t> SpaceMap::support() const {
  std::vector<std::uint64_t> extra;
  for (const auto& p : named_)
    if (!p.is_named()) extra.push_back(p.index);
  for (const auto& r : rules_)
    if (r.kind == BlockRule::Kind::Constant && !r.point.is_named()) extra.push_back(r.point.index);
  for (const auto& [from, to] : exceptions_) {
    extra.push_back(from.index);
    if (!to.is_named()) extra.push_back(to.index);
  }
  auto s = support_indices(*source_, {}, extra);
  auto t = support_indices(*target_, {}, s);
  return t;
}

std::vector<int> SpaceMap::table() const {
  if (!source_->is_finite() || !target_->is_finite())
    throw PreconditionError("table() needs finite spaces");
  std::vector<int> out;
  for (const auto& p : named_) out.push_back(static_cast<int>(p.id));
  return out;
}

// ---------------------------------------------------------------- checks

std::optional<RSet> check_continuous(const SpaceMap& f) {
  for (const auto& g : clopen_generators(f.target(), f.target_reps()))
    if (!classify_set(f.source().carrier(), f.preimage(g)).clopen) return g;
  return std::nullopt;
}

std::optional<PairWitness> check_order_preserving(const SpaceMap& f) {
  const auto reps = f.source_reps();
  for (const auto& x : reps.points)
    for (const auto& y : reps.points)
      if (x != y && f.source().leq(x, y) && !f.target().leq(f(x), f(y))) return PairWitness{x, y};
  return std::nullopt;
}

std::optional<PairWitness> check_injective(const SpaceMap& f) {
  const auto reps = f.source_reps();
  std::map<Point, Point> seen;
  for (const auto& x : reps.points) {
    auto [it, fresh] = seen.emplace(f(x), x);
    if (!fresh) return PairWitness{it->second, x};
  }
  return std::nullopt;
}

std::optional<PairWitness> check_order_embedding(const SpaceMap& f) {
  const auto reps = f.source_reps();
  for (const auto& x : reps.points)
    for (const auto& y : reps.points)
      if (f.source().leq(x, y) != f.target().leq(f(x), f(y))) return PairWitness{x, y};
  return std::nullopt;
}

}  // namespace ordcomp
