#include "ordcomp/space.hpp"

#include <algorithm>

#include "ordcomp/error.hpp"

namespace ordcomp {

std::vector<std::uint64_t> support_indices(const SpacePresentation& x, std::span<const RSet> extra,
                                           std::span<const std::uint64_t> extra_indices) {
  std::vector<std::uint64_t> out(extra_indices.begin(), extra_indices.end());
  for (const auto& r : x.order().rectangles()) {
    r.lower.collect_indices(out);
    r.upper.collect_indices(out);
  }
  for (const auto& s : extra) s.collect_indices(out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Representatives representatives(const SpacePresentation& x, std::vector<std::uint64_t> support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  Representatives r;
  r.support = support.size();
  r.indices = std::move(support);
  const Carrier& c = x.carrier();
  if (c.block_count() > 0) {
    std::uint64_t g = r.indices.empty() ? 0 : r.indices.back() + 1;
    r.indices.push_back(g);
    r.indices.push_back(g + 1);
  }
  for (std::uint32_t i = 0; i < c.named_count(); ++i) r.points.push_back(Point::named(i));
  for (std::uint32_t b = 0; b < c.block_count(); ++b)
    for (auto n : r.indices) r.points.push_back(Point::block(b, n));
  return r;
}

Representatives representatives(const SpacePresentation& x) {
  return representatives(x, support_indices(x));
}

// ---------------------------------------------------------------- Skeleton

Skeleton::Skeleton(const SpacePresentation& x, std::vector<std::uint64_t> support)
    : space_(&x), reps_(representatives(x, std::move(support))) {
  const Carrier& c = x.carrier();
  for (const auto& p : reps_.points) nodes_.push_back({p, false});
  std::uint64_t fresh = reps_.indices.empty() ? 0 : reps_.indices.back() + 1;
  for (std::uint32_t b = 0; b < c.block_count(); ++b) {
    class_of_block_.push_back(nodes_.size());
    nodes_.push_back({Point::block(b, fresh), true});
  }

  const std::size_t n = nodes_.size();
  above_.assign(n, Bits(n));
  for (std::size_t u = 0; u < n; ++u) {
    above_[u].set(u);
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && x.leq(nodes_[u].sample, nodes_[v].sample)) above_[u].set(v);
  }
  for (std::uint32_t b = 0; b < c.block_count(); ++b) {
    if (auto lim = c.limit_of(b)) {
      std::size_t cls = class_of_block_[b];
      above_[cls].set(*lim);
      above_[*lim].set(cls);
    }
  }
  // Warshall.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t u = 0; u < n; ++u)
      if (above_[u].test(k)) above_[u] |= above_[k];
  below_.assign(n, Bits(n));
  for (std::size_t u = 0; u < n; ++u)
    for (auto v : above_[u].indices()) below_[v].set(u);
}

std::size_t Skeleton::node_of(const Point& p) const {
  const Carrier& c = space_->carrier();
  if (p.is_named()) return p.id;
  auto it = std::lower_bound(reps_.indices.begin(), reps_.indices.end(), p.index);
  if (it != reps_.indices.end() && *it == p.index)
    return c.named_count() + p.id * reps_.indices.size() +
           static_cast<std::size_t>(it - reps_.indices.begin());
  return class_of_block_.at(p.id);
}

Bits Skeleton::nodes_of(const RSet& s) const {
  const Carrier& c = space_->carrier();
  require_same_carrier(c, s.carrier());
  for (std::uint32_t b = 0; b < c.block_count(); ++b)
    for (auto n : s.trace(b).elems)
      if (!std::binary_search(reps_.indices.begin(), reps_.indices.end(), n))
        throw PreconditionError("set index outside skeleton support");
  Bits out(nodes_.size());
  for (std::size_t u = 0; u < nodes_.size(); ++u)
    if (s.contains(nodes_[u].sample)) out.set(u);
  return out;
}

RSet Skeleton::expand(const Bits& nodes) const {
  const Carrier& c = space_->carrier();
  Bits named(c.named_count());
  for (std::uint32_t i = 0; i < c.named_count(); ++i)
    if (nodes.test(i)) named.set(i);
  std::vector<Trace> traces(c.block_count());
  for (std::uint32_t b = 0; b < c.block_count(); ++b) {
    Trace& t = traces[b];
    t.cofinite = nodes.test(class_of_block_[b]);
    for (std::size_t k = 0; k < reps_.indices.size(); ++k) {
      bool in = nodes.test(c.named_count() + b * reps_.indices.size() + k);
      if (in != t.cofinite) t.elems.push_back(reps_.indices[k]);
    }
  }
  return RSet(space_->carrier_ptr(), std::move(traces), std::move(named));
}

Bits Skeleton::up_star(const Bits& nodes) const {
  Bits out(nodes_.size());
  for (auto u : nodes.indices()) out |= above_[u];
  return out;
}

Bits Skeleton::down_star(const Bits& nodes) const {
  Bits out(nodes_.size());
  for (auto u : nodes.indices()) out |= below_[u];
  return out;
}

// ---------------------------------------------------------------- checks

std::optional<PairWitness> check_priestley_separation(const SpacePresentation& x) {
  Skeleton sk(x, support_indices(x));
  const auto& pts = sk.reps().points;
  for (const auto& p : pts) {
    auto np = sk.node_of(p);
    for (const auto& q : pts) {
      if (p == q || x.leq(p, q)) continue;
      if (sk.above(np).test(sk.node_of(q))) return PairWitness{p, q};
    }
  }
  return std::nullopt;
}

std::optional<RSet> clopen_upset_separator(const SpacePresentation& x, const RSet& inside,
                                           const RSet& outside) {
  std::vector<RSet> extra{inside, outside};
  Skeleton sk(x, support_indices(x, extra));
  Bits up = sk.up_star(sk.nodes_of(inside));
  if (up.intersects(sk.nodes_of(outside))) return std::nullopt;
  return sk.expand(up);
}

std::optional<RSet> largest_clopen_upset_inside(const SpacePresentation& x, const RSet& c) {
  if (!x.order().is_upset(c)) throw PreconditionError("largest_clopen_upset_inside needs an upset");
  std::vector<RSet> extra{c};
  Skeleton sk(x, support_indices(x, extra));
  Bits bad = sk.nodes_of(complement(c));
  Bits good(sk.size());
  for (std::size_t u = 0; u < sk.size(); ++u)
    if (!sk.is_class(u) && !sk.above(u).intersects(bad)) good.set(u);
  // A non-representative point behaves like the block's generic representative.
  const Carrier& car = x.carrier();
  for (std::uint32_t b = 0; b < car.block_count(); ++b) {
    auto generic = sk.node_of(Point::block(b, sk.reps().indices.back()));
    if (good.test(generic)) good.set(sk.node_of(Point::block(b, sk.reps().indices.back() + 1)));
  }
  RSet m = sk.expand(good);
  if (!classify_set(car, m).clopen) return std::nullopt;
  return m;
}

RSet basic_neighbourhood(const SpacePresentation& x, const Point& p,
                         std::span<const std::uint64_t> support) {
  const Carrier& c = x.carrier();
  if (auto owner = c.is_limit(p) ? c.owner_of(p.id) : std::nullopt) {
    std::vector<Point> excluded;
    for (auto n : support) excluded.push_back(Point::block(*owner, n));
    return (RSet::whole_block(x.carrier_ptr(), *owner) - RSet::of(x.carrier_ptr(), excluded)) |
           RSet::point(x.carrier_ptr(), p);
  }
  return RSet::point(x.carrier_ptr(), p);
}

std::vector<RSet> clopen_generators(const SpacePresentation& x, const Representatives& reps) {
  std::vector<RSet> out;
  std::span<const std::uint64_t> support(reps.indices.data(), reps.support);
  for (const auto& p : reps.points) out.push_back(basic_neighbourhood(x, p, support));
  return out;
}

ContinuityReport check_order_continuity(const SpacePresentation& x) {
  ContinuityReport rep;
  const Carrier& c = x.carrier();
  auto reps = representatives(x);
  for (const auto& p : reps.points) {
    auto up = x.up(p);
    if (!classify_set(c, up).closed) {
      rep.upsets_closed_witness = p;
      break;
    }
  }
  for (const auto& u : clopen_generators(x, reps)) {
    if (!classify_set(c, x.downclose(u)).open) {
      rep.down_of_open_witness = u;
      break;
    }
  }
  return rep;
}

std::optional<Point> check_image_compact(const SpacePresentation& x) {
  const Carrier& c = x.carrier();
  for (const auto& p : representatives(x).points) {
    auto up = x.up(p);
    for (std::uint32_t b = 0; b < c.block_count(); ++b) {
      if (!up.trace(b).cofinite) continue;
      auto lim = c.limit_of(b);
      if (!lim || !up.named().test(*lim)) return p;
    }
  }
  return std::nullopt;
}

SpaceFlags classify_space(const SpacePresentation& x) {
  SpaceFlags f;
  const Carrier& c = x.carrier();
  f.compact = true;
  for (std::uint32_t b = 0; b < c.block_count(); ++b) {
    if (!c.limit_of(b)) {
      f.compact = false;
      f.noncompact_block = b;
      break;
    }
  }

  f.separation_witness = check_priestley_separation(x);
  bool separation = !f.separation_witness;
  f.priestley = f.compact && separation;

  // Differences of clopen upsets form a basis iff, for each point z, the
  // smallest difference around z (↑z minus the largest upset missing z)
  // fits inside z's basic neighbourhood.
  Skeleton sk(x, support_indices(x));
  const auto& reps = sk.reps();
  for (const auto& p : reps.points) {
    auto z = sk.node_of(p);
    Bits single(sk.size());
    single.set(z);
    RSet u = sk.expand(sk.up_star(single));
    RSet v = complement(sk.expand(sk.down_star(single)));
    if (!(u - v).subset_of(basic_neighbourhood(x, p, reps.indices))) {
      f.basis_witness = p;
      break;
    }
  }
  f.order_zero_dimensional = separation && !f.basis_witness;

  f.continuity = check_order_continuity(x);
  f.continuously_ordered = f.continuity.ok();
  f.esakia = f.priestley && f.continuously_ordered;
  f.image_compact_witness = check_image_compact(x);
  f.image_compact = !f.image_compact_witness;
  f.locally_esakia = f.order_zero_dimensional && f.continuously_ordered && f.image_compact;
  return f;
}

}  // namespace ordcomp
