#include "ordcomp/rings.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ordcomp/error.hpp"
#include "ordcomp/finite.hpp"

namespace ordcomp {

// ---------------------------------------------------------------- UpsetRing

UpsetRing UpsetRing::explicit_ring(SpacePtr base, std::vector<RSet> members) {
  for (const auto& m : members) {
    require_same_carrier(base->carrier(), m.carrier());
    if (!base->order().is_upset(m)) throw InputError("ring member " + to_string(m) + " is not an upset");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  UpsetRing r;
  r.base_ = std::move(base);
  r.members_ = std::move(members);
  return r;
}

UpsetRing UpsetRing::pullback(PairPtr pair) {
  UpsetRing r;
  r.base_ = pair->X_ptr();
  r.pair_ = std::move(pair);
  return r;
}

const std::vector<RSet>& UpsetRing::members() const {
  if (!is_explicit()) throw PreconditionError("members() on a pullback ring");
  return members_;
}

const CompactificationPair& UpsetRing::pair() const {
  if (is_explicit()) throw PreconditionError("pair() on an explicit ring");
  return *pair_;
}

std::optional<RSet> UpsetRing::target_of(const RSet& g) const {
  const auto& p = pair();
  const auto& Y = p.Y();
  RSet u = closure(Y.carrier(), p.e().image(g));
  if (!classify_set(Y.carrier(), u).clopen || !Y.order().is_upset(u)) return std::nullopt;
  if (p.e().preimage(u) != g) return std::nullopt;
  return u;
}

bool UpsetRing::contains(const RSet& g) const {
  require_same_carrier(base_->carrier(), g.carrier());
  if (is_explicit()) return std::binary_search(members_.begin(), members_.end(), g);
  return target_of(g).has_value();
}

std::vector<std::uint64_t> UpsetRing::support() const {
  if (is_explicit()) return support_indices(*base_, members_);
  return pair_->e().support();
}

// ---------------------------------------------------------------- sweeps

std::vector<RSet> small_support_sets(const CarrierPtr& c, std::span<const std::uint64_t> pool,
                                     int bound) {
  const std::size_t blocks = c->block_count(), named = c->named_count();
  if (named > 16 || blocks > 8) throw SizeError("small-support sweep needs at most 16 named points and 8 blocks");
  // Slots are (block, index) pairs; a support is a sorted slot subset.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> slots;
  for (std::uint32_t b = 0; b < blocks; ++b)
    for (auto n : pool) slots.emplace_back(b, n);
  std::vector<RSet> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::size_t, std::vector<std::vector<std::size_t>>&)> choose =
      [&](std::size_t from, std::size_t left, std::vector<std::vector<std::size_t>>& acc) {
        if (left == 0) {
          acc.push_back(pick);
          return;
        }
        for (std::size_t i = from; i + left <= slots.size(); ++i) {
          pick.push_back(i);
          choose(i + 1, left - 1, acc);
          pick.pop_back();
        }
      };
  const int max_s = std::min<int>(bound, static_cast<int>(slots.size()));
  for (int s = 0; s <= max_s; ++s) {
    std::vector<std::vector<std::size_t>> supports;
    choose(0, static_cast<std::size_t>(s), supports);
    for (std::uint32_t flags = 0; flags < (1u << blocks); ++flags)
      for (std::uint32_t nm = 0; nm < (1u << named); ++nm)
        for (const auto& sup : supports) {
          std::vector<Trace> traces(blocks);
          for (std::uint32_t b = 0; b < blocks; ++b) traces[b].cofinite = flags >> b & 1u;
          for (auto i : sup) traces[slots[i].first].elems.push_back(slots[i].second);
          Bits bits(named);
          for (std::size_t i = 0; i < named; ++i)
            if (nm >> i & 1u) bits.set(i);
          out.emplace_back(c, std::move(traces), std::move(bits));
        }
  }
  return out;
}

namespace {

std::vector<std::uint64_t> sweep_pool(std::vector<std::uint64_t> support, int bound) {
  for (int i = 0; i < bound; ++i) support.push_back(static_cast<std::uint64_t>(i));
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return support;
}

std::uint64_t random_range(const std::vector<std::uint64_t>& pool) {
  return (pool.empty() ? 0 : pool.back() + 1) + 4;
}

bool exhaustive(const UpsetRing& r) { return r.is_explicit() || r.pair().Y().is_finite(); }

void keep_first(std::vector<RSet>& v) {
  std::set<RSet> seen;
  std::vector<RSet> out;
  for (auto& s : v)
    if (seen.insert(s).second) out.push_back(std::move(s));
  v = std::move(out);
}

RSet random_rset(const CarrierPtr& c, Rng& rng, std::uint64_t range) {
  std::vector<Trace> traces(c->block_count());
  for (auto& t : traces) {
    t.cofinite = rng.coin();
    auto k = rng.below(3);
    for (std::uint64_t i = 0; i < k; ++i) t.elems.push_back(rng.below(range));
  }
  Bits named(c->named_count());
  for (std::size_t i = 0; i < c->named_count(); ++i)
    if (rng.coin()) named.set(i);
  return RSet(c, std::move(traces), std::move(named));
}

// Forces the clopen law by flipping each limit-owning trace to agree with
// its limit point.
RSet make_clopen(const RSet& s) {
  const Carrier& c = s.carrier();
  std::vector<Trace> traces;
  for (std::uint32_t b = 0; b < c.block_count(); ++b) {
    Trace t = s.trace(b);
    if (auto lim = c.limit_of(b)) t.cofinite = s.named().test(*lim);
    traces.push_back(std::move(t));
  }
  return RSet(s.carrier_ptr(), std::move(traces), s.named());
}

// Pairs from the deterministic candidates, then random ones. `test` returns
// a counterexample detail, or nullopt.
Verdict sweep_pairs(const UpsetRing& r, const SweepConfig& cfg,
                    const std::function<std::optional<std::string>(const RSet&, const RSet&)>& test) {
  auto cands = ring_candidates(r, cfg);
  std::size_t tested = 0;
  for (const auto& e : cands)
    for (const auto& f : cands) {
      ++tested;
      if (auto d = test(e, f)) return Verdict::counterexample({e, f}, *d);
    }
  if (exhaustive(r)) return Verdict::exhaustive(tested);
  const auto& p = r.pair();
  Rng rng(cfg.seed);
  auto range = random_range(sweep_pool(r.support(), cfg.support_bound));
  for (int i = 0; i < cfg.samples; ++i) {
    RSet e = p.e().preimage(random_clopen_upset(p.Y(), rng, range));
    RSet f = p.e().preimage(random_clopen_upset(p.Y(), rng, range));
    ++tested;
    if (auto d = test(e, f)) return Verdict::counterexample({e, f}, *d);
  }
  return Verdict::bounded(tested);
}

}  // namespace

std::vector<RSet> ring_candidates(const UpsetRing& r, const SweepConfig& cfg) {
  if (r.is_explicit()) return r.members();
  const auto& p = r.pair();
  std::vector<RSet> out;
  if (p.Y().is_finite()) {
    for (auto m : poset_of(p.Y()).upsets()) out.push_back(p.e().preimage(rset_of(p.Y().carrier_ptr(), m)));
  } else {
    auto pool = sweep_pool(r.support(), cfg.support_bound);
    for (auto& s : small_support_sets(r.base().carrier_ptr(), pool, cfg.support_bound))
      if (r.contains(s)) out.push_back(std::move(s));
  }
  keep_first(out);
  return out;
}

RSet random_clopen(const SpacePresentation& y, Rng& rng, std::uint64_t range) {
  return make_clopen(random_rset(y.carrier_ptr(), rng, range));
}

RSet random_clopen_upset(const SpacePresentation& y, Rng& rng, std::uint64_t range) {
  const Carrier& c = y.carrier();
  RSet s = random_clopen(y, rng, range);
  while (true) {
    RSet t = closure(c, y.upclose(s));
    for (std::uint32_t b = 0; b < c.block_count(); ++b) {
      auto lim = c.limit_of(b);
      if (lim && t.named().test(*lim) && !t.trace(b).cofinite)
        t = t | RSet::whole_block(y.carrier_ptr(), b);
    }
    if (t == s) return s;
    s = std::move(t);
  }
}

// ---------------------------------------------------------------- ladder

Verdict check_ring(const UpsetRing& r) {
  if (!r.is_explicit()) return Verdict::exhaustive(0);  // closed by construction
  const auto& m = r.members();
  const auto& X = r.base();
  if (!r.contains(X.empty())) return Verdict::counterexample(std::vector<RSet>{X.empty()}, "empty set missing");
  if (!r.contains(X.full())) return Verdict::counterexample(std::vector<RSet>{X.full()}, "whole space missing");
  std::size_t tested = 0;
  for (const auto& a : m)
    for (const auto& b : m) {
      ++tested;
      if (!r.contains(a | b)) return Verdict::counterexample({a, b}, "union missing");
      if (!r.contains(a & b)) return Verdict::counterexample({a, b}, "intersection missing");
    }
  return Verdict::exhaustive(tested);
}

Verdict check_priestley_ring(const UpsetRing& r) {
  if (auto v = check_ring(r); !v.ok()) return v;
  const auto& X = r.base();
  auto reps = representatives(X, r.support()).points;
  std::size_t tested = 0;
  for (const auto& x : reps)
    for (const auto& y : reps) {
      if (X.leq(x, y)) continue;
      ++tested;
      bool separated = false;
      if (r.is_explicit()) {
        for (const auto& a : r.members())
          if (a.contains(x) && !a.contains(y)) {
            separated = true;
            break;
          }
      } else {
        const auto& p = r.pair();
        const auto& Y = p.Y();
        separated = clopen_upset_separator(Y, RSet::point(Y.carrier_ptr(), p.e()(x)),
                                           RSet::point(Y.carrier_ptr(), p.e()(y)))
                        .has_value();
      }
      if (!separated) return Verdict::counterexample(PairWitness{x, y}, "no member separates");
    }
  return Verdict::exhaustive(tested);
}

Verdict check_priestley_basis(const UpsetRing& r) {
  if (auto v = check_priestley_ring(r); !v.ok()) return v;
  const auto& X = r.base();
  auto sup = r.support();
  auto reps = representatives(X, sup);
  std::span<const std::uint64_t> support(reps.indices.data(), reps.support);
  std::size_t tested = 0;
  if (r.is_explicit()) {
    std::vector<RSet> diffs;
    for (const auto& u : r.members())
      for (const auto& v : r.members()) diffs.push_back(u - v);
    for (const auto& g : clopen_generators(X, reps)) {
      ++tested;
      RSet cover = X.empty();
      for (const auto& d : diffs)
        if (d.subset_of(g)) cover = cover | d;
      if (cover != g) return Verdict::counterexample(std::vector<RSet>{g}, "generator is not a union of differences");
    }
    return Verdict::exhaustive(tested);
  }
  // Pullback: around each point z the smallest difference of clopen upsets of
  // Y containing e(z) is ↑*e(z) minus the complement of ↓*e(z).
  const auto& p = r.pair();
  const auto& Y = p.Y();
  Skeleton sk(Y, sup);
  for (const auto& z : reps.points) {
    ++tested;
    Bits node(sk.size());
    node.set(sk.node_of(p.e()(z)));
    RSet u = sk.expand(sk.up_star(node));
    RSet v = complement(sk.expand(sk.down_star(node)));
    RSet d = p.e().preimage(u - v);
    RSet nb = basic_neighbourhood(X, z, support);
    if (!d.subset_of(nb)) return Verdict::counterexample(std::vector<RSet>{nb}, "neighbourhood is not a union of differences");
  }
  return Verdict::exhaustive(tested);
}

// ---------------------------------------------------------------- Heyting

RingImplication heyting_implication_in_ring(const UpsetRing& r, const RSet& e, const RSet& f,
                                            const SweepConfig* certify) {
  if (!r.contains(e) || !r.contains(f)) throw InputError("implication operands must be ring members");
  RingImplication out;
  if (r.is_explicit()) {
    RSet best = r.base().empty();
    for (const auto& g : r.members())
      if ((g & e).subset_of(f)) best = best | g;
    if (r.contains(best) && (best & e).subset_of(f)) out.value = best;
    return out;
  }
  const auto& p = r.pair();
  const auto& Y = p.Y();
  RSet u = *r.target_of(e), v = *r.target_of(f);
  if (auto m = largest_clopen_upset_inside(Y, complement(Y.downclose(u - v))))
    out.value = p.e().preimage(*m);
  if (certify) {
    for (const auto& g : ring_candidates(r, *certify)) {
      if (!(g & e).subset_of(f)) continue;
      if (!out.value || !g.subset_of(*out.value))
        throw EngineBug("ring member " + to_string(g) + " beats the computed implication");
      ++out.certified;
    }
  }
  return out;
}

Verdict check_heyting_ring(const UpsetRing& r, const SweepConfig& cfg) {
  if (auto v = check_ring(r); !v.ok()) return v;
  return sweep_pairs(r, cfg, [&](const RSet& e, const RSet& f) -> std::optional<std::string> {
    if (heyting_implication_in_ring(r, e, f).value) return std::nullopt;
    return "no greatest member G with G ∩ E ⊆ F";
  });
}

Verdict check_esakia_ring(const UpsetRing& r, const SweepConfig& cfg) {
  if (auto v = check_ring(r); !v.ok()) return v;
  const auto& X = r.base();
  return sweep_pairs(r, cfg, [&](const RSet& e, const RSet& f) -> std::optional<std::string> {
    RSet imp = complement(X.downclose(e - f));
    if (r.contains(imp)) return std::nullopt;
    auto in_r = heyting_implication_in_ring(r, e, f).value;
    return "E ->_R F = " + (in_r ? to_string(*in_r) : std::string("none")) + ", E ->_Up(X) F = " +
           to_string(imp) + " is not a member";
  });
}

Verdict check_n_basis(const PairPtr& p, const SweepConfig& cfg) {
  const auto& X = p->X();
  const auto& Y = p->Y();
  const auto& e = p->e();
  if (!classify_space(Y).priestley) throw PreconditionError("N-basis check needs a Priestley target");

  std::vector<RSet> clopens;
  const bool finite = Y.is_finite();
  auto pool = sweep_pool(e.support(), cfg.support_bound);
  if (finite) {
    if (Y.carrier().named_count() > 12) throw SizeError("exhaustive N-basis check capped at 12 points");
    for (Mask m = 0; m < (Mask{1} << Y.carrier().named_count()); ++m)
      clopens.push_back(e.preimage(rset_of(Y.carrier_ptr(), m)));
  } else {
    for (const auto& s : small_support_sets(Y.carrier_ptr(), pool, cfg.support_bound))
      if (classify_set(Y.carrier(), s).clopen) clopens.push_back(e.preimage(s));
  }
  keep_first(clopens);

  std::size_t tested = 0;
  auto test = [&](const RSet& w, const RSet& v) -> bool {
    if (X.upclose(w).intersects(X.downclose(v))) return true;
    ++tested;
    return clopen_upset_separator(Y, e.image(w), e.image(v)).has_value();
  };
  for (const auto& w : clopens)
    for (const auto& v : clopens)
      if (!test(w, v)) return Verdict::counterexample({w, v}, "no K in R_Y contains W and misses V");
  if (finite) return Verdict::exhaustive(tested);
  Rng rng(cfg.seed);
  auto range = random_range(pool);
  for (int i = 0; i < cfg.samples; ++i) {
    RSet w = e.preimage(random_clopen(Y, rng, range));
    RSet v = e.preimage(random_clopen(Y, rng, range));
    if (!test(w, v)) return Verdict::counterexample({w, v}, "no K in R_Y contains W and misses V");
  }
  return Verdict::bounded(tested);
}

}  // namespace ordcomp
