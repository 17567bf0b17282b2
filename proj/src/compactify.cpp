#include "ordcomp/compactify.hpp"

#include <algorithm>
#include <bit>

#include "ordcomp/error.hpp"
#include "ordcomp/finite.hpp"
#include "ordcomp/kernels.hpp"

namespace ordcomp {

namespace {

std::string fmt(const Carrier& c, const Point& p) { return c.format(p); }

}  // namespace

// ---------------------------------------------------------------- classify

std::optional<std::string> check_nachbin(const SpacePresentation& y) {
  const Carrier& c = y.carrier();
  for (std::uint32_t b = 0; b < c.block_count(); ++b)
    if (!c.limit_of(b)) return "not compact: block " + c.block_name(b) + " has no limit point";
  for (const auto& p : representatives(y).points) {
    if (!classify_set(c, y.up(p)).closed) return "up-set of " + fmt(c, p) + " is not closed";
    if (!classify_set(c, y.down(p)).closed) return "down-set of " + fmt(c, p) + " is not closed";
  }
  // Limits of tails must be ordered like the tails.
  for (const auto& r : y.order().rectangles())
    for (std::uint32_t b = 0; b < c.block_count(); ++b) {
      if (!r.lower.trace(b).cofinite) continue;
      for (std::uint32_t d = 0; d < c.block_count(); ++d) {
        if (!r.upper.trace(d).cofinite) continue;
        Point lb = Point::named(*c.limit_of(b)), ld = Point::named(*c.limit_of(d));
        if (!y.leq(lb, ld)) return "order not closed: " + fmt(c, lb) + " should lie below " + fmt(c, ld);
      }
    }
  return std::nullopt;
}

PairFlags classify_pair(const PairPtr& p, const SweepConfig& cfg) {
  const auto& X = p->X();
  const auto& Y = p->Y();
  const auto& e = p->e();
  PairFlags fl;
  fl.x_flags = classify_space(X);
  fl.y_flags = classify_space(Y);

  fl.topological_embedding = true;
  if (auto g = check_continuous(e)) {
    fl.topological_embedding = false;
    fl.notes.push_back("e not continuous: preimage of " + to_string(*g) + " is not clopen");
  } else {
    for (const auto& g : clopen_generators(X, e.source_reps())) {
      if (!clopen_separator(Y.carrier(), e.image(g), e.image(X.full() - g))) {
        fl.topological_embedding = false;
        fl.notes.push_back("e not an embedding: " + to_string(g) + " is not a trace of a clopen");
        break;
      }
    }
  }
  if (auto w = check_order_embedding(e)) {
    fl.notes.push_back("e not an order embedding at " + fmt(X.carrier(), w->x) + ", " + fmt(X.carrier(), w->y));
  } else {
    fl.order_embedding = true;
  }
  RSet ex = e.image(X.full());
  auto dense = is_dense_in(Y.carrier(), ex, Y.full());
  fl.dense = dense.dense;
  if (!fl.dense) fl.notes.push_back("e[X] not dense: misses " + fmt(Y.carrier(), *dense.witness));
  auto nachbin = check_nachbin(Y);
  fl.nachbin = !nachbin;
  if (nachbin) fl.notes.push_back("Y not Nachbin: " + *nachbin);
  fl.order_compactification = fl.topological_embedding && fl.order_embedding && fl.dense && fl.nachbin;

  fl.priestley = fl.order_compactification && fl.y_flags.priestley;
  fl.heyting = fl.priestley && fl.y_flags.esakia;
  if (fl.heyting) {
    fl.esakia = true;
    for (const auto& x : e.source_reps().points) {
      RSet a = e.image(X.up(x)), b = Y.up(e(x));
      if (!a.subset_of(b) || !is_dense_in(Y.carrier(), a, b).dense) {
        fl.esakia = false;
        fl.notes.push_back("up-set of " + fmt(X.carrier(), x) + " not dense in its Y up-set");
        break;
      }
    }
  }
  fl.x_upset = Y.upclose(ex) == ex;

  if (fl.priestley) {
    fl.n_basis = check_n_basis(p, cfg);
    fl.n_order = fl.n_basis->ok();
  }
  if (fl.order_compactification && Y.is_finite()) {
    // e is onto by density, so ≤_Y must be the image of ≤_X.
    bool same = true;
    const std::size_t n = X.carrier().named_count();
    for (std::uint32_t i = 0; i < n && same; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (Y.leq(e(Point::named(i)), e(Point::named(j))) != X.leq(Point::named(i), Point::named(j))) {
          same = false;
          break;
        }
    fl.n_direct = same;
    if (fl.priestley && same != fl.n_order)
      throw EngineBug("N-basis verdict and direct order-closure check disagree");
  }
  return fl;
}

// ---------------------------------------------------------------- constructions

PairPtr eta0_finite(const SpacePtr& x) {
  if (!x->is_finite()) throw PreconditionError("eta0_finite needs a finite space");
  if (!classify_space(*x).order_zero_dimensional)
    throw PreconditionError("eta0_finite needs an order-zero-dimensional space");
  return make_pair_ptr(roundtrip_space(x).forward);
}

BasisCompactification compactify_from_basis(const SpacePtr& x, const UpsetRing& r) {
  if (!x->is_finite() || !r.is_explicit()) throw PreconditionError("compactify_from_basis needs an explicit ring on a finite space");
  BasisCompactification out{std::nullopt, check_priestley_basis(r)};
  if (!out.basis.ok()) return out;
  const auto& m = r.members();
  std::vector<std::string> ids;
  std::vector<Bits> rows(m.size(), Bits(m.size()));
  for (std::size_t a = 0; a < m.size(); ++a) {
    ids.push_back(to_string(m[a]));
    for (std::size_t b = 0; b < m.size(); ++b)
      if (m[a].subset_of(m[b])) rows[a].set(b);
  }
  auto spec = spec_space(FinDLat::make(std::move(ids), std::move(rows)));
  std::vector<int> table;
  for (std::uint32_t i = 0; i < x->carrier().named_count(); ++i) {
    Bits f(m.size());
    for (std::size_t a = 0; a < m.size(); ++a)
      if (m[a].contains(Point::named(i))) f.set(a);
    auto it = std::find(spec.filters.begin(), spec.filters.end(), f);
    if (it == spec.filters.end()) throw EngineBug("point filter of a Priestley basis is not prime");
    table.push_back(static_cast<int>(it - spec.filters.begin()));
  }
  auto pair = make_pair_ptr(SpaceMap::from_table(x, spec.space, table));
  auto fl = classify_pair(pair);
  if (!fl.priestley) throw EngineBug("basis compactification is not a Priestley order-compactification");
  out.pair = pair;
  return out;
}

Comparison compare_compactifications(const PairPtr& p1, const PairPtr& p2, const SweepConfig& cfg) {
  const auto& X = p1->X();
  const auto& e1 = p1->e();
  const auto& e2 = p2->e();
  if (!same_carrier(X.carrier(), p2->X().carrier())) throw InputError("pairs compactify different spaces");
  std::vector<std::uint64_t> sup = e1.support();
  for (auto n : e2.support()) sup.push_back(n);
  const auto xs = representatives(X, sup).points;
  for (const auto& a : xs)
    for (const auto& b : xs)
      if (X.leq(a, b) != p2->X().leq(a, b)) throw InputError("pairs compactify different orders");

  const auto& Y2 = p2->Y();
  const auto& Y1 = p1->Y();
  const Carrier& c2 = Y2.carrier();
  Comparison out;

  std::vector<BlockRule> rules;
  for (std::uint32_t c = 0; c < c2.block_count(); ++c) {
    std::optional<std::uint32_t> src;
    for (std::uint32_t b = 0; b < e2.rules().size(); ++b) {
      const auto& r = e2.rules()[b];
      if (r.kind == BlockRule::Kind::IntoBlock && r.block == c) src = b;
    }
    if (!src) {
      out.reason = "e2[X] misses almost all of block " + c2.block_name(c);
      return out;
    }
    rules.push_back(e1.rules()[*src]);
  }
  std::vector<Point> named(c2.named_count());
  std::map<Point, Point> exceptions;
  auto rule_value = [&](const Point& y) {
    const auto& r = rules[y.id];
    return r.kind == BlockRule::Kind::Constant ? r.point : Point::block(r.block, y.index);
  };
  for (const auto& y : representatives(Y2, sup).points) {
    std::optional<Point> pre;
    for (const auto& x : xs)
      if (e2(x) == y) {
        pre = x;
        break;
      }
    if (pre) {
      Point want = e1(*pre);
      if (y.is_named()) {
        named[y.id] = want;
      } else if (rule_value(y) != want) {
        exceptions.emplace(y, want);
      }
      continue;
    }
    if (!c2.is_limit(y)) {
      out.reason = "e2[X] misses the isolated point " + fmt(c2, y);
      return out;
    }
    // A limit outside e2[X]: continuity sends it to the limit of its block's image.
    const auto& r = rules[*c2.owner_of(y.id)];
    if (r.kind == BlockRule::Kind::Constant) {
      named[y.id] = r.point;
    } else if (auto lim = Y1.carrier().limit_of(r.block)) {
      named[y.id] = Point::named(*lim);
    } else {
      out.reason = "no continuous value at " + fmt(c2, y);
      return out;
    }
  }

  SpaceMap f(p2->Y_ptr(), p1->Y_ptr(), named, rules, exceptions);
  for (const auto& x : xs)
    if (f(e2(x)) != e1(x)) throw EngineBug("forced comparison map does not commute");
  if (auto g = check_continuous(f)) {
    out.reason = "forced map is not continuous at " + to_string(*g);
    return out;
  }
  if (auto w = check_order_preserving(f)) {
    out.reason = "forced map is not order-preserving at " + fmt(c2, w->x) + ", " + fmt(c2, w->y);
    return out;
  }
  out.p_morphism = is_p_morphism(f).verdict;
  if (!*out.p_morphism && classify_pair(p1, cfg).esakia && classify_pair(p2, cfg).esakia)
    throw EngineBug("map between Esakia order-compactifications is not a p-morphism");
  out.map = std::move(f);
  return out;
}

// ---------------------------------------------------------------- lifts

LiftResult lift(const SpaceMap& f) {
  const auto& X = f.source();
  const auto& Z = f.target();
  if (!X.is_finite() || !Z.is_finite()) throw PreconditionError("lift needs finite spaces");
  if (check_order_preserving(f)) throw PreconditionError("lift needs an order-preserving map");

  auto rt = roundtrip_space(f.source_ptr());
  const auto& clop = rt.clopup;
  const auto& filters = rt.spec.filters;
  const auto& Y = *rt.spec.space;
  const FinPoset pz = poset_of(Z);
  const Mask everything = pz.all();
  const RSet xfull = X.full();

  std::vector<int> route_a, route_b;
  for (const auto& x : filters) {
    Mask acc = everything;
    for (int u = 0; u < clop.lattice.size(); ++u) {
      // Closures are trivial in a finite space.
      if (x.test(u))
        acc &= pz.upclose(mask_of(f.image(clop.sets[u])));
      else
        acc &= pz.downclose(mask_of(f.image(xfull - clop.sets[u])));
    }
    if (std::popcount(acc) != 1) throw EngineBug("lift formula is not a singleton");
    route_a.push_back(std::countr_zero(acc));
  }

  auto clopz = clopup_lattice(Z);
  std::vector<int> h;
  for (const auto& w : clopz.sets) h.push_back(*clop.element_of(f.preimage(w)));
  for (const auto& x : filters) {
    Bits pulled(clopz.lattice.size());
    for (int w = 0; w < clopz.lattice.size(); ++w)
      if (x.test(h[w])) pulled.set(w);
    int found = -1;
    for (int z = 0; z < pz.n; ++z) {
      Bits zhat(clopz.lattice.size());
      for (int w = 0; w < clopz.lattice.size(); ++w)
        if (clopz.sets[w].contains(Point::named(z))) zhat.set(w);
      if (zhat == pulled) found = z;
    }
    if (found < 0) throw EngineBug("dual of f^-1 has no point value");
    route_b.push_back(found);
  }
  if (route_a != route_b) throw EngineBug("lift routes disagree");

  SpaceMap lifted = SpaceMap::from_table(rt.spec.space, f.target_ptr(), route_a);
  const auto& e = rt.forward;
  std::vector<int> fixed(filters.size(), -1);
  for (std::uint32_t i = 0; i < X.carrier().named_count(); ++i) {
    Point xi = Point::named(i);
    if (lifted(e(xi)) != f(xi)) throw EngineBug("lift does not extend f");
    fixed[e(xi).id] = static_cast<int>(f(xi).id);
  }
  if (check_order_preserving(lifted)) throw EngineBug("lift is not order-preserving");
  auto all = kernels::monotone_maps_parallel(poset_of(Y), pz, fixed);
  if (all.size() != 1 || all.front() != route_a) throw EngineBug("lift is not unique");
  return {make_pair_ptr(rt.forward), std::move(lifted), std::move(route_a), std::move(route_b), all.size()};
}

LiftReport check_lift_properties(const SpaceMap& f, const LiftResult& l) {
  const auto& X = f.source();
  const auto& Z = f.target();
  const auto& Y = l.lifted.source();
  LiftReport rep;
  auto clop = clopup_lattice(X);
  auto clopz = clopup_lattice(Z);
  auto filters = spec_space(clop.lattice).filters;
  for (std::size_t i = 0; i < filters.size(); ++i) {
    Point xp = Point::named(static_cast<std::uint32_t>(i));
    for (const auto& u : clopz.sets)
      for (const auto& v : clopz.sets) {
        bool lhs = l.lifted.preimage(u - v).contains(xp);
        bool rhs = filters[i].test(*clop.element_of(f.preimage(u))) &&
                   !filters[i].test(*clop.element_of(f.preimage(v)));
        if (lhs != rhs && rep.part2) {
          rep.part2 = false;
          rep.part2_witness = Y.carrier().format(xp) + " with U=" + to_string(u) + " V=" + to_string(v);
        }
      }
  }
  if (is_p_morphism(f).verdict) {
    rep.p_morphism_checked = true;
    for (std::uint32_t z = 0; z < Z.carrier().named_count(); ++z) {
      Point y = Point::named(z);
      RSet lhs = l.lifted.preimage(Z.down(y));
      RSet rhs = Y.downclose(l.lifted.preimage(RSet::point(Z.carrier_ptr(), y)));
      if (lhs != rhs && rep.p_morphism_identity) {
        rep.p_morphism_identity = false;
        rep.identity_witness = Z.carrier().format(y);
      }
    }
  }
  return rep;
}

std::optional<Point> esakia_lemma_check(const SpacePresentation& x, const std::vector<RSet>& family) {
  if (family.empty()) throw PreconditionError("Esakia's lemma needs a nonempty family");
  for (const auto& f : family) {
    require_same_carrier(x.carrier(), f.carrier());
    if (f.is_empty()) throw PreconditionError("family member is empty");
    if (!classify_set(x.carrier(), f).closed) throw PreconditionError("family member is not closed");
  }
  for (const auto& a : family)
    for (const auto& b : family) {
      RSet both = a & b;
      if (std::none_of(family.begin(), family.end(), [&](const RSet& c) { return c.subset_of(both); }))
        throw PreconditionError("family is not down-directed");
    }
  if (!classify_space(x).esakia) throw PreconditionError("Esakia's lemma needs an Esakia space");
  RSet meet = family.front();
  RSet rhs = x.downclose(family.front());
  for (const auto& f : family) {
    meet = meet & f;
    rhs = rhs & x.downclose(f);
  }
  return (rhs - x.downclose(meet)).pick();
}

}  // namespace ordcomp
