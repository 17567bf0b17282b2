#include "ordcomp/duality.hpp"

#include <algorithm>

#include "ordcomp/error.hpp"
#include "ordcomp/finite.hpp"

namespace ordcomp {

namespace {

void require_finite(const SpacePresentation& x, const char* what) {
  if (!x.is_finite()) throw PreconditionError(std::string(what) + " needs a finite space");
}

}  // namespace

SpecSpace spec_space(const FinDLat& d) {
  SpecSpace s;
  s.filters = prime_filters(d);
  const int n = static_cast<int>(s.filters.size());
  if (n > kMaxFinitePoints) throw SizeError("spectrum larger than 64 points");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && s.filters[i].subset_of(s.filters[j])) pairs.emplace_back(i, j);
  std::vector<std::string> names;
  for (const auto& f : s.filters) {
    // A prime filter of a finite lattice is ↑j for its least element j.
    int least = -1;
    for (auto a : f.indices())
      if (least < 0 || d.leq(static_cast<int>(a), least)) least = static_cast<int>(a);
    names.push_back("up(" + d.id(least) + ")");
  }
  s.space = space_from_poset(FinPoset::from_pairs(n, pairs), std::move(names));
  for (int a = 0; a < d.size(); ++a) {
    Mask m = 0;
    for (int i = 0; i < n; ++i)
      if (s.filters[i].test(a)) m |= Mask{1} << i;
    s.phi.push_back(rset_of(s.space->carrier_ptr(), m));
  }
  return s;
}

std::optional<int> ClopUpLattice::element_of(const RSet& s) const {
  auto it = std::find(sets.begin(), sets.end(), s);
  if (it == sets.end()) return std::nullopt;
  return static_cast<int>(it - sets.begin());
}

ClopUpLattice clopup_lattice(const SpacePresentation& x) {
  require_finite(x, "clopup_lattice");
  auto p = poset_of(x);
  auto ups = p.upsets();
  std::vector<std::string> ids;
  std::vector<RSet> sets;
  for (auto m : ups) {
    sets.push_back(rset_of(x.carrier_ptr(), m));
    ids.push_back(to_string(sets.back()));
  }
  std::vector<Bits> rows(ups.size(), Bits(ups.size()));
  for (std::size_t a = 0; a < ups.size(); ++a)
    for (std::size_t b = 0; b < ups.size(); ++b)
      if ((ups[a] & ~ups[b]) == 0) rows[a].set(b);
  return {FinDLat::make(std::move(ids), std::move(rows)), std::move(sets)};
}

RSet spatial_implication(const SpacePresentation& x, const RSet& u, const RSet& v) {
  return complement(x.downclose(u - v));
}

// ---------------------------------------------------------------- round trips

SpaceRoundTrip roundtrip_space(const SpacePtr& x) {
  require_finite(*x, "roundtrip_space");
  auto clop = clopup_lattice(*x);
  auto spec = spec_space(clop.lattice);
  const int n = static_cast<int>(x->carrier().named_count());
  const int m = static_cast<int>(spec.filters.size());

  std::vector<int> fwd(n, -1), bwd(m, -1);
  for (int i = 0; i < n; ++i) {
    Bits f(clop.lattice.size());
    for (int u = 0; u < clop.lattice.size(); ++u)
      if (clop.sets[u].contains(Point::named(i))) f.set(u);
    auto it = std::find(spec.filters.begin(), spec.filters.end(), f);
    if (it == spec.filters.end()) throw EngineBug("point filter is not a prime filter");
    fwd[i] = static_cast<int>(it - spec.filters.begin());
  }
  // Inverse: the point whose filter is P; it is the unique point of the
  // least member of P when X is Priestley.
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i)
      if (fwd[i] == j) bwd[j] = i;
  for (int j = 0; j < m; ++j)
    if (bwd[j] < 0) throw EngineBug("prime filter not realized by a point");
  for (int i = 0; i < n; ++i)
    if (bwd[fwd[i]] != i) throw EngineBug("round trip is not injective");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (x->leq(Point::named(i), Point::named(k)) !=
          spec.space->leq(Point::named(fwd[i]), Point::named(fwd[k])))
        throw EngineBug("round trip is not an order isomorphism");
  SpaceMap f = SpaceMap::from_table(x, spec.space, fwd);
  SpaceMap g = SpaceMap::from_table(spec.space, x, bwd);
  return {std::move(clop), std::move(spec), std::move(f), std::move(g)};
}

LatticeRoundTrip roundtrip_lattice(const FinDLat& d) {
  auto spec = spec_space(d);
  auto clop = clopup_lattice(*spec.space);
  std::vector<int> fwd(d.size(), -1), bwd(clop.lattice.size(), -1);
  for (int a = 0; a < d.size(); ++a) {
    auto e = clop.element_of(spec.phi[a]);
    if (!e) throw EngineBug("phi(a) is not a clopen upset");
    if (bwd[*e] >= 0) throw EngineBug("phi is not injective");
    fwd[a] = *e;
    bwd[*e] = a;
  }
  for (int u = 0; u < clop.lattice.size(); ++u)
    if (bwd[u] < 0) throw EngineBug("phi is not surjective onto ClopUp(Spec D)");
  if (auto w = check_lattice_hom(d, clop.lattice, fwd))
    throw EngineBug("phi is not a lattice homomorphism (" + w->law + ")");
  if (auto w = check_lattice_hom(clop.lattice, d, bwd))
    throw EngineBug("phi inverse is not a lattice homomorphism (" + w->law + ")");
  return {std::move(spec), std::move(clop), std::move(fwd), std::move(bwd)};
}

// ---------------------------------------------------------------- p-morphisms

PMorphismReport is_p_morphism(const SpaceMap& f) {
  const auto& X = f.source();
  const auto& Y = f.target();
  PMorphismReport rep;
  const bool finite = X.is_finite() && Y.is_finite();
  const auto xs = f.source_reps().points;
  const auto ys = f.target_reps().points;

  // Route 1: the definition, by search.
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      if (!Y.leq(f(x), y)) continue;
      bool found = false;
      if (finite) {
        for (const auto& x2 : xs)
          if (X.leq(x, x2) && f(x2) == y) {
            found = true;
            break;
          }
      } else {
        found = (X.up(x) & f.preimage(RSet::point(Y.carrier_ptr(), y))).pick().has_value();
      }
      if (!found) {
        rep.routes[0] = false;
        if (!rep.witness) rep.witness = PairWitness{x, y};
      }
    }
  }
  // Route 2: ↑f(x) ⊆ f[↑x].
  for (const auto& x : xs)
    if (!Y.up(f(x)).subset_of(f.image(X.up(x)))) rep.routes[1] = false;
  // Route 3: f⁻¹[↓y] ⊆ ↓f⁻¹[y].
  for (const auto& y : ys)
    if (!f.preimage(Y.down(y)).subset_of(X.downclose(f.preimage(RSet::point(Y.carrier_ptr(), y)))))
      rep.routes[2] = false;
  // Route 4: images of upsets are upsets. Finite sources enumerate every
  // upset; otherwise principal ones suffice since images preserve unions.
  if (finite && X.carrier().named_count() <= 20) {
    for (auto m : poset_of(X).upsets())
      if (!Y.order().is_upset(f.image(rset_of(X.carrier_ptr(), m)))) rep.routes[3] = false;
  } else {
    for (const auto& x : xs)
      if (!Y.order().is_upset(f.image(X.up(x)))) rep.routes[3] = false;
  }

  for (bool r : rep.routes)
    if (r != rep.routes[0]) throw EngineBug("p-morphism characterizations disagree");
  auto mono = check_order_preserving(f);
  rep.order_preserving = !mono;
  rep.verdict = rep.order_preserving && rep.routes[0];
  if (mono && !rep.witness) rep.witness = *mono;
  return rep;
}

DualMapReport dual_of_map(const SpaceMap& f) {
  require_finite(f.source(), "dual_of_map");
  require_finite(f.target(), "dual_of_map");
  if (check_order_preserving(f)) throw PreconditionError("dual_of_map needs an order-preserving map");
  DualMapReport rep{clopup_lattice(f.target()), clopup_lattice(f.source()), {}, false, false, {}, false, false};
  for (const auto& u : rep.target_lattice.sets) {
    auto e = rep.source_lattice.element_of(f.preimage(u));
    if (!e) throw EngineBug("preimage of a clopen upset is not a clopen upset");
    rep.hom.push_back(*e);
  }
  if (auto w = check_lattice_hom(rep.target_lattice.lattice, rep.source_lattice.lattice, rep.hom))
    throw EngineBug("f^-1 is not a lattice homomorphism (" + w->law + ")");
  rep.p_morphism = is_p_morphism(f).verdict;
  rep.heyting_witness = check_heyting_hom(rep.target_lattice.lattice, rep.source_lattice.lattice, rep.hom);
  rep.heyting_hom = !rep.heyting_witness;
  if (rep.p_morphism != rep.heyting_hom)
    throw EngineBug("p-morphism and Heyting-homomorphism verdicts differ");

  auto sorted = rep.hom;
  std::sort(sorted.begin(), sorted.end());
  rep.hom_injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  rep.map_surjective = f.image(f.source().full()) == f.target().full();
  if (rep.hom_injective != rep.map_surjective)
    throw EngineBug("injectivity of f^-1 and surjectivity of f differ");
  return rep;
}

}  // namespace ordcomp
