#include "ordcomp/corpus.hpp"

#include "ordcomp/compactify.hpp"
#include "ordcomp/finite.hpp"
#include "ordcomp/kernels.hpp"

namespace ordcomp {

namespace {

SpacePtr naturals() {
  auto c = make_carrier(Carrier::tail({{"N", std::nullopt}}, {}));
  return make_space(OrderPresentation::discrete(c));
}

CarrierPtr naturals_with_limit() { return make_carrier(Carrier::tail({{"N", "inf"}}, {})); }

PairPtr into_block(const SpacePtr& x, const SpacePtr& y) {
  return make_pair_ptr(SpaceMap(x, y, {}, {{BlockRule::Kind::IntoBlock, 0, {}}}));
}

}  // namespace

PairPtr pair_ya() {
  return into_block(naturals(), make_space(OrderPresentation::discrete(naturals_with_limit())));
}

PairPtr pair_yb() {
  auto c = naturals_with_limit();
  Point inf = Point::named(0);
  auto y = make_space(OrderPresentation::make(c, {{RSet::whole_block(c, 0), RSet::point(c, inf)}}));
  return into_block(naturals(), y);
}

PairPtr pair_yc() {
  auto c = naturals_with_limit();
  Point inf = Point::named(0);
  auto y = make_space(OrderPresentation::make(c, {{RSet::point(c, inf), RSet::whole_block(c, 0)}}));
  return into_block(naturals(), y);
}

PairPtr pair_yb_identity() { return make_pair_ptr(SpaceMap::identity(pair_yb()->Y_ptr())); }

PairPtr pair_top() {
  auto cx = make_carrier(Carrier::tail({{"N", std::nullopt}}, {"t"}));
  auto x = make_space(OrderPresentation::make(cx, {{RSet::whole_block(cx, 0), RSet::point(cx, Point::named(0))}}));
  auto cy = make_carrier(Carrier::tail({{"N", "inf"}}, {"t"}));
  Point inf = Point::named(0), t = Point::named(1);
  auto y = make_space(OrderPresentation::make(
      cy, {{RSet::whole_block(cy, 0) | RSet::point(cy, inf), RSet::point(cy, t)}}));
  return make_pair_ptr(SpaceMap(x, y, {t}, {{BlockRule::Kind::IntoBlock, 0, {}}}));
}

SpacePtr continuity_regression_space() {
  auto c = make_carrier(Carrier::tail({{"P", "p"}, {"Q", "q"}}, {}));
  Point p = Point::named(0), q = Point::named(1);
  RSet upper = RSet::whole_block(c, 1) | RSet::point(c, q);
  return make_space(OrderPresentation::make(c, {{RSet::point(c, p), upper}}));
}

std::vector<UpsetRing> priestley_bases(const SpacePtr& x) {
  auto p = poset_of(*x);
  auto ups = p.upsets();
  std::vector<UpsetRing> out;
  for (auto s : kernels::priestley_basis_scan_parallel(p)) {
    std::vector<RSet> members;
    for (std::size_t i = 0; i < ups.size(); ++i)
      if (s >> i & 1u) members.push_back(rset_of(x->carrier_ptr(), ups[i]));
    out.push_back(UpsetRing::explicit_ring(x, std::move(members)));
  }
  return out;
}

Corpus builtin_corpus(int max_n) {
  Corpus c;
  for (int n = 0; n <= max_n; ++n) {
    auto posets = posets_up_to_iso(n);
    for (std::size_t k = 0; k < posets.size(); ++k) {
      std::string tag = "poset" + std::to_string(n) + "." + std::to_string(k);
      auto x = space_from_poset(posets[k]);
      c.spaces.push_back({tag, x});
      auto bases = priestley_bases(x);
      for (std::size_t b = 0; b < bases.size(); ++b) {
        auto bc = compactify_from_basis(x, bases[b]);
        if (bc.pair) c.pairs.push_back({tag + ".basis" + std::to_string(b), *bc.pair});
      }
      c.pairs.push_back({tag + ".identity", make_pair_ptr(SpaceMap::identity(x))});
    }
  }
  c.pairs.push_back({"fig2", pair_yb()});
  c.pairs.push_back({"one-point", pair_ya()});
  c.pairs.push_back({"reversed", pair_yc()});
  c.pairs.push_back({"fig2-identity", pair_yb_identity()});
  c.pairs.push_back({"top", pair_top()});
  c.spaces.push_back({"naturals", pair_yb()->X_ptr()});
  c.spaces.push_back({"fig2-Y", pair_yb()->Y_ptr()});
  c.spaces.push_back({"top-X", pair_top()->X_ptr()});
  c.spaces.push_back({"continuity-regression", continuity_regression_space()});
  return c;
}

}  // namespace ordcomp
