#include <doctest.h>

#include "oracles.hpp"
#include "ordcomp/corpus.hpp"
#include "ordcomp/duality.hpp"
#include "ordcomp/error.hpp"

using namespace ordcomp;

TEST_SUITE("duality") {

TEST_CASE("spectrum of a chain and of a square") {
  auto v = FinDLat::validate({"0", "m", "1"}, std::vector<std::pair<std::string, std::string>>{{"0", "m"}, {"m", "1"}});
  auto chain = std::get<FinDLat>(v);
  auto s = spec_space(chain);
  REQUIRE(s.space->carrier().named_count() == 2);
  auto rel = oracle::Rel::of(*s.space);
  CHECK((rel.le[0][1] || rel.le[1][0]));
  auto sq = std::get<FinDLat>(FinDLat::validate(
      {"0", "a", "b", "1"}, std::vector<std::pair<std::string, std::string>>{{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
  auto t = spec_space(sq);
  REQUIRE(t.space->carrier().named_count() == 2);
  auto r2 = oracle::Rel::of(*t.space);
  CHECK_FALSE(r2.le[0][1]);
  CHECK_FALSE(r2.le[1][0]);
  // phi is a lattice embedding into ClopUp(Spec).
  for (int a = 0; a < sq.size(); ++a)
    for (int b = 0; b < sq.size(); ++b) {
      CHECK(t.phi[sq.meet(a, b)] == (t.phi[a] & t.phi[b]));
      CHECK(t.phi[sq.join(a, b)] == (t.phi[a] | t.phi[b]));
    }
}

TEST_CASE("empty space and the one-element lattice") {
  auto x = space_from_poset(FinPoset::antichain(0));
  auto rt = roundtrip_space(x);
  CHECK(rt.clopup.lattice.size() == 1);
  CHECK(rt.spec.space->carrier().named_count() == 0);
}

TEST_CASE("clopen upsets of a finite space are all upsets") {
  Rng rng(41);
  for (int k = 0; k < 50; ++k) {
    auto p = random_poset(rng, 1 + static_cast<int>(rng.below(5)));
    auto x = space_from_poset(p);
    auto clop = clopup_lattice(*x);
    CHECK(clop.sets.size() == oracle::Rel::of(p).upsets().size());
  }
}

TEST_CASE("dual maps: p-morphism iff Heyting hom, injective iff surjective") {
  std::vector<FinPoset> posets;
  for (int n = 1; n <= 3; ++n)
    for (auto& p : posets_up_to_iso(n)) posets.push_back(p);
  int checked = 0;
  for (const auto& a : posets)
    for (const auto& b : posets) {
      auto ra = oracle::Rel::of(a), rb = oracle::Rel::of(b);
      for (const auto& t : oracle::all_functions(a.n, b.n)) {
        if (!oracle::monotone(ra, rb, t)) continue;
        auto f = SpaceMap::from_table(space_from_poset(a), space_from_poset(b), t);
        auto rep = dual_of_map(f);
        bool surjective = true;
        for (int y = 0; y < b.n; ++y) surjective = surjective && std::find(t.begin(), t.end(), y) != t.end();
        CHECK(rep.p_morphism == oracle::p_morphism(ra, rb, t));
        CHECK(rep.heyting_hom == rep.p_morphism);
        CHECK(rep.map_surjective == surjective);
        CHECK(rep.hom_injective == surjective);
        ++checked;
      }
    }
  CHECK(checked > 100);
}

TEST_CASE("p-morphisms on presented spaces") {
  // The identity of Y (N below its limit), and the inclusion of N into it.
  auto p = pair_yb_identity();
  CHECK(is_p_morphism(p->e()).verdict);
  auto q = pair_yb();
  auto r = is_p_morphism(q->e());
  CHECK_FALSE(r.verdict);
  REQUIRE(r.witness);
  CHECK(q->Y().carrier().format(r.witness->y) == "inf");
}

TEST_CASE("maps that are not order-preserving are not p-morphisms") {
  auto chain = space_from_poset(FinPoset::chain(2));
  auto f = SpaceMap::from_table(chain, chain, {1, 0});
  auto r = is_p_morphism(f);
  CHECK_FALSE(r.order_preserving);
  CHECK_FALSE(r.verdict);
  CHECK_THROWS_AS(dual_of_map(f), PreconditionError);
}

}
