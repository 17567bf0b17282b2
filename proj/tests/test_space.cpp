#include <doctest.h>

#include "ordcomp/corpus.hpp"
#include "ordcomp/finite.hpp"
#include "ordcomp/space.hpp"

using namespace ordcomp;

namespace {

// N with limit inf, all of N below the isolated point t but inf not below t.
SpacePtr non_closed_order() {
  auto c = make_carrier(Carrier::tail({{"N", "inf"}}, {"t"}));
  return make_space(OrderPresentation::make(c, {{RSet::whole_block(c, 0), RSet::point(c, Point::named(1))}}));
}

}  // namespace

TEST_SUITE("space") {

TEST_CASE("finite posets are Esakia") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : posets_up_to_iso(n)) {
      auto f = classify_space(*space_from_poset(p));
      CHECK(f.compact);
      CHECK(f.priestley);
      CHECK(f.esakia);
      CHECK(f.order_zero_dimensional);
      CHECK(f.image_compact);
      CHECK(f.locally_esakia);
    }
}

TEST_CASE("finite separators and largest clopen upsets") {
  Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    auto p = random_poset(rng, 1 + static_cast<int>(rng.below(5)));
    auto x = space_from_poset(p);
    Mask a = rng.next() & p.all(), b = rng.next() & p.all();
    auto sep = clopen_upset_separator(*x, rset_of(x->carrier_ptr(), a), rset_of(x->carrier_ptr(), b));
    CHECK(sep.has_value() == ((p.upclose(a) & b) == 0));
    if (sep) {
      CHECK(p.is_upset(mask_of(*sep)));
      CHECK((mask_of(*sep) & a) == a);
      CHECK((mask_of(*sep) & b) == 0);
    }
    Mask u = p.upclose(a);
    auto largest = largest_clopen_upset_inside(*x, rset_of(x->carrier_ptr(), u));
    REQUIRE(largest);
    CHECK(mask_of(*largest) == u);
  }
}

TEST_CASE("naturals: discrete, not compact, locally Esakia") {
  auto p = pair_yb();
  auto f = classify_space(p->X());
  CHECK_FALSE(f.compact);
  CHECK(f.order_zero_dimensional);
  CHECK(f.continuously_ordered);
  CHECK(f.image_compact);
  CHECK(f.locally_esakia);
}

TEST_CASE("one-point compactifications with the three orders") {
  for (const auto& p : {pair_ya(), pair_yb(), pair_yc()}) {
    auto f = classify_space(p->Y());
    CHECK(f.compact);
    CHECK(f.priestley);
  }
  CHECK(classify_space(pair_yb()->Y()).esakia);
  // inf below every n: ↑inf is everything, closed; ↓{n} = {n, inf} is not open.
  auto c = classify_space(pair_yc()->Y());
  CHECK_FALSE(c.esakia);
  CHECK(c.continuity.down_of_open_witness);
}

TEST_CASE("a compact order that is not closed fails separation") {
  auto x = non_closed_order();
  auto f = classify_space(*x);
  CHECK(f.compact);
  CHECK_FALSE(f.priestley);
  REQUIRE(f.separation_witness);
  const auto& c = x->carrier();
  CHECK(c.format(f.separation_witness->x) == "inf");
  CHECK(c.format(f.separation_witness->y) == "t");
}

TEST_CASE("continuity regression: down of an open set") {
  auto x = continuity_regression_space();
  auto f = classify_space(*x);
  CHECK(f.priestley);
  CHECK_FALSE(f.continuously_ordered);
  REQUIRE(f.continuity.down_of_open_witness);
  CHECK_FALSE(classify_set(x->carrier(), x->downclose(*f.continuity.down_of_open_witness)).open);
}

TEST_CASE("representatives") {
  auto x = pair_yb()->Y_ptr();
  auto reps = representatives(*x, {0, 2});
  CHECK(reps.support == 2);
  REQUIRE(reps.indices.size() == 4);
  CHECK(reps.indices[2] > 2);
  CHECK(reps.indices[3] > reps.indices[2]);
  Skeleton sk(*x, {0, 2});
  // The class node and the limit are merged both ways.
  auto inf = sk.node_of(Point::named(0));
  auto far = sk.node_of(Point::block(0, 99));
  CHECK(sk.above(inf).test(far));
  CHECK(sk.above(far).test(inf));
}

}
