#include <doctest.h>

#include "helpers.hpp"
#include "ordcomp/error.hpp"
#include "ordcomp/order.hpp"

using namespace ordcomp;
using namespace testing_helpers;

TEST_SUITE("order") {

TEST_CASE("finite orders match Warshall closure") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    int n = 1 + static_cast<int>(rng.below(6));
    auto c = make_carrier(Carrier::finite(n));
    // Random forward edges only, so the closure is antisymmetric.
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    std::vector<Rectangle> rects;
    for (int i = 0; i < n; ++i) {
      le[i][i] = true;
      for (int j = i + 1; j < n; ++j)
        if (rng.chance(1, 3)) {
          le[i][j] = true;
          rects.push_back({RSet::point(c, Point::named(i)), RSet::point(c, Point::named(j))});
        }
    }
    for (int m = 0; m < n; ++m)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (le[i][m] && le[m][j]) le[i][j] = true;
    auto o = OrderPresentation::make(c, rects);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(o.leq(Point::named(i), Point::named(j)) == le[i][j]);
  }
}

TEST_CASE("cycles are rejected with a witness") {
  auto c = make_carrier(Carrier::finite(3));
  auto p = [&](int i) { return RSet::point(c, Point::named(i)); };
  auto v = OrderPresentation::validate(c, {{p(0), p(1)}, {p(1), p(2)}, {p(2), p(0)}});
  auto* bad = std::get_if<AntisymmetryViolation>(&v);
  REQUIRE(bad);
  CHECK(bad->x != bad->y);
  CHECK_THROWS_AS(OrderPresentation::make(c, {{p(0), p(1)}, {p(1), p(0)}}), InputError);
}

TEST_CASE("rectangles compose") {
  auto c = mixed_carrier();
  auto blockA = RSet::whole_block(c, 0);
  auto limit = RSet::point(c, Point::named(0));
  auto top = RSet::point(c, Point::named(1));
  auto o = OrderPresentation::make(c, {{blockA, limit}, {limit, top}});
  CHECK(o.leq(Point::block(0, 5), Point::named(1)));
  CHECK_FALSE(o.leq(Point::named(1), Point::block(0, 5)));
  CHECK(o.up(Point::block(0, 2)) == (RSet::point(c, Point::block(0, 2)) | limit | top));
  CHECK(o.down(Point::named(1)) == (blockA | limit | top));
  CHECK(o.is_upset(limit | top));
  CHECK_FALSE(o.is_upset(limit));
}

TEST_CASE("closures agree with pointwise leq") {
  auto c = mixed_carrier();
  auto blockA = RSet::whole_block(c, 0);
  auto limit = RSet::point(c, Point::named(0));
  auto o = OrderPresentation::make(c, {{blockA, limit}, {RSet::point(c, Point::block(1, 4)), RSet::whole_block(c, 0)}});
  Rng rng(12);
  auto pts = sample_points(*c);
  for (int k = 0; k < 100; ++k) {
    auto s = random_rset(rng, c);
    auto up = o.upclose(s), down = o.downclose(s);
    for (const auto& q : pts) {
      bool u = false, d = false;
      for (const auto& p : pts) {
        if (!s.contains(p)) continue;
        u = u || o.leq(p, q);
        d = d || o.leq(q, p);
      }
      // Off the sample, members of cofinite traces behave like the far index.
      CHECK(up.contains(q) == u);
      CHECK(down.contains(q) == d);
    }
  }
}

}
