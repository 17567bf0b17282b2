#include <doctest.h>

#include "helpers.hpp"
#include "ordcomp/error.hpp"

using namespace ordcomp;
using namespace testing_helpers;

TEST_SUITE("setalg") {

TEST_CASE("boolean operations agree pointwise") {
  auto c = mixed_carrier();
  Rng rng(1);
  for (int k = 0; k < 300; ++k) {
    auto s = random_rset(rng, c), t = random_rset(rng, c);
    auto u = s | t, i = s & t, d = s - t, n = complement(s);
    for (const auto& p : sample_points(*c)) {
      CHECK(u.contains(p) == (s.contains(p) || t.contains(p)));
      CHECK(i.contains(p) == (s.contains(p) && t.contains(p)));
      CHECK(d.contains(p) == (s.contains(p) && !t.contains(p)));
      CHECK(n.contains(p) == !s.contains(p));
    }
    CHECK(complement(s | t) == (complement(s) & complement(t)));
    CHECK(complement(s & t) == (complement(s) | complement(t)));
    CHECK((s | (s & t)) == s);
    CHECK((s & (s | t)) == s);
  }
}

TEST_CASE("structural equality is extensional") {
  auto c = mixed_carrier();
  Rng rng(2);
  for (int k = 0; k < 300; ++k) {
    auto s = random_rset(rng, c), t = random_rset(rng, c);
    bool same = true;
    for (const auto& p : sample_points(*c)) same = same && s.contains(p) == t.contains(p);
    CHECK((s == t) == same);
    CHECK(s.subset_of(t) == (s - t).is_empty());
  }
}

TEST_CASE("closure and interior follow the one-point compactification") {
  auto c = mixed_carrier();
  Rng rng(3);
  const auto a = Point::named(0);  // limit of block A
  for (int k = 0; k < 300; ++k) {
    auto s = random_rset(rng, c);
    auto cl = closure(*c, s), in = interior(*c, s);
    for (const auto& p : sample_points(*c)) {
      bool limit = p == a;
      bool infinite_a = s.trace(0).cofinite;
      CHECK(cl.contains(p) == (s.contains(p) || (limit && infinite_a)));
      CHECK(in.contains(p) == (s.contains(p) && (!limit || infinite_a)));
    }
    CHECK(closure(*c, cl) == cl);
    CHECK(interior(*c, in) == in);
    CHECK(interior(*c, s) == complement(closure(*c, complement(s))));
    auto cls = classify_set(*c, s);
    bool clopen_law = s.trace(0).cofinite == s.contains(a);
    CHECK(cls.clopen == clopen_law);
    CHECK(cls.clopen == (cl == s && in == s));
  }
}

TEST_CASE("clopens form a Boolean subalgebra") {
  auto c = mixed_carrier();
  Rng rng(4);
  int seen = 0;
  for (int k = 0; k < 500 && seen < 100; ++k) {
    auto s = random_rset(rng, c), t = random_rset(rng, c);
    if (!classify_set(*c, s).clopen || !classify_set(*c, t).clopen) continue;
    ++seen;
    CHECK(classify_set(*c, s | t).clopen);
    CHECK(classify_set(*c, s & t).clopen);
    CHECK(classify_set(*c, s - t).clopen);
    CHECK(classify_set(*c, complement(s)).clopen);
  }
  CHECK(seen > 20);
}

TEST_CASE("finite carriers: every set is clopen") {
  auto c = make_carrier(Carrier::finite(4));
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    auto s = random_rset(rng, c);
    CHECK(classify_set(*c, s).clopen);
    CHECK(closure(*c, s) == s);
    CHECK(interior(*c, s) == s);
  }
}

TEST_CASE("density") {
  auto c = mixed_carrier();
  auto blockA = RSet::whole_block(c, 0);
  auto withLimit = blockA | RSet::point(c, Point::named(0));
  CHECK(is_dense_in(*c, blockA, withLimit).dense);
  auto finite = RSet::point(c, Point::block(0, 3));
  auto d = is_dense_in(*c, finite, withLimit);
  CHECK_FALSE(d.dense);
  REQUIRE(d.witness);
  CHECK_FALSE(closure(*c, finite).contains(*d.witness));
  CHECK_THROWS_AS(is_dense_in(*c, withLimit, blockA), PreconditionError);
}

TEST_CASE("clopen separators") {
  auto c = mixed_carrier();
  auto limit = RSet::point(c, Point::named(0));
  auto blockA = RSet::whole_block(c, 0);
  // The limit cannot be separated from a cofinite part of its block.
  CHECK_FALSE(clopen_separator(*c, limit, blockA));
  auto three = RSet::point(c, Point::block(0, 3));
  auto w = clopen_separator(*c, limit, three);
  REQUIRE(w);
  CHECK(classify_set(*c, *w).clopen);
  CHECK(w->contains(Point::named(0)));
  CHECK_FALSE(w->contains(Point::block(0, 3)));
}

TEST_CASE("points format and parse") {
  auto c = mixed_carrier();
  for (const auto& p : sample_points(*c)) CHECK(c->parse(c->format(p)) == p);
  CHECK(c->format(Point::block(1, 7)) == "B:7");
  CHECK_THROWS_AS(c->parse("C:1"), InputError);
  CHECK_THROWS_AS(c->parse("A:x"), InputError);
  CHECK_THROWS_AS(Carrier::finite(std::vector<std::string>{"p", "p"}), InputError);
  CHECK_THROWS_AS(Carrier::tail({{"A", "a"}}, {"a"}), InputError);
}

TEST_CASE("carrier mismatch is an input error") {
  auto c1 = mixed_carrier();
  auto c2 = make_carrier(Carrier::finite(2));
  CHECK_THROWS_AS(RSet::full(c1) | RSet::full(c2), InputError);
}

}
