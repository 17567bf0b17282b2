#include <doctest.h>

#include "ordcomp/corpus.hpp"
#include "ordcomp/dot.hpp"
#include "ordcomp/finite.hpp"
#include "ordcomp/io.hpp"

using namespace ordcomp;

TEST_SUITE("dot") {

TEST_CASE("limit above N: N filled, the limit hollow") {
  auto dot = render_pair_dot(*pair_yb());
  CHECK(dot.find("label=\"inf\", style=solid") != std::string::npos);
  CHECK(dot.find("label=\"N:*\", style=filled") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("output does not depend on declaration order") {
  auto a = space_from_json(Json::parse(R"({"carrier": {"kind": "finite", "isolated": ["x", "y", "z"]},
                                           "order": {"leq": [["x", "z"], ["y", "z"]]}})"));
  auto b = space_from_json(Json::parse(R"({"carrier": {"kind": "finite", "isolated": ["z", "y", "x"]},
                                           "order": {"leq": [["y", "z"], ["x", "z"]]}})"));
  CHECK(render_space_dot(*a) == render_space_dot(*b));
}

TEST_CASE("only covering edges are drawn") {
  auto x = space_from_poset(FinPoset::chain(3));
  auto dot = render_space_dot(*x);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 2);
}

}
