#include <doctest.h>

#include "helpers.hpp"
#include "ordcomp/io.hpp"
#include "ordcomp/suite.hpp"

using namespace ordcomp;

TEST_SUITE("suite") {

TEST_CASE("parallel and serial reports agree") {
  auto corpus = builtin_corpus(3);
  auto a = theorem_suite(corpus), b = theorem_suite_serial(corpus);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(a.disagreements() == 0);
}

TEST_CASE("fixture corpus") {
  auto corpus = corpus_from_json(load_json_file(testing_helpers::kFixtures / "small.corpus.json"),
                                 testing_helpers::kFixtures);
  CHECK(corpus.pairs.size() == 4);
  auto r = theorem_suite(corpus);
  CHECK(r.disagreements() == 0);
  bool informational = false;
  for (const auto& row : r.rows) informational = informational || row.informational;
  CHECK(informational);
}

}
