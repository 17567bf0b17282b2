#ifndef ORDCOMP_TESTS_HELPERS_HPP
#define ORDCOMP_TESTS_HELPERS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "ordcomp/rng.hpp"
#include "ordcomp/setalg.hpp"

namespace testing_helpers {

inline const std::filesystem::path kFixtures = ORDCOMP_FIXTURES_DIR;

// Two blocks, one with a limit, plus an isolated point.
inline ordcomp::CarrierPtr mixed_carrier() {
  return ordcomp::make_carrier(ordcomp::Carrier::tail({{"A", "a"}, {"B", std::nullopt}}, {"t"}));
}

// Points examined by pointwise oracles: every named point, indices 0..10 of
// each block, and one far index standing in for the rest.
inline std::vector<ordcomp::Point> sample_points(const ordcomp::Carrier& c) {
  std::vector<ordcomp::Point> out;
  for (std::uint32_t i = 0; i < c.named_count(); ++i) out.push_back(ordcomp::Point::named(i));
  for (std::uint32_t b = 0; b < c.block_count(); ++b) {
    for (std::uint64_t n = 0; n <= 10; ++n) out.push_back(ordcomp::Point::block(b, n));
    out.push_back(ordcomp::Point::block(b, 1000));
  }
  return out;
}

// Random set with explicit indices in 0..6.
inline ordcomp::RSet random_rset(ordcomp::Rng& rng, const ordcomp::CarrierPtr& c) {
  std::vector<ordcomp::Trace> traces(c->block_count());
  for (auto& t : traces) {
    t.cofinite = rng.coin();
    for (std::uint64_t n = 0; n < 7; ++n)
      if (rng.chance(1, 3)) t.elems.push_back(n);
  }
  ordcomp::Bits named(c->named_count());
  for (std::size_t i = 0; i < named.size(); ++i) named.set(i, rng.coin());
  return ordcomp::RSet(c, traces, named);
}

}  // namespace testing_helpers

#endif  // ORDCOMP_TESTS_HELPERS_HPP
