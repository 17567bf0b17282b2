#include <doctest.h>

#include "oracles.hpp"
#include "ordcomp/kernels.hpp"

using namespace ordcomp;

namespace {

std::vector<Bits> up_rows(const FinPoset& p) {
  std::vector<Bits> rows;
  for (int i = 0; i < p.n; ++i) {
    Bits b(p.n);
    for (int j = 0; j < p.n; ++j)
      if (p.leq(i, j)) b.set(j);
    rows.push_back(b);
  }
  return rows;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("parallel prime-filter scan equals serial") {
  Rng rng(81);
  for (int k = 0; k < 60; ++k) {
    auto p = random_poset(rng, 1 + static_cast<int>(rng.below(5)));
    auto d = upset_lattice(up_rows(p));
    if (d.size() > kPrimeFilterBruteCap) continue;
    auto s = kernels::prime_filter_scan_serial(d);
    CHECK(s == kernels::prime_filter_scan_parallel(d));
    CHECK(s.size() == static_cast<std::size_t>(p.n));
  }
}

TEST_CASE("monotone maps: serial, parallel and brute force") {
  Rng rng(82);
  for (int k = 0; k < 60; ++k) {
    auto a = random_poset(rng, 1 + static_cast<int>(rng.below(4)));
    auto b = random_poset(rng, 1 + static_cast<int>(rng.below(4)));
    std::vector<int> fixed(a.n, -1);
    if (rng.coin()) fixed[0] = static_cast<int>(rng.below(b.n));
    auto s = kernels::monotone_maps_serial(a, b, fixed);
    CHECK(s == kernels::monotone_maps_parallel(a, b, fixed));
    std::vector<std::vector<int>> ref;
    auto ra = oracle::Rel::of(a), rb = oracle::Rel::of(b);
    for (const auto& f : oracle::all_functions(a.n, b.n))
      if (oracle::monotone(ra, rb, f) && (fixed[0] < 0 || f[0] == fixed[0])) ref.push_back(f);
    CHECK(s == ref);
  }
}

TEST_CASE("Priestley-basis scan: serial, parallel and the definition") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : posets_up_to_iso(n)) {
      auto s = kernels::priestley_basis_scan_serial(p);
      CHECK(s == kernels::priestley_basis_scan_parallel(p));
      auto ups = p.upsets();
      auto rel = oracle::Rel::of(p);
      std::size_t expected = 0;
      for (std::uint32_t code = 0; code < (1u << ups.size()); ++code) {
        std::vector<Mask> fam;
        for (std::size_t i = 0; i < ups.size(); ++i)
          if ((code >> i) & 1) fam.push_back(ups[i]);
        auto in = [&](Mask m) { return std::find(fam.begin(), fam.end(), m) != fam.end(); };
        bool ok = in(0) && in(p.all());
        for (auto a : fam)
          for (auto b : fam) ok = ok && in(a | b) && in(a & b);
        for (int x = 0; x < n && ok; ++x)
          for (int y = 0; y < n && ok; ++y) {
            if (rel.le[x][y]) continue;
            bool sep = false;
            for (auto u : fam) sep = sep || (((u >> x) & 1) && !((u >> y) & 1));
            ok = sep;
          }
        for (int x = 0; x < n && ok; ++x) {
          bool diff = false;
          for (auto u : fam)
            for (auto v : fam) diff = diff || (u & ~v) == (Mask{1} << x);
          ok = diff;
        }
        if (ok) {
          ++expected;
          CHECK(std::find(s.begin(), s.end(), code) != s.end());
        }
      }
      CHECK(s.size() == expected);
    }
}

}
