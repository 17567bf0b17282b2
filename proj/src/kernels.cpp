#include "ordcomp/kernels.hpp"

#include <algorithm>
#include <bit>

#include "ordcomp/error.hpp"

#ifdef ORDCOMP_HAVE_OPENMP
#include <omp.h>
#endif

namespace ordcomp::kernels {

namespace {

struct ScanTables {
  int n = 0;
  std::uint32_t bottom = 0;
  std::vector<std::uint32_t> up;
  std::vector<int> meet, join;
};

ScanTables tables_of(const FinDLat& d) {
  if (d.size() > kPrimeFilterBruteCap)
    throw SizeError("brute-force prime filter scan capped at " +
                    std::to_string(kPrimeFilterBruteCap) + " elements");
  ScanTables t;
  t.n = d.size();
  t.bottom = 1u << d.bottom();
  for (int a = 0; a < t.n; ++a) {
    std::uint32_t m = 0;
    for (auto b : d.up(a).indices()) m |= 1u << b;
    t.up.push_back(m);
  }
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b) {
      t.meet.push_back(d.meet(a, b));
      t.join.push_back(d.join(a, b));
    }
  return t;
}

bool is_prime_filter(const ScanTables& t, std::uint32_t m) {
  if (m == 0 || (m & t.bottom)) return false;
  for (std::uint32_t r = m; r; r &= r - 1)
    if (t.up[std::countr_zero(r)] & ~m) return false;
  for (std::uint32_t r = m; r; r &= r - 1) {
    int a = std::countr_zero(r);
    for (std::uint32_t s = r; s; s &= s - 1)
      if (!(m >> t.meet[a * t.n + std::countr_zero(s)] & 1u)) return false;
  }
  std::uint32_t out = ~m & ((t.n == 32 ? 0u : 1u << t.n) - 1);
  for (std::uint32_t r = out; r; r &= r - 1) {
    int a = std::countr_zero(r);
    for (std::uint32_t s = r; s; s &= s - 1)
      if (m >> t.join[a * t.n + std::countr_zero(s)] & 1u) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> prime_filter_scan_serial(const FinDLat& d) {
  auto t = tables_of(d);
  std::vector<std::uint32_t> out;
  const std::uint64_t total = std::uint64_t{1} << t.n;
  for (std::uint64_t m = 0; m < total; ++m)
    if (is_prime_filter(t, static_cast<std::uint32_t>(m))) out.push_back(static_cast<std::uint32_t>(m));
  return out;
}

std::vector<std::uint32_t> prime_filter_scan_parallel(const FinDLat& d) {
#ifdef ORDCOMP_HAVE_OPENMP
  auto t = tables_of(d);
  const std::int64_t total = std::int64_t{1} << t.n;
  const int chunks = 64;
  std::vector<std::vector<std::uint32_t>> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < chunks; ++c) {
    std::int64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
    for (std::int64_t m = lo; m < hi; ++m)
      if (is_prime_filter(t, static_cast<std::uint32_t>(m)))
        parts[c].push_back(static_cast<std::uint32_t>(m));
  }
  std::vector<std::uint32_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
#else
  return prime_filter_scan_serial(d);
#endif
}

// ---------------------------------------------------------------- maps

namespace {

struct MapSearch {
  const FinPoset& from;
  const FinPoset& to;
  const std::vector<int>& fixed;
  std::vector<int> cur;
  std::vector<std::vector<int>> found;

  bool consistent(int i) const {
    for (int j = 0; j < i; ++j) {
      if (from.leq(j, i) && !to.leq(cur[j], cur[i])) return false;
      if (from.leq(i, j) && !to.leq(cur[i], cur[j])) return false;
    }
    return true;
  }

  void run(int i) {
    if (i == from.n) {
      found.push_back(cur);
      return;
    }
    int lo = fixed[i] >= 0 ? fixed[i] : 0;
    int hi = fixed[i] >= 0 ? fixed[i] + 1 : to.n;
    for (int v = lo; v < hi; ++v) {
      cur[i] = v;
      if (consistent(i)) run(i + 1);
    }
  }
};

void check_fixed(const FinPoset& from, const FinPoset& to, const std::vector<int>& fixed) {
  if (static_cast<int>(fixed.size()) != from.n) throw InputError("constraint size mismatch");
  for (int v : fixed)
    if (v >= to.n) throw InputError("constraint value out of range");
}

}  // namespace

std::vector<std::vector<int>> monotone_maps_serial(const FinPoset& from, const FinPoset& to,
                                                   const std::vector<int>& fixed) {
  check_fixed(from, to, fixed);
  MapSearch s{from, to, fixed, std::vector<int>(from.n, 0), {}};
  s.run(0);
  return s.found;
}

std::vector<std::vector<int>> monotone_maps_parallel(const FinPoset& from, const FinPoset& to,
                                                     const std::vector<int>& fixed) {
#ifdef ORDCOMP_HAVE_OPENMP
  check_fixed(from, to, fixed);
  if (from.n == 0 || to.n == 0) return monotone_maps_serial(from, to, fixed);
  // Split on the value of point 0.
  std::vector<std::vector<std::vector<int>>> parts(to.n);
#pragma omp parallel for schedule(dynamic, 1)
  for (int v = 0; v < to.n; ++v) {
    if (fixed[0] >= 0 && fixed[0] != v) continue;
    std::vector<int> f = fixed;
    f[0] = v;
    MapSearch s{from, to, f, std::vector<int>(from.n, 0), {}};
    s.run(0);
    parts[v] = std::move(s.found);
  }
  std::vector<std::vector<int>> out;
  for (auto& p : parts)
    for (auto& m : p) out.push_back(std::move(m));
  return out;
#else
  return monotone_maps_serial(from, to, fixed);
#endif
}

// ---------------------------------------------------------------- bases

namespace {

struct BasisTables {
  const FinPoset& p;
  std::vector<Mask> ups;
  int m = 0;
  std::vector<int> uni, inter;
  std::uint32_t required = 0;

  explicit BasisTables(const FinPoset& poset) : p(poset), ups(poset.upsets()) {
    m = static_cast<int>(ups.size());
    if (m > 20) throw SizeError("basis scan capped at 20 upsets");
    auto index = [&](Mask s) {
      return static_cast<int>(std::lower_bound(ups.begin(), ups.end(), s) - ups.begin());
    };
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        uni.push_back(index(ups[i] | ups[j]));
        inter.push_back(index(ups[i] & ups[j]));
      }
    required = 1u | (1u << (m - 1));  // ∅ and the whole space
  }

  bool accepts(std::uint32_t s) const {
    if ((s & required) != required) return false;
    for (std::uint32_t r = s; r; r &= r - 1) {
      int i = std::countr_zero(r);
      for (std::uint32_t t = r; t; t &= t - 1) {
        int j = std::countr_zero(t);
        if (!(s >> uni[i * m + j] & 1u) || !(s >> inter[i * m + j] & 1u)) return false;
      }
    }
    for (int x = 0; x < p.n; ++x) {
      Mask bit = Mask{1} << x;
      for (int y = 0; y < p.n; ++y) {
        if (p.leq(x, y)) continue;
        bool sep = false;
        for (std::uint32_t r = s; r && !sep; r &= r - 1) {
          Mask u = ups[std::countr_zero(r)];
          sep = (u & bit) && !(u >> y & 1u);
        }
        if (!sep) return false;
      }
      bool diff = false;
      for (std::uint32_t r = s; r && !diff; r &= r - 1)
        for (std::uint32_t t = s; t && !diff; t &= t - 1)
          diff = (ups[std::countr_zero(r)] & ~ups[std::countr_zero(t)]) == bit;
      if (!diff) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<std::uint32_t> priestley_basis_scan_serial(const FinPoset& p) {
  BasisTables t(p);
  std::vector<std::uint32_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << t.m); ++s)
    if (t.accepts(static_cast<std::uint32_t>(s))) out.push_back(static_cast<std::uint32_t>(s));
  return out;
}

std::vector<std::uint32_t> priestley_basis_scan_parallel(const FinPoset& p) {
#ifdef ORDCOMP_HAVE_OPENMP
  BasisTables t(p);
  const std::int64_t total = std::int64_t{1} << t.m;
  const int chunks = 64;
  std::vector<std::vector<std::uint32_t>> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < chunks; ++c) {
    std::int64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
    for (std::int64_t s = lo; s < hi; ++s)
      if (t.accepts(static_cast<std::uint32_t>(s))) parts[c].push_back(static_cast<std::uint32_t>(s));
  }
  std::vector<std::uint32_t> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
#else
  return priestley_basis_scan_serial(p);
#endif
}

bool parallel_enabled() {
#ifdef ORDCOMP_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef ORDCOMP_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ordcomp::kernels
