// Brute-force reference computations used by the tests. They work on plain
// relation matrices and explicit subsets so that they share no code paths
// with the engine.
#ifndef ORDCOMP_TESTS_ORACLES_HPP
#define ORDCOMP_TESTS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ordcomp/dlat.hpp"
#include "ordcomp/finite.hpp"
#include "ordcomp/map.hpp"

namespace oracle {

struct Rel {
  int n = 0;
  std::vector<std::vector<bool>> le;

  static Rel of(const ordcomp::FinPoset& p) {
    Rel r{p.n, std::vector<std::vector<bool>>(p.n, std::vector<bool>(p.n))};
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j) r.le[i][j] = p.leq(i, j);
    return r;
  }
  static Rel of(const ordcomp::SpacePresentation& x) {
    int n = static_cast<int>(x.carrier().named_count());
    Rel r{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n))};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r.le[i][j] = x.leq(ordcomp::Point::named(i), ordcomp::Point::named(j));
    return r;
  }

  std::uint64_t down(std::uint64_t s) const {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (((s >> j) & 1) && le[i][j]) out |= std::uint64_t{1} << i;
    return out;
  }
  std::uint64_t up(std::uint64_t s) const {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (((s >> i) & 1) && le[i][j]) out |= std::uint64_t{1} << j;
    return out;
  }
  bool is_upset(std::uint64_t s) const { return up(s) == s; }
  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

  // Every subset, kept when up-closed.
  std::vector<std::uint64_t> upsets() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s <= all(); ++s)
      if (up(s) == s) out.push_back(s);
    return out;
  }
};

inline bool monotone(const Rel& a, const Rel& b, const std::vector<int>& f) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (a.le[i][j] && !b.le[f[i]][f[j]]) return false;
  return true;
}

// Order-preserving, and f(x) <= y forces some x' >= x with f(x') = y.
inline bool p_morphism(const Rel& a, const Rel& b, const std::vector<int>& f) {
  if (!monotone(a, b, f)) return false;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < b.n; ++y) {
      if (!b.le[f[x]][y]) continue;
      bool found = false;
      for (int x2 = 0; x2 < a.n && !found; ++x2) found = a.le[x][x2] && f[x2] == y;
      if (!found) return false;
    }
  return true;
}

// Every function {0..n-1} -> {0..m-1}, in lexicographic order.
inline std::vector<std::vector<int>> all_functions(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 0);
  if (m == 0) return n == 0 ? std::vector<std::vector<int>>{f} : out;
  while (true) {
    out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == m - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

// Prime filters as lattice homomorphisms onto {0,1}, found by exhaustive
// backtracking over value assignments in index order.
inline std::vector<std::vector<bool>> prime_filters(const ordcomp::FinDLat& d) {
  const int n = d.size();
  std::vector<std::vector<bool>> out;
  std::vector<int> val(n, -1);
  auto consistent = [&](int k) {
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b) {
        if (d.leq(a, b) && val[a] == 1 && val[b] == 0) return false;
        int m = d.meet(a, b), j = d.join(a, b);
        if (m <= k && val[m] != (val[a] & val[b])) return false;
        if (j <= k && val[j] != (val[a] | val[b])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      if (val[d.top()] == 1 && val[d.bottom()] == 0) {
        std::vector<bool> f(n);
        for (int i = 0; i < n; ++i) f[i] = val[i] == 1;
        out.push_back(f);
      }
      return;
    }
    for (int v = 0; v < 2; ++v) {
      val[k] = v;
      if (consistent(k)) self(self, k + 1);
    }
    val[k] = -1;
  };
  rec(rec, 0);
  return out;
}

// Greatest c with c ∧ a <= b, when it exists.
inline std::optional<int> relative_pseudocomplement(const ordcomp::FinDLat& d, int a, int b) {
  std::optional<int> best;
  for (int c = 0; c < d.size(); ++c)
    if (d.leq(d.meet(c, a), b) && (!best || d.leq(*best, c))) best = c;
  if (!best) return std::nullopt;
  for (int c = 0; c < d.size(); ++c)
    if (d.leq(d.meet(c, a), b) && !d.leq(c, *best)) return std::nullopt;
  return best;
}

}  // namespace oracle

#endif  // ORDCOMP_TESTS_ORACLES_HPP
