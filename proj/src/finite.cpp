#include "ordcomp/finite.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "ordcomp/error.hpp"

namespace ordcomp {

namespace {

void close(FinPoset& p) {
  for (int k = 0; k < p.n; ++k)
    for (int i = 0; i < p.n; ++i)
      if (p.leq(i, k)) p.up[i] |= p.up[k];
  p.down.assign(p.n, 0);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (p.leq(i, j)) p.down[j] |= Mask{1} << i;
}

void require_size(int n) {
  if (n < 0 || n > kMaxFinitePoints) throw SizeError("finite poset size out of range");
}

}  // namespace

FinPoset FinPoset::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  require_size(n);
  FinPoset p;
  p.n = n;
  p.up.assign(n, 0);
  for (int i = 0; i < n; ++i) p.up[i] = Mask{1} << i;
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("pair outside poset");
    p.up[a] |= Mask{1} << b;
  }
  close(p);
  for (int i = 0; i < n; ++i)
    if ((p.up[i] & p.down[i]) != (Mask{1} << i)) throw InputError("relation has a cycle");
  return p;
}

FinPoset FinPoset::antichain(int n) { return from_pairs(n, {}); }

FinPoset FinPoset::chain(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_pairs(n, pairs);
}

Mask FinPoset::upclose(Mask s) const {
  Mask out = 0;
  for (Mask r = s; r; r &= r - 1) out |= up[std::countr_zero(r)];
  return out;
}

Mask FinPoset::downclose(Mask s) const {
  Mask out = 0;
  for (Mask r = s; r; r &= r - 1) out |= down[std::countr_zero(r)];
  return out;
}

std::vector<Mask> FinPoset::upsets() const {
  if (n > 20) throw SizeError("upset enumeration capped at 20 points");
  std::vector<Mask> out;
  for (Mask s = 0; s <= all(); ++s)
    if (is_upset(s)) out.push_back(s);
  return out;
}

FinPoset FinPoset::relabel(const std::vector<int>& perm) const {
  FinPoset q;
  q.n = n;
  q.up.assign(n, 0);
  q.down.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq(i, j)) {
        q.up[perm[i]] |= Mask{1} << perm[j];
        q.down[perm[j]] |= Mask{1} << perm[i];
      }
  return q;
}

std::vector<FinPoset> posets_up_to_iso(int n) {
  if (n < 0 || n > 5) throw SizeError("isomorphism-class enumeration capped at 5 points");
  // Every finite order has a linear extension, so it suffices to relate
  // i < j only. Classes are keyed by the least relabelled up-table.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<int> perm(n);
  std::set<std::vector<Mask>> seen;
  std::vector<FinPoset> out;
  for (std::uint32_t code = 0; code < (1u << slots.size()); ++code) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (code >> k & 1u) pairs.push_back(slots[k]);
    FinPoset p = FinPoset::from_pairs(n, pairs);
    // Only transitively closed codes, so each labelled order is seen once.
    std::uint32_t closed = 0;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (p.leq(slots[k].first, slots[k].second)) closed |= 1u << k;
    if (closed != code) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Mask> best;
    do {
      auto q = p.relabel(perm);
      if (best.empty() || q.up < best) best = q.up;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(p);
  }
  return out;
}

FinPoset random_poset(Rng& rng, int n, std::uint64_t num, std::uint64_t den) {
  require_size(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(num, den)) pairs.emplace_back(perm[i], perm[j]);
  return FinPoset::from_pairs(n, pairs);
}

std::vector<std::string> default_point_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

SpacePtr space_from_poset(const FinPoset& p, std::vector<std::string> names) {
  if (names.empty()) names = default_point_names(p.n);
  if (static_cast<int>(names.size()) != p.n) throw InputError("name count does not match poset");
  auto c = make_carrier(Carrier::finite(std::move(names)));
  std::vector<Rectangle> rects;
  for (int i = 0; i < p.n; ++i) {
    Mask strict = p.up[i] & ~(Mask{1} << i);
    if (strict) rects.push_back({rset_of(c, Mask{1} << i), rset_of(c, strict)});
  }
  return make_space(OrderPresentation::make(c, std::move(rects)));
}

FinPoset poset_of(const SpacePresentation& x) {
  if (!x.is_finite()) throw PreconditionError("poset_of needs a finite space");
  int n = static_cast<int>(x.carrier().named_count());
  require_size(n);
  FinPoset p;
  p.n = n;
  p.up.assign(n, 0);
  for (int i = 0; i < n; ++i) p.up[i] = mask_of(x.up(Point::named(i)));
  p.down.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(i, j)) p.down[j] |= Mask{1} << i;
  return p;
}

Mask mask_of(const RSet& s) {
  if (!s.carrier().is_finite()) throw PreconditionError("mask_of needs a finite carrier");
  if (s.named().size() > kMaxFinitePoints) throw SizeError("more than 64 points");
  return s.named().word();
}

RSet rset_of(const CarrierPtr& c, Mask m) {
  if (!c->is_finite()) throw PreconditionError("rset_of needs a finite carrier");
  Bits b(c->named_count());
  for (std::size_t i = 0; i < c->named_count(); ++i)
    if (m >> i & 1u) b.set(i);
  return RSet(c, {}, std::move(b));
}

}  // namespace ordcomp
