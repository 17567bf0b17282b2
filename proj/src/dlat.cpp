#include "ordcomp/dlat.hpp"

#include <algorithm>
#include <map>

#include "ordcomp/error.hpp"
#include "ordcomp/kernels.hpp"

namespace ordcomp {

std::variant<FinDLat, LatticeViolation> FinDLat::validate(
    std::vector<std::string> ids, const std::vector<std::pair<std::string, std::string>>& leq) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (!index.emplace(ids[i], static_cast<int>(i)).second)
      throw InputError("duplicate lattice element '" + ids[i] + "'");
  std::vector<Bits> rows(ids.size(), Bits(ids.size()));
  for (const auto& [a, b] : leq) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw InputError("unknown lattice element in pair (" + a + ", " + b + ")");
    rows[ia->second].set(ib->second);
  }
  return validate(std::move(ids), std::move(rows));
}

std::variant<FinDLat, LatticeViolation> FinDLat::validate(std::vector<std::string> ids,
                                                          std::vector<Bits> rows) {
  const int n = static_cast<int>(ids.size());
  if (n == 0) return LatticeViolation{"bounds", {}};
  if (static_cast<int>(rows.size()) != n) throw InputError("leq table has the wrong size");
  for (int i = 0; i < n; ++i) rows[i].set(i);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rows[i].test(k)) rows[i] |= rows[k];

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rows[i].test(j) && rows[j].test(i)) return LatticeViolation{"antisymmetry", {ids[i], ids[j]}};

  FinDLat d;
  d.ids_ = std::move(ids);
  d.up_ = std::move(rows);
  std::vector<Bits> down(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.up_[i].test(j)) down[j].set(i);

  d.bottom_ = -1;
  d.top_ = -1;
  for (int i = 0; i < n; ++i) {
    if (d.up_[i].count() == static_cast<std::size_t>(n)) d.bottom_ = i;
    if (down[i].count() == static_cast<std::size_t>(n)) d.top_ = i;
  }
  if (d.bottom_ < 0 || d.top_ < 0) return LatticeViolation{"bounds", {}};

  d.meet_.assign(n * n, -1);
  d.join_.assign(n * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Bits lower = down[a] & down[b];
      Bits upper = d.up_[a] & d.up_[b];
      for (auto c : lower.indices())
        if (lower.subset_of(down[c])) d.meet_[a * n + b] = static_cast<int>(c);
      for (auto c : upper.indices())
        if (upper.subset_of(d.up_[c])) d.join_[a * n + b] = static_cast<int>(c);
      if (d.meet_[a * n + b] < 0) return LatticeViolation{"meet", {d.ids_[a], d.ids_[b]}};
      if (d.join_[a * n + b] < 0) return LatticeViolation{"join", {d.ids_[a], d.ids_[b]}};
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (d.meet(a, d.join(b, c)) != d.join(d.meet(a, b), d.meet(a, c)))
          return LatticeViolation{"distributivity", {d.ids_[a], d.ids_[b], d.ids_[c]}};
  return d;
}

FinDLat FinDLat::make(std::vector<std::string> ids, std::vector<Bits> leq_rows) {
  auto v = validate(std::move(ids), std::move(leq_rows));
  if (auto* w = std::get_if<LatticeViolation>(&v)) {
    std::string msg = "not a bounded distributive lattice: " + w->axiom;
    for (const auto& e : w->elements) msg += " " + e;
    throw InputError(msg);
  }
  return std::get<FinDLat>(std::move(v));
}

std::optional<int> FinDLat::index_of(const std::string& name) const {
  auto it = std::find(ids_.begin(), ids_.end(), name);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

// ---------------------------------------------------------------- filters

namespace {

std::vector<Bits> to_bits(const std::vector<std::uint32_t>& masks, int n) {
  std::vector<Bits> out;
  for (auto m : masks) {
    Bits b(n);
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) b.set(i);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Bits> prime_filters_brute(const FinDLat& d) {
  return to_bits(kernels::prime_filter_scan_parallel(d), d.size());
}

std::vector<int> join_irreducibles(const FinDLat& d) {
  std::vector<int> out;
  for (int j = 0; j < d.size(); ++j) {
    if (j == d.bottom()) continue;
    bool irreducible = true;
    for (int a = 0; a < d.size() && irreducible; ++a)
      for (int b = 0; b < d.size(); ++b)
        if (a != j && b != j && d.join(a, b) == j) {
          irreducible = false;
          break;
        }
    if (irreducible) out.push_back(j);
  }
  return out;
}

std::vector<Bits> prime_filters(const FinDLat& d) {
  std::vector<Bits> out;
  for (int j : join_irreducibles(d)) out.push_back(d.up(j));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- Heyting

std::optional<int> heyting_implication(const FinDLat& d, int a, int b) {
  int best = d.bottom();
  for (int c = 0; c < d.size(); ++c)
    if (d.leq(d.meet(c, a), b)) best = d.join(best, c);
  if (!d.leq(d.meet(best, a), b)) return std::nullopt;
  return best;
}

bool is_heyting(const FinDLat& d) {
  for (int a = 0; a < d.size(); ++a)
    for (int b = 0; b < d.size(); ++b)
      if (!heyting_implication(d, a, b)) return false;
  return true;
}

std::optional<HomWitness> check_lattice_hom(const FinDLat& from, const FinDLat& to,
                                            const std::vector<int>& h) {
  if (static_cast<int>(h.size()) != from.size()) throw InputError("homomorphism is not total");
  for (int v : h)
    if (v < 0 || v >= to.size()) throw InputError("homomorphism value out of range");
  if (h[from.bottom()] != to.bottom()) return HomWitness{"bottom", from.bottom(), from.bottom()};
  if (h[from.top()] != to.top()) return HomWitness{"top", from.top(), from.top()};
  for (int a = 0; a < from.size(); ++a)
    for (int b = 0; b < from.size(); ++b) {
      if (h[from.meet(a, b)] != to.meet(h[a], h[b])) return HomWitness{"meet", a, b};
      if (h[from.join(a, b)] != to.join(h[a], h[b])) return HomWitness{"join", a, b};
    }
  return std::nullopt;
}

std::optional<HomWitness> check_heyting_hom(const FinDLat& from, const FinDLat& to,
                                            const std::vector<int>& h) {
  if (auto w = check_lattice_hom(from, to, h)) return w;
  for (int a = 0; a < from.size(); ++a)
    for (int b = 0; b < from.size(); ++b) {
      auto src = heyting_implication(from, a, b);
      auto dst = heyting_implication(to, h[a], h[b]);
      if (!src || !dst) throw PreconditionError("Heyting hom check on a non-Heyting lattice");
      if (h[*src] != *dst) return HomWitness{"implication", a, b};
    }
  return std::nullopt;
}

FinDLat upset_lattice(const std::vector<Bits>& poset_up) {
  const std::size_t n = poset_up.size();
  if (n > 20) throw SizeError("upset lattice capped at 20 points");
  std::vector<std::uint32_t> ups;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      if (s >> i & 1u)
        for (auto j : poset_up[i].indices())
          if (!(s >> j & 1u)) closed = false;
    if (closed) ups.push_back(s);
  }
  std::vector<std::string> ids;
  for (auto s : ups) {
    std::string id = "{";
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1u) id += (id.size() > 1 ? "," : "") + std::to_string(i);
    ids.push_back(id + "}");
  }
  std::vector<Bits> rows(ups.size(), Bits(ups.size()));
  for (std::size_t a = 0; a < ups.size(); ++a)
    for (std::size_t b = 0; b < ups.size(); ++b)
      if ((ups[a] & ~ups[b]) == 0) rows[a].set(b);
  return FinDLat::make(std::move(ids), std::move(rows));
}

}  // namespace ordcomp
