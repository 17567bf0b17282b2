#ifndef ORDCOMP_FINITE_HPP
#define ORDCOMP_FINITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcomp/rng.hpp"
#include "ordcomp/space.hpp"

namespace ordcomp {

using Mask = std::uint64_t;

inline constexpr int kMaxFinitePoints = 64;

// Partial order on {0..n-1} as bit rows; n <= 64.
struct FinPoset {
  int n = 0;
  std::vector<Mask> up;    // bit j of up[i]: i <= j
  std::vector<Mask> down;  // bit j of down[i]: j <= i

  // Reflexive-transitive closure of `pairs`. Throws InputError on a cycle.
  static FinPoset from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  static FinPoset antichain(int n);
  static FinPoset chain(int n);

  Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
  bool leq(int i, int j) const { return (up[i] >> j) & 1u; }
  Mask upclose(Mask s) const;
  Mask downclose(Mask s) const;
  bool is_upset(Mask s) const { return upclose(s) == s; }
  // All upsets in increasing numeric order. n <= 20.
  std::vector<Mask> upsets() const;
  // Same poset relabelled: point i becomes perm[i].
  FinPoset relabel(const std::vector<int>& perm) const;

  friend bool operator==(const FinPoset&, const FinPoset&) = default;
};

// One representative per isomorphism class, n <= 5.
std::vector<FinPoset> posets_up_to_iso(int n);

// Random order: each pair i < j of a random linear extension is related with
// probability num/den, then closed.
FinPoset random_poset(Rng& rng, int n, std::uint64_t num = 1, std::uint64_t den = 3);

std::vector<std::string> default_point_names(int n);

// Finite ordered (discrete) space with the given point names.
SpacePtr space_from_poset(const FinPoset& p, std::vector<std::string> names = {});
FinPoset poset_of(const SpacePresentation& x);

Mask mask_of(const RSet& s);
RSet rset_of(const CarrierPtr& c, Mask m);

}  // namespace ordcomp

#endif  // ORDCOMP_FINITE_HPP
