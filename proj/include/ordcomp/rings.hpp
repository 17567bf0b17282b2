#ifndef ORDCOMP_RINGS_HPP
#define ORDCOMP_RINGS_HPP

#include <optional>
#include <span>
#include <vector>

#include "ordcomp/pair.hpp"
#include "ordcomp/verdict.hpp"

namespace ordcomp {

// A family of upsets of a base space: an explicit finite list, or the
// pullback R_Y = {e⁻¹U : U ∈ ClopUp(Y)} of a pair.
class UpsetRing {
 public:
  // Throws InputError when a member is not an upset of `base`.
  static UpsetRing explicit_ring(SpacePtr base, std::vector<RSet> members);
  static UpsetRing pullback(PairPtr pair);

  bool is_explicit() const { return !pair_; }
  const SpacePresentation& base() const { return *base_; }
  const SpacePtr& base_ptr() const { return base_; }
  // Explicit rings only.
  const std::vector<RSet>& members() const;
  // Pullback rings only.
  const CompactificationPair& pair() const;
  const PairPtr& pair_ptr() const { return pair_; }

  bool contains(const RSet& g) const;
  // Pullback rings: the clopen upset U of Y with e⁻¹U = g. Since e[X] is
  // dense, U can only be the closure of e[g].
  std::optional<RSet> target_of(const RSet& g) const;

  // Indices every check over this ring must treat as representatives.
  std::vector<std::uint64_t> support() const;

 private:
  SpacePtr base_;
  std::vector<RSet> members_;
  PairPtr pair_;
};

// Ladder checks. The first three each include the rungs below them; the
// Heyting and Esakia conditions include only the ring rung, so a Heyting
// basis is check_priestley_basis plus check_heyting_ring.
Verdict check_ring(const UpsetRing& r);
Verdict check_priestley_ring(const UpsetRing& r);
Verdict check_priestley_basis(const UpsetRing& r);

struct RingImplication {
  std::optional<RSet> value;  // greatest G ∈ R with G ∩ E ⊆ F
  std::size_t certified = 0;  // candidate members confirmed to lie below value
};

// Throws InputError unless E, F ∈ R. With `certify`, every swept candidate
// G ∈ R with G ∩ E ⊆ F is checked to lie below the result (EngineBug if not).
RingImplication heyting_implication_in_ring(const UpsetRing& r, const RSet& e, const RSet& f,
                                            const SweepConfig* certify = nullptr);

Verdict check_heyting_ring(const UpsetRing& r, const SweepConfig& cfg = {});
Verdict check_esakia_ring(const UpsetRing& r, const SweepConfig& cfg = {});

// For W, V ∈ B_Y with ↑W ∩ ↓V = ∅ in X, some K ∈ R_Y has W ⊆ K and K ∩ V = ∅.
// Throws PreconditionError unless Y is a Priestley space.
Verdict check_n_basis(const PairPtr& p, const SweepConfig& cfg = {});

// Sets whose explicit indices come from `pool`, at most `bound` of them, in
// sweep order: support size, then cofinite flags (finite first), then named
// points, then indices.
std::vector<RSet> small_support_sets(const CarrierPtr& c, std::span<const std::uint64_t> pool,
                                     int bound);

// Members of the ring in sweep order: all of them for explicit rings and for
// pullbacks along a finite Y; otherwise the small-support ones.
std::vector<RSet> ring_candidates(const UpsetRing& r, const SweepConfig& cfg);

// Random clopen upset of y with explicit indices below `range`.
RSet random_clopen_upset(const SpacePresentation& y, Rng& rng, std::uint64_t range);
RSet random_clopen(const SpacePresentation& y, Rng& rng, std::uint64_t range);

}  // namespace ordcomp

#endif  // ORDCOMP_RINGS_HPP
