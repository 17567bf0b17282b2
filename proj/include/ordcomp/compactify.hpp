#ifndef ORDCOMP_COMPACTIFY_HPP
#define ORDCOMP_COMPACTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ordcomp/duality.hpp"
#include "ordcomp/rings.hpp"

namespace ordcomp {

struct PairFlags {
  // Components of "order-compactification".
  bool topological_embedding = false;
  bool order_embedding = false;
  bool dense = false;
  bool nachbin = false;
  bool order_compactification = false;

  bool priestley = false;
  bool heyting = false;
  bool esakia = false;
  bool n_order = false;
  bool x_upset = false;

  SpaceFlags x_flags;
  SpaceFlags y_flags;
  std::optional<Verdict> n_basis;   // present when the pair is a Priestley order-compactification
  std::optional<bool> n_direct;     // finite Y: ≤_Y equals the image of ≤_X
  std::vector<std::string> notes;   // first failure of each false flag
};

// Throws EngineBug if the N-basis and direct routes disagree on a finite Y.
PairFlags classify_pair(const PairPtr& p, const SweepConfig& cfg = {});

// Nachbin check: Y compact and the order closed in Y × Y. Returns the reason
// on failure.
std::optional<std::string> check_nachbin(const SpacePresentation& y);

// (Spec(ClopUp(X)), x ↦ {U : x ∈ U}) for finite X.
PairPtr eta0_finite(const SpacePtr& x);

struct BasisCompactification {
  std::optional<PairPtr> pair;
  Verdict basis;  // the Priestley-basis verdict; a counterexample when pair is empty
};

// (Spec(R), x ↦ {U ∈ R : x ∈ U}) for an explicit ring on a finite space.
BasisCompactification compactify_from_basis(const SpacePtr& x, const UpsetRing& r);

struct Comparison {
  std::optional<SpaceMap> map;  // f : Y2 → Y1 with f ∘ e2 = e1
  std::string reason;           // why no map exists
  std::optional<bool> p_morphism;
};

// Whether p1 ⪯ p2. The connecting map is forced on e2[X] and, by density and
// continuity, on its closure; it is constructed and then verified. When both
// pairs are Esakia order-compactifications a found map must be a p-morphism
// (EngineBug otherwise).
Comparison compare_compactifications(const PairPtr& p1, const PairPtr& p2, const SweepConfig& cfg = {});

struct LiftResult {
  PairPtr eta0;
  SpaceMap lifted;            // η₀f : η₀X → Z
  std::vector<int> route_a;   // intersection formula, per prime filter
  std::vector<int> route_b;   // dual of f⁻¹, per prime filter
  std::size_t competitors = 0;  // continuous order-preserving g with g∘e = f
};

// Throws PreconditionError unless f is an order-preserving map of finite
// spaces; EngineBug if the routes disagree, a formula value is not a
// singleton, or uniqueness fails.
LiftResult lift(const SpaceMap& f);

struct LiftReport {
  bool part2 = true;
  std::optional<std::string> part2_witness;
  bool p_morphism_checked = false;
  bool p_morphism_identity = true;
  std::optional<std::string> identity_witness;
};

LiftReport check_lift_properties(const SpaceMap& f, const LiftResult& l);

// ↓⋂F = ⋂{↓F : F ∈ family}. Returns a point of the right side missing from
// the left. Throws PreconditionError unless the family is nonempty, its
// members are nonempty and closed, it is down-directed, and X is Esakia.
std::optional<Point> esakia_lemma_check(const SpacePresentation& x, const std::vector<RSet>& family);

}  // namespace ordcomp

#endif  // ORDCOMP_COMPACTIFY_HPP
