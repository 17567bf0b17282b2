#ifndef ORDCOMP_DUALITY_HPP
#define ORDCOMP_DUALITY_HPP

#include <array>
#include <optional>
#include <vector>

#include "ordcomp/dlat.hpp"
#include "ordcomp/map.hpp"

namespace ordcomp {

// Prime filter spectrum of a finite lattice: points are the prime filters
// (sorted), ordered by inclusion; phi[a] = {P : a ∈ P}.
struct SpecSpace {
  SpacePtr space;
  std::vector<Bits> filters;
  std::vector<RSet> phi;
};

SpecSpace spec_space(const FinDLat& d);

// Clopen upsets of a finite space as a lattice; element i is sets[i].
struct ClopUpLattice {
  FinDLat lattice;
  std::vector<RSet> sets;

  std::optional<int> element_of(const RSet& s) const;
};

ClopUpLattice clopup_lattice(const SpacePresentation& x);

// X \ ↓(U \ V): the implication of Up(X), spatially.
RSet spatial_implication(const SpacePresentation& x, const RSet& u, const RSet& v);

// x ↦ {U : x ∈ U} into Spec(ClopUp(X)), with its verified inverse.
struct SpaceRoundTrip {
  ClopUpLattice clopup;
  SpecSpace spec;
  SpaceMap forward;
  SpaceMap backward;
};

// Throws PreconditionError unless X is finite; EngineBug if the maps are not
// mutually inverse order isomorphisms.
SpaceRoundTrip roundtrip_space(const SpacePtr& x);

// a ↦ φ(a) into ClopUp(Spec(D)), with its verified inverse.
struct LatticeRoundTrip {
  SpecSpace spec;
  ClopUpLattice clopup;
  std::vector<int> forward;
  std::vector<int> backward;
};

LatticeRoundTrip roundtrip_lattice(const FinDLat& d);

// Four characterizations of the back condition, each evaluated
// independently: the definition, ↑f(x) ⊆ f[↑x], f⁻¹[↓y] ⊆ ↓f⁻¹[y], and f[U]
// upset for upsets U. A p-morphism is an order-preserving map satisfying it.
struct PMorphismReport {
  bool verdict = true;
  bool order_preserving = true;
  std::array<bool, 4> routes{true, true, true, true};
  // x and y ≥ f(x) with no x' ≥ x mapping to y; or, for a map that is not
  // order-preserving, x ≤ x' with f(x) ≰ f(x').
  std::optional<PairWitness> witness;
};

// Throws EngineBug when the routes disagree.
PMorphismReport is_p_morphism(const SpaceMap& f);

// f⁻¹ : ClopUp(Y) → ClopUp(X) for a continuous order-preserving map of finite
// spaces, with the two transfer statements checked.
struct DualMapReport {
  ClopUpLattice target_lattice;  // ClopUp(Y)
  ClopUpLattice source_lattice;  // ClopUp(X)
  std::vector<int> hom;
  bool p_morphism = false;
  bool heyting_hom = false;
  std::optional<HomWitness> heyting_witness;
  bool hom_injective = false;
  bool map_surjective = false;
};

// Throws PreconditionError when f is not a continuous order-preserving map of
// finite spaces; EngineBug when a transfer statement fails.
DualMapReport dual_of_map(const SpaceMap& f);

}  // namespace ordcomp

#endif  // ORDCOMP_DUALITY_HPP
