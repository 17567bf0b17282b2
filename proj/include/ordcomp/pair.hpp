#ifndef ORDCOMP_PAIR_HPP
#define ORDCOMP_PAIR_HPP

#include <memory>

#include "ordcomp/map.hpp"

namespace ordcomp {

// (X, Y, e) with e : X → Y injective on representatives.
class CompactificationPair {
 public:
  // Throws InputError when e does not go from X to Y or identifies points.
  explicit CompactificationPair(SpaceMap e);

  const SpacePresentation& X() const { return e_.source(); }
  const SpacePresentation& Y() const { return e_.target(); }
  const SpacePtr& X_ptr() const { return e_.source_ptr(); }
  const SpacePtr& Y_ptr() const { return e_.target_ptr(); }
  const SpaceMap& e() const { return e_; }

 private:
  SpaceMap e_;
};

using PairPtr = std::shared_ptr<const CompactificationPair>;

inline PairPtr make_pair_ptr(SpaceMap e) { return std::make_shared<const CompactificationPair>(std::move(e)); }

}  // namespace ordcomp

#endif  // ORDCOMP_PAIR_HPP
