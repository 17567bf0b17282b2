#ifndef ORDCOMP_MAP_HPP
#define ORDCOMP_MAP_HPP

#include <map>
#include <optional>
#include <vector>

#include "ordcomp/space.hpp"

namespace ordcomp {

// What a source block does away from its exceptions: send index n to index n
// of a target block, or send everything to one target point.
struct BlockRule {
  enum class Kind { IntoBlock, Constant };
  Kind kind = Kind::Constant;
  std::uint32_t block = 0;  // IntoBlock
  Point point{};            // Constant
};

// A total map between presented spaces: an image per named point, a rule per
// source block, and finitely many block-point exceptions.
class SpaceMap {
 public:
  // Throws InputError when a rule, exception or image does not fit the spaces.
  SpaceMap(SpacePtr source, SpacePtr target, std::vector<Point> named_images,
           std::vector<BlockRule> rules = {}, std::map<Point, Point> exceptions = {});

  // Finite source: images[i] is the image of named point i.
  static SpaceMap from_table(SpacePtr source, SpacePtr target, const std::vector<int>& images);
  static SpaceMap identity(SpacePtr x);

  const SpacePresentation& source() const { return *source_; }
  const SpacePresentation& target() const { return *target_; }
  const SpacePtr& source_ptr() const { return source_; }
  const SpacePtr& target_ptr() const { return target_; }
  const std::vector<Point>& named_images() const { return named_; }
  const std::vector<BlockRule>& rules() const { return rules_; }
  const std::map<Point, Point>& exceptions() const { return exceptions_; }

  Point operator()(const Point& p) const;
  RSet image(const RSet& s) const;
  RSet preimage(const RSet& t) const;

  // Indices that must be representatives for checks on this map: the support
  // of both spaces plus every index the map mentions.
  std::vector<std::uint64_t> support() const;
  Representatives source_reps() const { return representatives(*source_, support()); }
  Representatives target_reps() const { return representatives(*target_, support()); }

  // Finite source and target: images as named-point indices.
  std::vector<int> table() const;

 private:
  SpacePtr source_, target_;
  std::vector<Point> named_;
  std::vector<BlockRule> rules_;
  std::map<Point, Point> exceptions_;
};

// A target clopen generator whose preimage is not clopen.
std::optional<RSet> check_continuous(const SpaceMap& f);
// x <= x' with f(x) not <= f(x').
std::optional<PairWitness> check_order_preserving(const SpaceMap& f);
// Distinct representatives with equal images.
std::optional<PairWitness> check_injective(const SpaceMap& f);
// x ≠ x' with f(x) <= f(x') but x not <= x' (or the converse failure).
std::optional<PairWitness> check_order_embedding(const SpaceMap& f);

}  // namespace ordcomp

#endif  // ORDCOMP_MAP_HPP
