#ifndef ORDCOMP_SPACE_HPP
#define ORDCOMP_SPACE_HPP

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ordcomp/order.hpp"

namespace ordcomp {

// An ordered topological space. The topology is the one generated by the
// representable clopens (see classify_set), so it is fixed by the carrier.
class SpacePresentation {
 public:
  explicit SpacePresentation(OrderPresentation order) : order_(std::move(order)) {}

  const Carrier& carrier() const { return order_.carrier(); }
  const CarrierPtr& carrier_ptr() const { return order_.carrier_ptr(); }
  const OrderPresentation& order() const { return order_; }
  bool is_finite() const { return carrier().is_finite(); }

  bool leq(const Point& x, const Point& y) const { return order_.leq(x, y); }
  RSet up(const Point& x) const { return order_.up(x); }
  RSet down(const Point& x) const { return order_.down(x); }
  RSet upclose(const RSet& s) const { return order_.upclose(s); }
  RSet downclose(const RSet& s) const { return order_.downclose(s); }
  RSet full() const { return RSet::full(carrier_ptr()); }
  RSet empty() const { return RSet::empty(carrier_ptr()); }

 private:
  OrderPresentation order_;
};

using SpacePtr = std::shared_ptr<const SpacePresentation>;

inline SpacePtr make_space(OrderPresentation order) {
  return std::make_shared<const SpacePresentation>(std::move(order));
}

// Every block index mentioned by the order's rectangles and by `extra`, plus
// `extra_indices`; sorted and unique.
std::vector<std::uint64_t> support_indices(const SpacePresentation& x,
                                           std::span<const RSet> extra = {},
                                           std::span<const std::uint64_t> extra_indices = {});

// Canonical representatives: all named points, every support index in every
// block, and two fresh generic indices per block. Points off the support are
// interchangeable by order automorphisms that fix the support, so properties
// stated pointwise are decided by their values on representatives.
struct Representatives {
  std::vector<std::uint64_t> indices;  // support followed by the two generic indices
  std::size_t support = 0;             // number of leading support indices
  std::vector<Point> points;           // named points, then block points
};

Representatives representatives(const SpacePresentation& x, std::vector<std::uint64_t> support);
Representatives representatives(const SpacePresentation& x);

// Finite quotient of a space over a support. Nodes are the representative
// points plus one class node per block standing for all non-representative
// indices of that block. The node preorder is the order between nodes,
// extended by two-way edges between each class node and its block's limit
// point (a clopen set contains a cofinite part of a block iff it contains the
// limit). Up-closed node sets are exactly the clopen upsets that are uniform
// off the representatives.
class Skeleton {
 public:
  Skeleton(const SpacePresentation& x, std::vector<std::uint64_t> support);

  std::size_t size() const { return nodes_.size(); }
  const Representatives& reps() const { return reps_; }

  bool is_class(std::size_t node) const { return nodes_[node].is_class; }
  // A point of the node; for class nodes, a non-representative index.
  Point sample(std::size_t node) const { return nodes_[node].sample; }
  std::size_t node_of(const Point& p) const;

  // Reachability in the merged preorder (reflexive).
  const Bits& above(std::size_t node) const { return above_[node]; }
  const Bits& below(std::size_t node) const { return below_[node]; }

  // Nodes meeting s. Throws PreconditionError if s has an explicit index off
  // the support (its nodes would not be uniform).
  Bits nodes_of(const RSet& s) const;
  RSet expand(const Bits& nodes) const;
  // Up-closure in the merged preorder.
  Bits up_star(const Bits& nodes) const;
  Bits down_star(const Bits& nodes) const;

 private:
  struct Node {
    Point sample;
    bool is_class = false;
  };

  const SpacePresentation* space_;
  Representatives reps_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> class_of_block_;
  std::vector<Bits> above_;
  std::vector<Bits> below_;
};

struct PairWitness {
  Point x;
  Point y;
};

// nullopt when every x ≰ y is separated by a clopen upset.
std::optional<PairWitness> check_priestley_separation(const SpacePresentation& x);

// Some clopen upset U with inside ⊆ U and U ∩ outside = ∅, when one exists.
std::optional<RSet> clopen_upset_separator(const SpacePresentation& x, const RSet& inside,
                                           const RSet& outside);

// Largest clopen upset contained in the upset c, when one exists.
std::optional<RSet> largest_clopen_upset_inside(const SpacePresentation& x, const RSet& c);

struct ContinuityReport {
  std::optional<Point> upsets_closed_witness;    // x with ↑x not closed
  std::optional<RSet> down_of_open_witness;      // clopen generator U with ↓U not open
  bool ok() const { return !upsets_closed_witness && !down_of_open_witness; }
};

ContinuityReport check_order_continuity(const SpacePresentation& x);

// nullopt when ↑x is compact for every x; otherwise such an x.
std::optional<Point> check_image_compact(const SpacePresentation& x);

struct SpaceFlags {
  bool compact = false;
  bool priestley = false;
  bool continuously_ordered = false;
  bool esakia = false;
  bool order_zero_dimensional = false;
  bool locally_esakia = false;
  bool image_compact = false;

  std::optional<std::uint32_t> noncompact_block;
  std::optional<PairWitness> separation_witness;
  std::optional<Point> basis_witness;  // point whose neighbourhoods are not differences
  ContinuityReport continuity;
  std::optional<Point> image_compact_witness;
};

SpaceFlags classify_space(const SpacePresentation& x);

// Smallest clopen neighbourhood among uniform sets; for limit points the
// cofinite block generator.
RSet basic_neighbourhood(const SpacePresentation& x, const Point& p,
                         std::span<const std::uint64_t> support);

// Clopen generators used by the continuity test: singletons of block
// representatives and isolated points, plus {ℓ} ∪ (block \ support) for each
// limit point ℓ.
std::vector<RSet> clopen_generators(const SpacePresentation& x, const Representatives& reps);

}  // namespace ordcomp

#endif  // ORDCOMP_SPACE_HPP
