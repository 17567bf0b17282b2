#ifndef ORDCOMP_SETALG_HPP
#define ORDCOMP_SETALG_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordcomp/bits.hpp"

namespace ordcomp {

// A point of a carrier: either a named point (limit or isolated) or the
// index-th element of an infinite block.
struct Point {
  enum class Kind : std::uint8_t { Named, Block };

  Kind kind = Kind::Named;
  std::uint32_t id = 0;      // named-point index or block index
  std::uint64_t index = 0;   // element index inside a block

  static Point named(std::uint32_t i) { return {Kind::Named, i, 0}; }
  static Point block(std::uint32_t b, std::uint64_t n) { return {Kind::Block, b, n}; }

  bool is_named() const { return kind == Kind::Named; }

  friend auto operator<=>(const Point&, const Point&) = default;
};

struct BlockSpec {
  std::string name;
  std::optional<std::string> limit;
};

// Underlying set of an ordered space. A finite carrier is a list of named
// points; a tail carrier adds infinite blocks, each a copy of ℕ optionally
// owning one limit point (its one-point compactification).
//
// Named points are indexed in declaration order: for tail carriers the limit
// points in block order first, then the isolated points.
class Carrier {
 public:
  enum class Kind { Finite, Tail };

  static Carrier finite(std::vector<std::string> points);
  static Carrier finite(std::size_t n);
  static Carrier tail(std::vector<BlockSpec> blocks, std::vector<std::string> isolated);

  Kind kind() const { return kind_; }
  // True when the carrier has no infinite block.
  bool is_finite() const { return blocks_.empty(); }

  std::size_t named_count() const { return named_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::string& named_name(std::uint32_t i) const { return named_[i]; }
  const std::string& block_name(std::uint32_t b) const { return blocks_[b]; }
  std::optional<std::uint32_t> limit_of(std::uint32_t b) const { return block_limit_[b]; }
  std::optional<std::uint32_t> owner_of(std::uint32_t named) const { return named_owner_[named]; }
  bool is_limit(const Point& p) const { return p.is_named() && named_owner_[p.id].has_value(); }

  std::optional<std::uint32_t> find_named(std::string_view name) const;
  std::optional<std::uint32_t> find_block(std::string_view name) const;

  bool contains(const Point& p) const;

  // "name" for named points, "block:index" for block points.
  std::string format(const Point& p) const;
  // Inverse of format(); throws InputError for unknown points.
  Point parse(std::string_view text) const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  Kind kind_ = Kind::Finite;
  std::vector<std::string> blocks_;
  std::vector<std::optional<std::uint32_t>> block_limit_;
  std::vector<std::string> named_;
  std::vector<std::optional<std::uint32_t>> named_owner_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

inline CarrierPtr make_carrier(Carrier c) { return std::make_shared<const Carrier>(std::move(c)); }

// Trace of a representable set on one block: the explicit finite subset, or
// the complement of one. `elems` is sorted and duplicate-free.
struct Trace {
  bool cofinite = false;
  std::vector<std::uint64_t> elems;

  bool contains(std::uint64_t n) const;
  bool is_empty() const { return !cofinite && elems.empty(); }
  bool is_full() const { return cofinite && elems.empty(); }

  friend auto operator<=>(const Trace&, const Trace&) = default;
};

// A representable subset of a carrier: finite-or-cofinite trace per block plus
// one membership flag per named point. Always stored in canonical form, so
// structural equality is extensional equality.
class RSet {
 public:
  RSet() = default;
  RSet(CarrierPtr carrier, std::vector<Trace> traces, Bits named);

  static RSet empty(CarrierPtr c);
  static RSet full(CarrierPtr c);
  static RSet of(CarrierPtr c, std::span<const Point> points);
  static RSet point(CarrierPtr c, const Point& p) { return of(std::move(c), std::span(&p, 1)); }
  // The whole block b, limit point excluded.
  static RSet whole_block(CarrierPtr c, std::uint32_t b);

  const Carrier& carrier() const { return *carrier_; }
  const CarrierPtr& carrier_ptr() const { return carrier_; }
  const Trace& trace(std::uint32_t b) const { return traces_[b]; }
  const Bits& named() const { return named_; }

  bool contains(const Point& p) const;
  bool is_empty() const;
  bool is_full() const;
  bool is_finite() const;
  // Number of explicit block indices (finite members plus cofinite exceptions).
  std::size_t support_size() const;

  bool subset_of(const RSet& o) const;
  bool intersects(const RSet& o) const;

  // Smallest member: named points first, then blocks in order.
  std::optional<Point> pick() const;
  // Smallest member different from `avoid`.
  std::optional<Point> pick_other_than(const Point& avoid) const;
  // All members when finite; throws PreconditionError otherwise.
  std::vector<Point> members() const;

  // Appends every explicit block index to `out`.
  void collect_indices(std::vector<std::uint64_t>& out) const;

  friend bool operator==(const RSet& a, const RSet& b);
  friend std::strong_ordering operator<=>(const RSet& a, const RSet& b);

 private:
  CarrierPtr carrier_;
  std::vector<Trace> traces_;
  Bits named_;
};

enum class BoolOp { Union, Intersection, Difference, Complement };

// Complement ignores `t`. Throws InputError on carrier mismatch or a missing
// second operand.
RSet apply_boolean(BoolOp op, const RSet& s, const RSet* t = nullptr);

inline RSet operator|(const RSet& a, const RSet& b) { return apply_boolean(BoolOp::Union, a, &b); }
inline RSet operator&(const RSet& a, const RSet& b) { return apply_boolean(BoolOp::Intersection, a, &b); }
inline RSet operator-(const RSet& a, const RSet& b) { return apply_boolean(BoolOp::Difference, a, &b); }
inline RSet complement(const RSet& a) { return apply_boolean(BoolOp::Complement, a); }

bool same_carrier(const Carrier& a, const Carrier& b);
void require_same_carrier(const Carrier& a, const Carrier& b);

struct SetClass {
  bool finite = false;
  bool open = false;
  bool closed = false;
  bool clopen = false;
};

// Topological classification under the clopen law: each block owning a limit
// point is a one-point compactification of a countable discrete set, all
// other points are isolated.
SetClass classify_set(const Carrier& c, const RSet& s);
RSet closure(const Carrier& c, const RSet& s);
RSet interior(const Carrier& c, const RSet& s);

struct Density {
  bool dense = true;
  std::optional<Point> witness;  // a point of B \ closure(A) when not dense
};

// Whether A is dense in B (closure(A) ⊇ B). Throws PreconditionError unless A ⊆ B.
Density is_dense_in(const Carrier& c, const RSet& a, const RSet& b);

// Some clopen W with inside ⊆ W and W ∩ outside = ∅, when one exists.
std::optional<RSet> clopen_separator(const Carrier& c, const RSet& inside, const RSet& outside);

// Human-readable rendering, e.g. "{inf, N:0..} \ {N:3}" style; stable.
std::string to_string(const RSet& s);

}  // namespace ordcomp

#endif  // ORDCOMP_SETALG_HPP
