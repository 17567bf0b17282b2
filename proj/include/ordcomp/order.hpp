#ifndef ORDCOMP_ORDER_HPP
#define ORDCOMP_ORDER_HPP

#include <variant>
#include <vector>

#include "ordcomp/setalg.hpp"

namespace ordcomp {

// Every point of `lower` is below every point of `upper`.
struct Rectangle {
  RSet lower;
  RSet upper;
};

struct AntisymmetryViolation {
  Point x;
  Point y;  // x ≠ y, x ≤ y ≤ x
};

// Partial order presented as the reflexive closure of a finite union of
// rectangles. Instances only exist in validated form: the rectangle list is a
// fixpoint under composition and antisymmetric. Reflexive pairs are implicit.
class OrderPresentation {
 public:
  // Closes the rectangles transitively, then checks antisymmetry.
  static std::variant<OrderPresentation, AntisymmetryViolation> validate(
      CarrierPtr carrier, std::vector<Rectangle> rectangles);
  // Like validate() but throws InputError on a violation.
  static OrderPresentation make(CarrierPtr carrier, std::vector<Rectangle> rectangles);
  static OrderPresentation discrete(CarrierPtr carrier);

  const Carrier& carrier() const { return *carrier_; }
  const CarrierPtr& carrier_ptr() const { return carrier_; }
  const std::vector<Rectangle>& rectangles() const { return rects_; }

  // Throws InputError for points outside the carrier.
  bool leq(const Point& x, const Point& y) const;

  RSet upclose(const RSet& s) const;
  RSet downclose(const RSet& s) const;
  RSet up(const Point& x) const { return upclose(RSet::point(carrier_, x)); }
  RSet down(const Point& x) const { return downclose(RSet::point(carrier_, x)); }
  bool is_upset(const RSet& s) const { return upclose(s) == s; }
  bool is_downset(const RSet& s) const { return downclose(s) == s; }

 private:
  OrderPresentation(CarrierPtr c, std::vector<Rectangle> r) : carrier_(std::move(c)), rects_(std::move(r)) {}

  CarrierPtr carrier_;
  std::vector<Rectangle> rects_;
};

inline std::variant<OrderPresentation, AntisymmetryViolation> validate_order(
    CarrierPtr carrier, std::vector<Rectangle> rectangles) {
  return OrderPresentation::validate(std::move(carrier), std::move(rectangles));
}

}  // namespace ordcomp

#endif  // ORDCOMP_ORDER_HPP
