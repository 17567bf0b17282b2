#ifndef ORDCOMP_VERDICT_HPP
#define ORDCOMP_VERDICT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordcomp/rng.hpp"
#include "ordcomp/space.hpp"

namespace ordcomp {

// Bounds for checks over possibly infinite families.
struct SweepConfig {
  int support_bound = 3;  // deterministic sweep: members with at most this many explicit indices
  int samples = 500;      // seeded random pairs after the sweep
  std::uint64_t seed = kDefaultSeed;
};

enum class VerdictKind { OkExhaustive, OkBounded, Counterexample };

struct Verdict {
  VerdictKind kind = VerdictKind::OkExhaustive;
  std::size_t tested = 0;             // pairs or points examined
  std::vector<RSet> sets;             // witness sets, when the counterexample is a pair of sets
  std::optional<PairWitness> points;  // witness points, when it is a pair of points
  std::optional<Point> point;         // witness point
  std::string detail;

  bool ok() const { return kind != VerdictKind::Counterexample; }

  static Verdict exhaustive(std::size_t n) { return {VerdictKind::OkExhaustive, n, {}, {}, {}, {}}; }
  static Verdict bounded(std::size_t n) { return {VerdictKind::OkBounded, n, {}, {}, {}, {}}; }
  static Verdict counterexample(std::vector<RSet> sets, std::string detail = {}) {
    return {VerdictKind::Counterexample, 0, std::move(sets), {}, {}, std::move(detail)};
  }
  static Verdict counterexample(PairWitness w, std::string detail = {}) {
    return {VerdictKind::Counterexample, 0, {}, w, {}, std::move(detail)};
  }
  static Verdict counterexample(Point p, std::string detail = {}) {
    return {VerdictKind::Counterexample, 0, {}, {}, p, std::move(detail)};
  }
};

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::OkExhaustive: return "ok-exhaustive";
    case VerdictKind::OkBounded: return "ok-bounded";
    case VerdictKind::Counterexample: return "counterexample";
  }
  return "?";
}

}  // namespace ordcomp

#endif  // ORDCOMP_VERDICT_HPP
