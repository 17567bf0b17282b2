#ifndef ORDCOMP_RNG_HPP
#define ORDCOMP_RNG_HPP

#include <cstdint>
#include <random>

namespace ordcomp {

// Seeded generator with platform-independent helpers. std::mt19937_64 output
// is fixed by the standard; the std distributions are not, so bounded draws
// are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  bool coin() { return eng_() & 1u; }
  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

}  // namespace ordcomp

#endif  // ORDCOMP_RNG_HPP
