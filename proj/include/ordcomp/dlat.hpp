#ifndef ORDCOMP_DLAT_HPP
#define ORDCOMP_DLAT_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ordcomp/bits.hpp"

namespace ordcomp {

struct LatticeViolation {
  std::string axiom;                  // "antisymmetry", "meet", "join", "bounds", "distributivity"
  std::vector<std::string> elements;  // the offending elements
};

// Finite bounded distributive lattice. Element ids are opaque strings; tables
// are dense and indexed by element position. The one-element lattice (0 = 1)
// is admitted; its spectrum is empty.
class FinDLat {
 public:
  // `leq` is closed reflexively and transitively before checking.
  static std::variant<FinDLat, LatticeViolation> validate(
      std::vector<std::string> ids, const std::vector<std::pair<std::string, std::string>>& leq);
  // Index form; same checks.
  static std::variant<FinDLat, LatticeViolation> validate(std::vector<std::string> ids,
                                                          std::vector<Bits> leq_rows);
  // Throws InputError on a violation.
  static FinDLat make(std::vector<std::string> ids, std::vector<Bits> leq_rows);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int a) const { return ids_[a]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<int> index_of(const std::string& name) const;

  bool leq(int a, int b) const { return up_[a].test(b); }
  const Bits& up(int a) const { return up_[a]; }
  int meet(int a, int b) const { return meet_[a * size() + b]; }
  int join(int a, int b) const { return join_[a * size() + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

 private:
  std::vector<std::string> ids_;
  std::vector<Bits> up_;
  std::vector<int> meet_, join_;
  int bottom_ = 0, top_ = 0;
};

inline std::optional<LatticeViolation> validate_dlat(
    std::vector<std::string> ids, const std::vector<std::pair<std::string, std::string>>& leq) {
  auto v = FinDLat::validate(std::move(ids), leq);
  if (auto* w = std::get_if<LatticeViolation>(&v)) return *w;
  return std::nullopt;
}

inline constexpr int kPrimeFilterBruteCap = 20;  // 2^20 subsets

// Prime filters as member sets, sorted. Brute force enumerates every subset
// (SizeError above kPrimeFilterBruteCap elements).
std::vector<Bits> prime_filters_brute(const FinDLat& d);
std::vector<int> join_irreducibles(const FinDLat& d);
// {↑j : j join-irreducible}, sorted.
std::vector<Bits> prime_filters(const FinDLat& d);

// Greatest c with c ∧ a <= b, when it exists.
std::optional<int> heyting_implication(const FinDLat& d, int a, int b);
bool is_heyting(const FinDLat& d);

// h maps element indices of `from` to element indices of `to`.
struct HomWitness {
  std::string law;  // "bottom", "top", "meet", "join", "implication"
  int a = 0;
  int b = 0;
};

std::optional<HomWitness> check_lattice_hom(const FinDLat& from, const FinDLat& to,
                                            const std::vector<int>& h);
std::optional<HomWitness> check_heyting_hom(const FinDLat& from, const FinDLat& to,
                                            const std::vector<int>& h);

// Lattice of all upsets of a finite poset given by up-rows (used for random
// lattices and as an oracle). Element ids are "{i,j,..}".
FinDLat upset_lattice(const std::vector<Bits>& poset_up);

}  // namespace ordcomp

#endif  // ORDCOMP_DLAT_HPP
