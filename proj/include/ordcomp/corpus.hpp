#ifndef ORDCOMP_CORPUS_HPP
#define ORDCOMP_CORPUS_HPP

#include <string>
#include <vector>

#include "ordcomp/rings.hpp"

namespace ordcomp {

// Presented pairs over X = ℕ (one block "N", no limit, trivial order). Y
// adds the limit point "inf":
//   ya:  trivial order (the one-point compactification);
//   yb:  n <= inf for every n;
//   yc:  inf <= n for every n.
PairPtr pair_ya();
PairPtr pair_yb();
PairPtr pair_yc();
// yb compactified by itself along the identity.
PairPtr pair_yb_identity();
// X = ℕ ∪ {t} with ℕ <= t; Y = ℕ ∪ {inf, t} with ℕ ∪ {inf} <= t.
PairPtr pair_top();

// Blocks P, Q with limits p, q and p below Q ∪ {q}: ↓(Q ∪ {q}) is not open.
SpacePtr continuity_regression_space();

// Every Priestley basis of a finite space, as explicit rings.
std::vector<UpsetRing> priestley_bases(const SpacePtr& x);

struct NamedPair {
  std::string name;
  PairPtr pair;
};

struct NamedSpace {
  std::string name;
  SpacePtr space;
};

struct Corpus {
  std::vector<NamedPair> pairs;
  std::vector<NamedSpace> spaces;
};

// Posets on at most `max_n` points up to isomorphism, each compactified by
// every Priestley basis and by itself, plus the presented pairs above.
Corpus builtin_corpus(int max_n = 4);

}  // namespace ordcomp

#endif  // ORDCOMP_CORPUS_HPP
