#ifndef ORDCOMP_SUITE_HPP
#define ORDCOMP_SUITE_HPP

#include <string>
#include <vector>

#include "ordcomp/corpus.hpp"

namespace ordcomp {

// One evaluated statement on one instance. For biconditionals lhs and rhs
// are computed independently; for implications agree means !lhs || rhs.
struct SuiteRow {
  std::string theorem;
  std::string instance;
  bool lhs = false;
  bool rhs = false;
  bool agree = true;
  bool informational = false;  // reported, never counted as a disagreement
  std::string note;
};

struct SuiteSummary {
  std::string instance;
  bool order_compactification = false;
  bool priestley = false;
  bool heyting = false;
  bool esakia = false;
  bool n_order = false;
  bool x_upset = false;
  std::string n_verdict;  // verdict kind of the N-basis check, or "-"
};

struct SuiteReport {
  std::vector<SuiteSummary> pairs;
  std::vector<SuiteRow> rows;

  std::size_t disagreements() const;
};

// Rows per pair: Heyting and Esakia characterizations, Esakia ⇒ N,
// upset ⟺ image-compact ∧ Esakia, N-basis ⟺ N-order (finite Y), the
// implication claim (finite Y), special facts, embedding p-morphism.
// Rows per space: continuity ⟺ ClopUp(X) is an Esakia basis, lifts of the
// identity (finite), comparisons with η₀X (finite). Plus the comparison
// experiment between the presented one-point compactifications.
SuiteReport theorem_suite(const Corpus& corpus, const SweepConfig& cfg = {});
SuiteReport theorem_suite_serial(const Corpus& corpus, const SweepConfig& cfg = {});

}  // namespace ordcomp

#endif  // ORDCOMP_SUITE_HPP
