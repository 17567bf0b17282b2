#include "ordcomp/suite.hpp"

#include <exception>

#include "ordcomp/compactify.hpp"
#include "ordcomp/error.hpp"

namespace ordcomp {

std::size_t SuiteReport::disagreements() const {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (!r.informational && !r.agree) ++n;
  return n;
}

namespace {

struct InstanceResult {
  std::vector<SuiteSummary> pairs;
  std::vector<SuiteRow> rows;
};

SuiteRow iff(std::string theorem, const std::string& inst, bool lhs, bool rhs, std::string note = {}) {
  return {std::move(theorem), inst, lhs, rhs, lhs == rhs, false, std::move(note)};
}

SuiteRow implies(std::string theorem, const std::string& inst, bool lhs, bool rhs, std::string note = {}) {
  return {std::move(theorem), inst, lhs, rhs, !lhs || rhs, false, std::move(note)};
}

std::string sweep_note(const Verdict& v) { return to_string(v.kind); }

// φ(E →_R F) = φ(E) →_ClopUp(Y) φ(F) for all members, finite Y. The ring
// side is a brute-force maximum over members; the lattice side is algebraic.
bool implication_claim(const PairPtr& p, std::string& note) {
  auto r = UpsetRing::pullback(p);
  auto members = ring_candidates(r, SweepConfig{});
  auto clop = clopup_lattice(p->Y());
  for (const auto& e : members)
    for (const auto& f : members) {
      std::optional<RSet> best;
      for (const auto& g : members)
        if ((g & e).subset_of(f) && (!best || best->subset_of(g))) best = g;
      for (const auto& g : members)
        if ((g & e).subset_of(f) && !g.subset_of(*best)) best.reset();
      auto ue = clop.element_of(*r.target_of(e));
      auto uf = clop.element_of(*r.target_of(f));
      auto alg = heyting_implication(clop.lattice, *ue, *uf);
      if (!best || !alg || *r.target_of(*best) != clop.sets[*alg]) {
        note = "E=" + to_string(e) + " F=" + to_string(f);
        return false;
      }
    }
  return true;
}

InstanceResult run_pair(const NamedPair& np, const SweepConfig& cfg) {
  InstanceResult out;
  const auto& name = np.name;
  const auto& p = np.pair;
  auto fl = classify_pair(p, cfg);
  out.pairs.push_back({name, fl.order_compactification, fl.priestley, fl.heyting, fl.esakia, fl.n_order,
                       fl.x_upset, fl.n_basis ? to_string(fl.n_basis->kind) : "-"});
  if (!fl.priestley) return out;

  auto ring = UpsetRing::pullback(p);
  auto basis = check_priestley_basis(ring);
  auto heyting = check_heyting_ring(ring, cfg);
  auto esakia = check_esakia_ring(ring, cfg);
  out.rows.push_back(iff("heyting-characterization", name, fl.heyting, basis.ok() && heyting.ok(), sweep_note(heyting)));
  out.rows.push_back(iff("esakia-characterization", name, fl.esakia, basis.ok() && esakia.ok(), sweep_note(esakia)));
  out.rows.push_back(implies("esakia-implies-n", name, fl.esakia, fl.n_order, sweep_note(*fl.n_basis)));
  bool image_compact = fl.x_flags.image_compact;
  if (fl.heyting)
    out.rows.push_back(iff("upset-characterization", name, fl.x_upset, image_compact && fl.esakia));
  if (fl.n_direct)
    out.rows.push_back(iff("n-basis-characterization", name, fl.n_order, *fl.n_direct, sweep_note(*fl.n_basis)));
  if (p->Y().is_finite() && fl.esakia) {
    std::string note;
    bool ok = implication_claim(p, note);
    out.rows.push_back(iff("implication-claim", name, true, ok, note));
  }
  out.rows.push_back(implies("special-facts", name, fl.esakia && fl.x_upset, fl.x_flags.locally_esakia));
  if (fl.esakia && fl.x_upset)
    out.rows.push_back(implies("embedding-p-morphism", name, true, is_p_morphism(p->e()).verdict));
  return out;
}

InstanceResult run_space(const NamedSpace& ns, const SweepConfig& cfg) {
  InstanceResult out;
  const auto& name = ns.name;
  const auto& x = ns.space;
  auto flags = classify_space(*x);
  if (!flags.order_zero_dimensional) return out;

  auto ring = UpsetRing::pullback(make_pair_ptr(SpaceMap::identity(x)));
  auto basis = check_priestley_basis(ring);
  auto esakia = check_esakia_ring(ring, cfg);
  out.rows.push_back(iff("continuity-characterization", name, flags.continuously_ordered,
                         basis.ok() && esakia.ok(), sweep_note(esakia)));
  if (!x->is_finite()) return out;

  auto eta = eta0_finite(x);
  auto efl = classify_pair(eta, cfg);
  out.rows.push_back(iff("special-facts-eta0", name, flags.locally_esakia, efl.esakia && efl.x_upset));
  out.rows.push_back(implies("embedding-p-morphism", name + ".eta0", flags.locally_esakia,
                             is_p_morphism(eta->e()).verdict));
  // The identity lifts uniquely, and the lift of a p-morphism is one.
  auto id = SpaceMap::identity(x);
  auto l = lift(id);
  auto rep = check_lift_properties(id, l);
  out.rows.push_back(iff("lift-identity", name, true, l.competitors == 1 && rep.part2 && rep.p_morphism_identity &&
                                                          is_p_morphism(l.lifted).verdict));
  auto idpair = make_pair_ptr(SpaceMap::identity(x));
  auto down = compare_compactifications(idpair, eta, cfg);
  auto up = compare_compactifications(eta, idpair, cfg);
  bool both_esakia = efl.esakia && classify_pair(idpair, cfg).esakia;
  out.rows.push_back(implies("restriction-of-order", name, both_esakia && down.map && up.map,
                             down.p_morphism.value_or(false) && up.p_morphism.value_or(false)));
  return out;
}

InstanceResult run_comparison_experiment(const SweepConfig& cfg) {
  InstanceResult out;
  auto ya = pair_ya(), yb = pair_yb(), yc = pair_yc();
  auto b_below_a = compare_compactifications(yb, ya, cfg);
  auto a_below_b = compare_compactifications(ya, yb, cfg);
  auto c_below_a = compare_compactifications(yc, ya, cfg);
  auto b_below_c = compare_compactifications(yb, yc, cfg);
  auto c_below_b = compare_compactifications(yc, yb, cfg);
  SuiteRow row{"heyting-comparison-experiment", "fig2 <= one-point", b_below_a.map.has_value(),
               b_below_a.p_morphism.value_or(false), true, true,
               "connecting map exists; p-morphism: " + std::string(b_below_a.p_morphism.value_or(false) ? "yes" : "no")};
  out.rows.push_back(row);
  out.rows.push_back({"comparison", "one-point <= fig2", a_below_b.map.has_value(), false, !a_below_b.map, false, a_below_b.reason});
  out.rows.push_back({"comparison", "reversed <= one-point", c_below_a.map.has_value(), true, c_below_a.map.has_value(), false, c_below_a.reason});
  out.rows.push_back({"comparison", "fig2 vs reversed", b_below_c.map.has_value() || c_below_b.map.has_value(), false,
                      !b_below_c.map && !c_below_b.map, false, "incomparable"});
  return out;
}

template <class Fn, class Item>
std::vector<InstanceResult> run_all(const std::vector<Item>& items, Fn fn, bool parallel) {
  std::vector<InstanceResult> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  const auto n = static_cast<std::int64_t>(items.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) results[i] = fn(items[i]);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

SuiteReport run_suite(const Corpus& corpus, const SweepConfig& cfg, bool parallel) {
  SuiteReport rep;
  auto absorb = [&](std::vector<InstanceResult> rs) {
    for (auto& r : rs) {
      for (auto& s : r.pairs) rep.pairs.push_back(std::move(s));
      for (auto& row : r.rows) rep.rows.push_back(std::move(row));
    }
  };
  absorb(run_all(corpus.pairs, [&](const NamedPair& p) { return run_pair(p, cfg); }, parallel));
  absorb(run_all(corpus.spaces, [&](const NamedSpace& s) { return run_space(s, cfg); }, parallel));
  absorb({run_comparison_experiment(cfg)});
  return rep;
}

}  // namespace

SuiteReport theorem_suite(const Corpus& corpus, const SweepConfig& cfg) { return run_suite(corpus, cfg, true); }

SuiteReport theorem_suite_serial(const Corpus& corpus, const SweepConfig& cfg) {
  return run_suite(corpus, cfg, false);
}

}  // namespace ordcomp
