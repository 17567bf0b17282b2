// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every value is compared against a brute-force oracle from
// oracles.hpp or against the shipped fixtures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ordcomp/cli.hpp"
#include "ordcomp/compactify.hpp"
#include "ordcomp/duality.hpp"
#include "ordcomp/error.hpp"
#include "ordcomp/io.hpp"
#include "ordcomp/kernels.hpp"
#include "ordcomp/suite.hpp"

using namespace ordcomp;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = ORDCOMP_FIXTURES_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure only.
struct Check {
  Outcome out;
  void require(bool cond, const std::string& what) {
    if (!cond && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && secs > budget_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(budget_s) + " s budget)";
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s [%s] %.2fs\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::vector<FinPoset> small_posets(int lo, int hi) {
  std::vector<FinPoset> out;
  for (int n = lo; n <= hi; ++n)
    for (auto& p : posets_up_to_iso(n)) out.push_back(p);
  return out;
}

std::vector<Bits> up_rows(const FinPoset& p) {
  std::vector<Bits> rows;
  for (int i = 0; i < p.n; ++i) {
    Bits b(p.n);
    for (int j = 0; j < p.n; ++j)
      if (p.leq(i, j)) b.set(j);
    rows.push_back(b);
  }
  return rows;
}

std::vector<int> table_of(const SpaceMap& f) { return f.table(); }

// ---------------------------------------------------------------- 1

void check_space_roundtrip(const SpacePtr& x, Check& c) {
  auto rt = roundtrip_space(x);
  const auto xr = oracle::Rel::of(*x);
  const auto yr = oracle::Rel::of(*rt.spec.space);
  auto fwd = table_of(rt.forward), bwd = table_of(rt.backward);
  c.require(static_cast<int>(fwd.size()) == xr.n && static_cast<int>(bwd.size()) == yr.n && xr.n == yr.n,
            "spectrum size differs from |X|");
  if (!c.out.pass) return;
  for (int i = 0; i < xr.n; ++i) {
    c.require(bwd[fwd[i]] == i && fwd[bwd[i]] == i, "round-trip maps are not mutually inverse");
    // x goes to the filter of clopen upsets containing it.
    for (std::size_t u = 0; u < rt.clopup.sets.size(); ++u)
      c.require(rt.spec.filters[fwd[i]].test(u) == rt.clopup.sets[u].contains(Point::named(i)),
                "forward image is not {U : x in U}");
    for (int j = 0; j < xr.n; ++j) c.require(xr.le[i][j] == yr.le[fwd[i]][fwd[j]], "forward map is not an order iso");
  }
}

void check_lattice_roundtrip(const FinDLat& d, Check& c) {
  auto rt = roundtrip_lattice(d);
  const auto& e = rt.clopup.lattice;
  c.require(e.size() == d.size(), "ClopUp(Spec(D)) has the wrong size");
  if (!c.out.pass) return;
  for (int a = 0; a < d.size(); ++a) {
    c.require(rt.backward[rt.forward[a]] == a && rt.forward[rt.backward[a]] == a,
              "lattice round-trip maps are not mutually inverse");
    for (int b = 0; b < d.size(); ++b)
      c.require(d.leq(a, b) == e.leq(rt.forward[a], rt.forward[b]), "lattice round trip is not an order iso");
  }
}

Outcome criterion1() {
  Check c;
  std::size_t spaces = 0;
  auto posets = small_posets(0, 4);
  Rng rng(kDefaultSeed);
  for (int k = 0; k < 200; ++k) posets.push_back(random_poset(rng, 5));
  for (const auto& p : posets) {
    auto x = space_from_poset(p);
    check_space_roundtrip(x, c);
    check_lattice_roundtrip(clopup_lattice(*x).lattice, c);
    check_lattice_roundtrip(upset_lattice(up_rows(p)), c);
    ++spaces;
  }
  c.out.detail = std::to_string(spaces) + " posets" + (c.out.detail.empty() ? "" : ": " + c.out.detail);
  return c.out;
}

// ---------------------------------------------------------------- 2

bool same_filters(const std::vector<Bits>& a, const std::vector<std::vector<bool>>& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::vector<bool>> conv;
  for (const auto& f : a) {
    std::vector<bool> v(b.empty() ? 0 : b[0].size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.test(i);
    conv.push_back(v);
  }
  auto sorted = b;
  std::sort(conv.begin(), conv.end());
  std::sort(sorted.begin(), sorted.end());
  return conv == sorted;
}

Outcome criterion2() {
  Check c;
  std::size_t lattices = 0, fixtures = 0, rejected = 0, brute = 0;
  auto run = [&](const FinDLat& d, const std::string& name) {
    auto fast = prime_filters(d);
    c.require(same_filters(fast, oracle::prime_filters(d)), name + ": fast path differs from exhaustive search");
    if (d.size() <= kPrimeFilterBruteCap) {
      c.require(prime_filters_brute(d) == fast, name + ": subset scan differs from fast path");
      ++brute;
    }
    ++lattices;
  };
  for (const auto& entry : fs::directory_iterator(kFixtures)) {
    auto name = entry.path().filename().string();
    if (name.size() < 13 || name.substr(name.size() - 13) != ".lattice.json") continue;
    try {
      auto d = lattice_from_json(load_json_file(entry.path()));
      if (d.size() > 20) continue;
      run(d, name);
      ++fixtures;
    } catch (const InputError&) {
      ++rejected;  // non-distributive fixtures
    }
  }
  Rng rng(kDefaultSeed + 2);
  for (int k = 0; k < 500; ++k) {
    int n = 1 + static_cast<int>(rng.below(6));
    auto p = random_poset(rng, n);
    run(upset_lattice(up_rows(p)), "random lattice " + std::to_string(k));
  }
  c.require(fixtures >= 3, "fewer than 3 lattice fixtures validated");
  c.out.detail = std::to_string(lattices) + " lattices (" + std::to_string(fixtures) + " fixtures, " +
                 std::to_string(rejected) + " invalid fixtures rejected, " + std::to_string(brute) +
                 " also by subset scan)" + (c.out.detail.empty() ? "" : ": " + c.out.detail);
  return c.out;
}

// ---------------------------------------------------------------- 3

Outcome criterion3() {
  Check c;
  std::vector<SpacePtr> spaces;
  for (const auto& p : small_posets(1, 5)) spaces.push_back(space_from_poset(p));
  Rng rng(kDefaultSeed + 3);
  for (int k = 0; k < 100; ++k) spaces.push_back(space_from_poset(random_poset(rng, 6)));
  for (const auto& name : {"diamond.space.json", "vee.space.json"})
    spaces.push_back(space_from_json(load_json_file(kFixtures / name)));
  std::size_t pairs = 0;
  for (const auto& x : spaces) {
    if (!classify_space(*x).esakia) continue;
    auto clop = clopup_lattice(*x);
    const auto rel = oracle::Rel::of(*x);
    const auto& d = clop.lattice;
    for (int u = 0; u < d.size(); ++u)
      for (int v = 0; v < d.size(); ++v) {
        auto alg = heyting_implication(d, u, v);
        auto ref = oracle::relative_pseudocomplement(d, u, v);
        RSet spatial = spatial_implication(*x, clop.sets[u], clop.sets[v]);
        Mask expect = rel.all() & ~rel.down(mask_of(clop.sets[u]) & ~mask_of(clop.sets[v]));
        c.require(alg && ref && *alg == *ref, "algebraic implication differs from brute-force maximum");
        c.require(mask_of(spatial) == expect, "spatial implication differs from X minus down(U minus V)");
        c.require(alg && clop.sets[*alg] == spatial, "algebraic and spatial implications differ");
        ++pairs;
      }
  }
  c.out.detail = std::to_string(spaces.size()) + " spaces, " + std::to_string(pairs) + " pairs" +
                 (c.out.detail.empty() ? "" : ": " + c.out.detail);
  return c.out;
}

// ---------------------------------------------------------------- 4

Outcome criterion4() {
  Check c;
  auto p = pair_from_json(load_json_file(kFixtures / "fig2.pair.json"));
  auto f = classify_pair(p);
  c.require(f.order_compactification, "not an order-compactification");
  c.require(f.priestley, "not Priestley");
  c.require(f.heyting, "not Heyting");
  c.require(!f.esakia, "classified Esakia");
  c.require(!f.n_order, "classified N-order");
  c.require(!f.x_upset, "X classified as an upset");
  auto r = UpsetRing::pullback(p);
  auto v = check_esakia_ring(r);
  const auto& cx = p->X().carrier_ptr();
  RSet nat_minus_0 = RSet(cx, {Trace{true, {0}}}, Bits(cx->named_count()));
  RSet empty = RSet::empty(cx);
  RSet zero = RSet::point(cx, Point::block(0, 0));
  c.require(!v.ok(), "Esakia ring check found no counterexample");
  if (c.out.pass) {
    c.require(v.sets.size() == 2 && v.sets[0] == nat_minus_0 && v.sets[1] == empty,
              "counterexample is " + to_string(v.sets[0]) + ", " + to_string(v.sets[1]));
    auto in_ring = heyting_implication_in_ring(r, v.sets[0], v.sets[1]).value;
    c.require(in_ring && *in_ring == empty, "implication in R_Y is not empty");
    c.require(spatial_implication(p->X(), v.sets[0], v.sets[1]) == zero, "implication in Up(X) is not {0}");
  }
  if (c.out.pass) c.out.detail = "E=N\\{0}, F={}, in R_Y {}, in Up(X) {0}";
  return c.out;
}

// ---------------------------------------------------------------- 5

Outcome criterion5() {
  Check c;
  auto corpus = builtin_corpus();
  auto rep = theorem_suite(corpus);
  for (const auto& name : {"fig2", "one-point", "reversed", "fig2-identity", "top"})
    c.require(std::any_of(corpus.pairs.begin(), corpus.pairs.end(), [&](const NamedPair& p) { return p.name == name; }),
              std::string("presented pair missing: ") + name);
  for (const auto& t : {"heyting-characterization", "esakia-characterization", "esakia-implies-n",
                        "continuity-characterization", "upset-characterization", "n-basis-characterization"})
    c.require(std::any_of(rep.rows.begin(), rep.rows.end(), [&](const SuiteRow& r) { return r.theorem == t; }),
              std::string("no rows for ") + t);
  for (const auto& r : rep.rows)
    c.require(r.informational || r.agree, "disagreement: " + r.theorem + " on " + r.instance);
  c.out.detail = std::to_string(corpus.pairs.size()) + " pairs, " + std::to_string(corpus.spaces.size()) +
                 " spaces, " + std::to_string(rep.rows.size()) + " rows, " + std::to_string(rep.disagreements()) +
                 " disagreements" + (c.out.detail.empty() ? "" : ": " + c.out.detail);
  return c.out;
}

// ---------------------------------------------------------------- 6

Outcome criterion6() {
  Check c;
  auto posets = small_posets(1, 4);
  std::size_t maps = 0, pmorph = 0;
  for (const auto& px : posets) {
    auto x = space_from_poset(px);
    const auto xr = oracle::Rel::of(px);
    for (const auto& pz : posets) {
      auto z = space_from_poset(pz);
      const auto zr = oracle::Rel::of(pz);
      for (const auto& table : oracle::all_functions(px.n, pz.n)) {
        if (!oracle::monotone(xr, zr, table)) continue;
        auto f = SpaceMap::from_table(x, z, table);
        auto l = lift(f);
        ++maps;
        c.require(l.route_a == l.route_b, "routes disagree");
        const auto& e = l.eta0->e();
        for (int i = 0; i < px.n; ++i)
          c.require(l.lifted(e(Point::named(i))) == Point::named(table[i]), "lift does not extend f");
        // Competitors: every order-preserving g on the spectrum with g∘e = f.
        const auto yr = oracle::Rel::of(l.lifted.source());
        auto et = e.table();
        std::size_t competitors = 0;
        for (const auto& g : oracle::all_functions(yr.n, pz.n)) {
          if (!oracle::monotone(yr, zr, g)) continue;
          bool extends = true;
          for (int i = 0; i < px.n; ++i) extends = extends && g[et[i]] == table[i];
          competitors += extends;
        }
        c.require(competitors == 1 && l.competitors == 1, "lift is not unique");
        auto rep = check_lift_properties(f, l);
        c.require(rep.part2, "prime-filter condition fails: " + rep.part2_witness.value_or(""));
        if (oracle::p_morphism(xr, zr, table)) {
          ++pmorph;
          c.require(oracle::p_morphism(yr, zr, l.lifted.table()), "lift of a p-morphism is not one");
          c.require(rep.p_morphism_checked && rep.p_morphism_identity, "p-morphism identity fails");
        }
      }
    }
  }
  c.out.detail = std::to_string(maps) + " maps, " + std::to_string(pmorph) + " p-morphisms" +
                 (c.out.detail.empty() ? "" : ": " + c.out.detail);
  return c.out;
}

// ---------------------------------------------------------------- 7

Outcome criterion7() {
  Check c;
  Rng rng(kDefaultSeed + 7);
  for (int k = 0; k < 1000; ++k) {
    int n = 1 + static_cast<int>(rng.below(7));
    auto p = random_poset(rng, n);
    auto x = space_from_poset(p);
    const auto rel = oracle::Rel::of(p);
    const Mask all = rel.all();
    // Down-directed: a base member below all others, or a decreasing chain.
    std::vector<Mask> fam;
    Mask base = 0;
    while (!base) base = rng.next() & all;
    int size = 1 + static_cast<int>(rng.below(4));
    if (rng.coin()) {
      fam.push_back(base);
      for (int i = 1; i < size; ++i) fam.push_back(base | (rng.next() & all));
    } else {
      Mask cur = base | (rng.next() & all);
      for (int i = 0; i < size; ++i) {
        fam.push_back(cur);
        Mask next = cur & (rng.next() | base);
        cur = next ? next : cur;
      }
    }
    Mask inter = all;
    Mask inter_down = all;
    for (auto m : fam) {
      inter &= m;
      inter_down &= rel.down(m);
    }
    c.require(rel.down(inter) == inter_down, "oracle found a failure of the lemma");
    std::vector<RSet> family;
    for (auto m : fam) family.push_back(rset_of(x->carrier_ptr(), m));
    auto w = esakia_lemma_check(*x, family);
    c.require(!w, "engine reports a witness");
  }
  c.out.detail = "1000 families" + (c.out.detail.empty() ? "" : ": " + c.out.detail);
  return c.out;
}

// ---------------------------------------------------------------- 8

Outcome criterion8() {
  Check c;
  std::size_t maps = 0, positive = 0;
  auto check = [&](const FinPoset& a, const FinPoset& b, const std::vector<int>& table) {
    auto f = SpaceMap::from_table(space_from_poset(a), space_from_poset(b), table);
    auto r = is_p_morphism(f);  // throws when the four routes disagree
    bool expect = oracle::p_morphism(oracle::Rel::of(a), oracle::Rel::of(b), table);
    c.require(r.routes[0] == r.routes[1] && r.routes[1] == r.routes[2] && r.routes[2] == r.routes[3],
              "routes disagree");
    c.require(r.verdict == expect, "verdict differs from the definition");
    ++maps;
    positive += expect;
  };
  auto posets = small_posets(1, 3);
  for (const auto& a : posets)
    for (const auto& b : posets)
      for (const auto& t : oracle::all_functions(a.n, b.n)) check(a, b, t);
  Rng rng(kDefaultSeed + 8);
  for (int k = 0; k < 1000; ++k) {
    auto a = random_poset(rng, 1 + static_cast<int>(rng.below(6)));
    auto b = random_poset(rng, 1 + static_cast<int>(rng.below(6)));
    std::vector<int> t(a.n);
    if (rng.coin()) {
      for (auto& v : t) v = static_cast<int>(rng.below(b.n));
    } else {
      auto mono = kernels::monotone_maps_serial(a, b, std::vector<int>(a.n, -1));
      t = mono[rng.below(mono.size())];
    }
    check(a, b, t);
  }
  c.out.detail = std::to_string(maps) + " maps, " + std::to_string(positive) + " p-morphisms" +
                 (c.out.detail.empty() ? "" : ": " + c.out.detail);
  return c.out;
}

// ---------------------------------------------------------------- 9

std::string run(std::vector<std::string> args) {
  args.insert(args.begin(), "ordcomp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return "exit " + std::to_string(code) + "\n" + out.str();
}

Outcome criterion9() {
  Check c;
  const auto fig2 = (kFixtures / "fig2.pair.json").string();
  const auto ring = (kFixtures / "fig2.ring.json").string();
  const auto corpus = (kFixtures / "small.corpus.json").string();
  std::vector<std::vector<std::string>> commands = {
      {"pair-classify", fig2, "--format", "json", "--seed", "7"},
      {"ring-check", ring, "--level", "esakia", "--seed", "7", "--samples", "200"},
      {"ring-check", ring, "--level", "heyting", "--format", "json"},
      {"suite", "--corpus", corpus, "--format", "json"},
      {"suite", "--corpus", "builtin", "--format", "json"},
      {"render", fig2},
  };
  for (const auto& cmd : commands) {
    auto a = run(cmd), b = run(cmd);
    c.require(a == b, "reports differ for " + cmd[0]);
  }
  auto corpus_docs = builtin_corpus();
  c.require(to_json(theorem_suite(corpus_docs)).dump() == to_json(theorem_suite_serial(corpus_docs)).dump(),
            "parallel and serial suite reports differ");
  c.out.detail = std::to_string(commands.size()) + " commands run twice" + (c.out.detail.empty() ? "" : ": " + c.out.detail);
  return c.out;
}

}  // namespace

int main() {
  std::printf("parallel kernels: %s, threads: %d\n", kernels::parallel_enabled() ? "on" : "off",
              kernels::max_threads());
  criterion(1, "finite duality round trip", 10, criterion1);
  criterion(2, "prime-filter oracle equivalence", 30, criterion2);
  criterion(3, "Heyting implication dual routes", 10, criterion3);
  criterion(4, "Heyting but not Esakia example", 1, criterion4);
  criterion(5, "theorem suite agreement", 120, criterion5);
  criterion(6, "lift correctness", 60, criterion6);
  criterion(7, "Esakia's lemma", 10, criterion7);
  criterion(8, "four-way p-morphism agreement", 30, criterion8);
  criterion(9, "determinism", 60, criterion9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
