#include "ordcomp/cli.hpp"

#include <chrono>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "ordcomp/compactify.hpp"
#include "ordcomp/dot.hpp"
#include "ordcomp/duality.hpp"
#include "ordcomp/error.hpp"
#include "ordcomp/io.hpp"

namespace ordcomp {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string basis;
  std::string corpus = "builtin";
  std::string level = "esakia";
  std::string format = "text";
  SweepConfig sweep;
  bool expect_fail = false;
  bool timings = false;
};

// What a subcommand hands back: the report body and whether the property it
// checks failed.
struct Outcome {
  Json result = Json::object();
  bool counterexample = false;
  std::string dot;  // render only
};

struct Input {
  std::string path;
  Json doc;
};

Input load(const std::string& path, Json& digests) {
  auto bytes = read_file(path);
  Json d;
  d["path"] = path;
  d["fnv1a"] = fnv1a_hex(bytes);
  digests.push_back(std::move(d));
  auto doc = parse_json_text(bytes, path);
  if (!doc.is_object() || !doc.contains("format"))
    throw InputError(path + ": top-level document needs \"format\": 1");
  return {path, std::move(doc)};
}

fs::path base_of(const std::string& path) { return fs::path(path).parent_path(); }

bool is_pair_doc(const Json& j) { return j.contains("X") && j.contains("Y"); }

Outcome cmd_classify(const RunConfig&, const Input& in) {
  auto x = space_from_json(in.doc);
  Outcome o;
  o.result["flags"] = to_json(classify_space(*x), x->carrier());
  return o;
}

Outcome cmd_pair_classify(const RunConfig& cfg, const Input& in) {
  auto p = pair_from_json(in.doc);
  auto f = classify_pair(p, cfg.sweep);
  Outcome o;
  o.result["flags"] = to_json(f, *p);
  o.counterexample = !f.order_compactification;
  return o;
}

Verdict check_level(const UpsetRing& r, const std::string& level, const SweepConfig& cfg) {
  if (level == "ring") return check_ring(r);
  if (level == "priestley") return check_priestley_ring(r);
  if (level == "basis") return check_priestley_basis(r);
  if (level == "heyting") return check_heyting_ring(r, cfg);
  if (level == "esakia") return check_esakia_ring(r, cfg);
  if (r.is_explicit()) throw InputError("--level nbasis needs a pullback ring");
  return check_n_basis(r.pair_ptr(), cfg);
}

Outcome cmd_ring_check(const RunConfig& cfg, const Input& in) {
  auto r = ring_from_json(in.doc, base_of(in.path));
  auto v = check_level(r, cfg.level, cfg.sweep);
  const auto& carrier = cfg.level == "nbasis" ? r.pair().Y().carrier() : r.base().carrier();
  Outcome o;
  o.result["level"] = cfg.level;
  o.result["check"] = to_json(v, &carrier);
  o.counterexample = !v.ok();
  return o;
}

Outcome cmd_compactify(const RunConfig& cfg, const Input& in) {
  auto r = ring_from_json(in.doc, base_of(in.path));
  if (!r.is_explicit()) throw InputError(in.path + ": --basis needs an explicit ring");
  auto bc = compactify_from_basis(r.base_ptr(), r);
  Outcome o;
  o.result["basis"] = to_json(bc.basis, &r.base().carrier());
  if (bc.pair) {
    o.result["pair"] = to_json(**bc.pair);
    o.result["flags"] = to_json(classify_pair(*bc.pair, cfg.sweep), **bc.pair);
  }
  o.counterexample = !bc.pair;
  return o;
}

Outcome cmd_eta0(const RunConfig& cfg, const Input& in) {
  auto x = space_from_json(in.doc);
  auto p = eta0_finite(x);
  Outcome o;
  o.result["pair"] = to_json(*p);
  o.result["flags"] = to_json(classify_pair(p, cfg.sweep), *p);
  return o;
}

Outcome cmd_compare(const RunConfig& cfg, const Input& a, const Input& b) {
  auto p1 = pair_from_json(a.doc);
  auto p2 = pair_from_json(b.doc);
  auto c = compare_compactifications(p1, p2, cfg.sweep);
  Outcome o;
  o.result["below"] = c.map.has_value();
  if (c.map) o.result["map"] = to_json(*c.map);
  if (!c.reason.empty()) o.result["reason"] = c.reason;
  if (c.p_morphism) o.result["p_morphism"] = *c.p_morphism;
  o.counterexample = !c.map;
  return o;
}

Outcome cmd_lift(const RunConfig&, const Input& in) {
  auto f = map_document_from_json(in.doc);
  auto l = lift(f);
  auto rep = check_lift_properties(f, l);
  Outcome o;
  o.result["eta0"] = to_json(*l.eta0);
  o.result["lift"] = to_json(l.lifted);
  o.result["routes_agree"] = l.route_a == l.route_b;
  o.result["competitors"] = l.competitors;
  o.result["prime_filter_condition"] = rep.part2;
  if (rep.part2_witness) o.result["prime_filter_witness"] = *rep.part2_witness;
  o.result["f_p_morphism"] = rep.p_morphism_checked;
  o.result["lift_p_morphism"] = is_p_morphism(l.lifted).verdict;
  if (rep.identity_witness) o.result["p_morphism_witness"] = *rep.identity_witness;
  o.counterexample = !rep.part2 || !rep.p_morphism_identity;
  return o;
}

Outcome cmd_lemma_check(const RunConfig&, const Input& in) {
  if (!in.doc.contains("space") || !in.doc.contains("family") || !in.doc["family"].is_array())
    throw InputError(in.path + ": expected {space, family: [...]}");
  auto x = space_from_json(resolve_ref(in.doc["space"], base_of(in.path), "$.space"), "$.space");
  std::vector<RSet> family;
  for (std::size_t i = 0; i < in.doc["family"].size(); ++i)
    family.push_back(rset_from_json(in.doc["family"][i], x->carrier_ptr(), "$.family[" + std::to_string(i) + "]"));
  auto w = esakia_lemma_check(*x, family);
  Outcome o;
  o.result["holds"] = !w;
  if (w) o.result["witness"] = x->carrier().format(*w);
  o.counterexample = w.has_value();
  return o;
}

Outcome cmd_suite(const RunConfig& cfg) {
  Corpus corpus;
  if (cfg.corpus == "builtin") {
    corpus = builtin_corpus();
  } else {
    Json digests = Json::array();
    auto in = load(cfg.corpus, digests);
    corpus = corpus_from_json(in.doc, base_of(in.path));
  }
  auto r = theorem_suite(corpus, cfg.sweep);
  Outcome o;
  o.result["suite"] = to_json(r);
  o.counterexample = r.disagreements() > 0;
  return o;
}

Outcome cmd_lattice(const RunConfig&, const Input& in) {
  auto d = lattice_from_json(in.doc);
  auto filters = prime_filters(d);
  Outcome o;
  Json fs = Json::array();
  for (const auto& f : filters) {
    Json members = Json::array();
    for (auto i : f.indices()) members.push_back(d.id(static_cast<int>(i)));
    fs.push_back(std::move(members));
  }
  o.result["prime_filters"] = std::move(fs);
  if (d.size() <= kPrimeFilterBruteCap) o.result["brute_force_agrees"] = prime_filters_brute(d) == filters;
  o.result["heyting"] = is_heyting(d);
  auto rt = roundtrip_lattice(d);
  o.result["spectrum"] = to_json(*rt.spec.space);
  o.result["roundtrip"] = true;
  return o;
}

Outcome cmd_pmorphism(const RunConfig&, const Input& in) {
  auto f = map_document_from_json(in.doc);
  auto r = is_p_morphism(f);
  Outcome o;
  o.result["p_morphism"] = r.verdict;
  if (r.witness) {
    o.result["witness"] = Json::array({f.source().carrier().format(r.witness->x),
                                       f.target().carrier().format(r.witness->y)});
  }
  o.counterexample = !r.verdict;
  return o;
}

Outcome cmd_render(const RunConfig&, const Input& in) {
  Outcome o;
  if (is_pair_doc(in.doc))
    o.dot = render_pair_dot(*pair_from_json(in.doc), "Y");
  else
    o.dot = render_space_dot(*space_from_json(in.doc), "X");
  return o;
}

void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact Priestley/Esakia duality and order-compactifications", "ordcomp"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--support-bound", cfg.sweep.support_bound, "Explicit-index bound of the deterministic sweep")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--samples", cfg.sweep.samples, "Seeded random pairs after the sweep")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.sweep.seed, "Random seed");
  app.add_flag("--expect-fail", cfg.expect_fail, "Treat a counterexample as success and its absence as failure");
  app.add_flag("--timings", cfg.timings, "Include wall-clock timings in the report");

  auto add = [&](const char* name, const char* help, int files) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (files > 0) sub->add_option("input", cfg.inputs, "Input document")->required()->expected(files);
    return sub;
  };
  add("classify", "Classify an ordered space", 1);
  add("pair-classify", "Classify a compactification pair", 1);
  add("ring-check", "Check a ring of upsets", 1)
      ->add_option("--level", cfg.level, "Ladder rung")
      ->check(CLI::IsMember({"ring", "priestley", "basis", "heyting", "esakia", "nbasis"}));
  add("compactify", "Compactify a finite space by an explicit basis", 0)
      ->add_option("--basis", cfg.basis, "Ring document")
      ->required();
  add("eta0", "Largest Priestley order-compactification of a finite space", 1);
  add("compare", "Whether the first pair lies below the second", 2);
  add("lift", "Lift a map of finite spaces along eta0", 1);
  add("lemma-check", "Check Esakia's lemma on a down-directed family", 1);
  add("suite", "Run the theorem suite", 0)->add_option("--corpus", cfg.corpus, "builtin or a corpus document");
  add("lattice", "Validate a finite lattice and compute its spectrum", 1);
  add("pmorphism", "Decide whether a map is a p-morphism", 1);
  add("render", "Render a space or pair as a Hasse diagram", 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitInvalidInput;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.subcommand == "render" && cfg.format == "text") cfg.format = "dot";
  if ((cfg.format == "dot") != (cfg.subcommand == "render")) {
    err << "ordcomp: --format dot is only available for render\n";
    return kExitInvalidInput;
  }

  auto start = std::chrono::steady_clock::now();
  Json report;
  report["format"] = kFormatVersion;
  report["command"] = cfg.subcommand;
  Json digests = Json::array();
  Outcome outcome;
  try {
    std::vector<Input> ins;
    for (const auto& path : cfg.inputs) ins.push_back(load(path, digests));
    const auto& sub = cfg.subcommand;
    if (sub == "classify") outcome = cmd_classify(cfg, ins[0]);
    else if (sub == "pair-classify") outcome = cmd_pair_classify(cfg, ins[0]);
    else if (sub == "ring-check") outcome = cmd_ring_check(cfg, ins[0]);
    else if (sub == "compactify") outcome = cmd_compactify(cfg, load(cfg.basis, digests));
    else if (sub == "eta0") outcome = cmd_eta0(cfg, ins[0]);
    else if (sub == "compare") outcome = cmd_compare(cfg, ins[0], ins[1]);
    else if (sub == "lift") outcome = cmd_lift(cfg, ins[0]);
    else if (sub == "lemma-check") outcome = cmd_lemma_check(cfg, ins[0]);
    else if (sub == "suite") outcome = cmd_suite(cfg);
    else if (sub == "lattice") outcome = cmd_lattice(cfg, ins[0]);
    else if (sub == "pmorphism") outcome = cmd_pmorphism(cfg, ins[0]);
    else outcome = cmd_render(cfg, ins[0]);
  } catch (const InputError& e) {
    err << "ordcomp: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const SizeError& e) {
    err << "ordcomp: input too large: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const PreconditionError& e) {
    err << "ordcomp: precondition not met: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const EngineBug& e) {
    err << "ordcomp: internal route disagreement: " << e.what() << "\n";
    return kExitEngineBug;
  } catch (const Json::exception& e) {
    err << "ordcomp: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  if (cfg.format == "dot") {
    out << outcome.dot;
    return kExitOk;
  }
  int code = outcome.counterexample ? kExitCounterexample : kExitOk;
  if (cfg.expect_fail) code = outcome.counterexample ? kExitOk : kExitCounterexample;
  report["inputs"] = std::move(digests);
  Json conf;
  conf["support_bound"] = cfg.sweep.support_bound;
  conf["samples"] = cfg.sweep.samples;
  conf["seed"] = cfg.sweep.seed;
  if (cfg.subcommand == "ring-check") conf["level"] = cfg.level;
  report["config"] = std::move(conf);
  report["counterexample"] = outcome.counterexample;
  report["result"] = std::move(outcome.result);
  report["exit"] = code;
  if (cfg.timings) {
    report["timings"]["total_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  if (cfg.format == "json")
    out << report.dump(2) << "\n";
  else
    print_text(report, "", out);
  return code;
}

}  // namespace ordcomp
