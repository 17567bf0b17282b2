#include "ordcomp/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ordcomp/compactify.hpp"
#include "ordcomp/error.hpp"

namespace ordcomp {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw InputError(where + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::uint64_t index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    fail(where, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

void check_format(const Json& j, const std::string& where, bool required) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find("format");
  if (it == j.end()) {
    if (required) fail(where, "missing field 'format'");
    return;
  }
  if (!it->is_number_integer() || it->get<int>() != kFormatVersion)
    fail(where + ".format", "unsupported format (expected 1)");
}

void check_kind(const Json& j, const char* kind, const std::string& where) {
  auto it = j.find("kind");
  if (it != j.end() && (!it->is_string() || *it != kind))
    fail(where + ".kind", std::string("expected \"") + kind + "\"");
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

// Wraps InputErrors thrown by model constructors with the JSON location.
template <class F>
auto located(const std::string& where, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    std::string what = e.what();
    if (what.rfind("$", 0) == 0) throw;
    fail(where, what);
  }
}

}  // namespace

Json resolve_ref(const Json& j, const fs::path& base, const std::string& where) {
  if (!j.is_string()) return j;
  auto s = j.get<std::string>();
  auto path = base.empty() ? fs::path(s) : base / s;
  return located(where, [&] { return load_json_file(path); });
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(std::string_view text, std::string_view origin) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw InputError(std::string(origin) + ":1:1: empty input");
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": JSON syntax error");
  }
}

Json load_json_file(const fs::path& path) { return parse_json_text(read_file(path), path.string()); }

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------- carrier

Carrier carrier_from_json(const Json& j, const std::string& where) {
  check_format(j, where, false);
  auto kind = str(field(j, "kind", where), where + ".kind");
  std::vector<std::string> isolated;
  if (j.contains("isolated")) {
    const auto& a = array(j["isolated"], where + ".isolated");
    for (std::size_t i = 0; i < a.size(); ++i) isolated.push_back(str(a[i], at(where + ".isolated", i)));
  }
  if (kind == "finite") {
    if (j.contains("blocks") && !j["blocks"].empty()) fail(where + ".blocks", "a finite carrier has no blocks");
    return located(where, [&] { return Carrier::finite(isolated); });
  }
  if (kind != "tail") fail(where + ".kind", "expected \"finite\" or \"tail\"");
  std::vector<BlockSpec> blocks;
  const auto& a = array(field(j, "blocks", where), where + ".blocks");
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto w = at(where + ".blocks", i);
    BlockSpec b{str(field(a[i], "name", w), w + ".name"), std::nullopt};
    if (b.name == "points") fail(w + ".name", "\"points\" is reserved");
    if (a[i].contains("limit") && !a[i]["limit"].is_null()) b.limit = str(a[i]["limit"], w + ".limit");
    blocks.push_back(std::move(b));
  }
  return located(where, [&] { return Carrier::tail(blocks, isolated); });
}

Json to_json(const Carrier& c) {
  Json j;
  j["kind"] = c.kind() == Carrier::Kind::Finite ? "finite" : "tail";
  if (c.kind() == Carrier::Kind::Tail) {
    Json blocks = Json::array();
    for (std::uint32_t b = 0; b < c.block_count(); ++b) {
      Json e;
      e["name"] = c.block_name(b);
      if (auto l = c.limit_of(b)) e["limit"] = c.named_name(*l);
      blocks.push_back(std::move(e));
    }
    j["blocks"] = std::move(blocks);
  }
  Json iso = Json::array();
  for (std::uint32_t i = 0; i < c.named_count(); ++i)
    if (!c.owner_of(i)) iso.push_back(c.named_name(i));
  j["isolated"] = std::move(iso);
  return j;
}

// ---------------------------------------------------------------- sets

Point point_from_json(const Json& j, const Carrier& c, const std::string& where) {
  auto s = str(j, where);
  return located(where, [&] { return c.parse(s); });
}

RSet rset_from_json(const Json& j, const CarrierPtr& c, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an RSet object");
  std::vector<Trace> traces(c->block_count());
  Bits named(c->named_count());
  for (const auto& [key, val] : j.items()) {
    auto w = where + "." + key;
    if (key == "points") {
      const auto& a = array(val, w);
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto name = str(a[i], at(w, i));
        auto id = c->find_named(name);
        if (!id) fail(at(w, i), "unknown named point '" + name + "'");
        named.set(*id);
      }
      continue;
    }
    if (key == "format") continue;
    auto b = c->find_block(key);
    if (!b) fail(w, "unknown block '" + key + "'");
    if (!val.is_object() || val.size() != 1) fail(w, "expected {finite: [...]} or {cofinite_except: [...]}");
    Trace t;
    if (val.contains("finite")) {
      t.cofinite = false;
    } else if (val.contains("cofinite_except")) {
      t.cofinite = true;
    } else {
      fail(w, "expected {finite: [...]} or {cofinite_except: [...]}");
    }
    const auto& a = array(val.begin().value(), w + "." + val.begin().key());
    for (std::size_t i = 0; i < a.size(); ++i) t.elems.push_back(index(a[i], at(w + "." + val.begin().key(), i)));
    std::sort(t.elems.begin(), t.elems.end());
    t.elems.erase(std::unique(t.elems.begin(), t.elems.end()), t.elems.end());
    traces[*b] = std::move(t);
  }
  return located(where, [&] { return RSet(c, std::move(traces), std::move(named)); });
}

Json to_json(const RSet& s) {
  const auto& c = s.carrier();
  Json j = Json::object();
  for (std::uint32_t b = 0; b < c.block_count(); ++b) {
    const auto& t = s.trace(b);
    if (t.is_empty()) continue;
    Json e;
    e[t.cofinite ? "cofinite_except" : "finite"] = t.elems;
    j[c.block_name(b)] = std::move(e);
  }
  Json pts = Json::array();
  for (auto i : s.named().indices()) pts.push_back(c.named_name(static_cast<std::uint32_t>(i)));
  if (!pts.empty()) j["points"] = std::move(pts);
  return j;
}

// ---------------------------------------------------------------- orders and spaces

OrderPresentation order_from_json(const Json& j, const CarrierPtr& c, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an order object");
  std::vector<Rectangle> rects;
  if (j.contains("rectangles")) {
    const auto& a = array(j["rectangles"], where + ".rectangles");
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto w = at(where + ".rectangles", i);
      rects.push_back({rset_from_json(field(a[i], "A", w), c, w + ".A"),
                       rset_from_json(field(a[i], "B", w), c, w + ".B")});
    }
  }
  if (j.contains("leq")) {
    const auto& a = array(j["leq"], where + ".leq");
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto w = at(where + ".leq", i);
      if (!a[i].is_array() || a[i].size() != 2) fail(w, "expected a pair [x, y]");
      rects.push_back({RSet::point(c, point_from_json(a[i][0], *c, at(w, 0))),
                       RSet::point(c, point_from_json(a[i][1], *c, at(w, 1)))});
    }
  }
  auto v = OrderPresentation::validate(c, std::move(rects));
  if (auto* bad = std::get_if<AntisymmetryViolation>(&v))
    fail(where, "not antisymmetric: " + c->format(bad->x) + " and " + c->format(bad->y) + " are below each other");
  return std::get<OrderPresentation>(std::move(v));
}

Json to_json(const OrderPresentation& o) {
  Json rects = Json::array();
  for (const auto& r : o.rectangles()) {
    Json e;
    e["A"] = to_json(r.lower);
    e["B"] = to_json(r.upper);
    rects.push_back(std::move(e));
  }
  Json j;
  j["rectangles"] = std::move(rects);
  return j;
}

SpacePtr space_from_json(const Json& j, const std::string& where) {
  check_format(j, where, false);
  check_kind(j, "space", where);
  auto c = make_carrier(carrier_from_json(field(j, "carrier", where), where + ".carrier"));
  Json empty = Json::object();
  const Json& o = j.contains("order") ? j["order"] : empty;
  return make_space(order_from_json(o, c, where + ".order"));
}

Json to_json(const SpacePresentation& x) {
  Json j;
  j["format"] = kFormatVersion;
  j["kind"] = "space";
  j["carrier"] = to_json(x.carrier());
  j["order"] = to_json(x.order());
  return j;
}

// ---------------------------------------------------------------- maps

SpaceMap map_from_json(const Json& j, const SpacePtr& source, const SpacePtr& target, const std::string& where) {
  if (!j.is_object()) fail(where, "expected a map object");
  const auto& sc = source->carrier();
  const auto& tc = target->carrier();
  if (j.contains("graph")) {
    if (!source->is_finite()) fail(where + ".graph", "a graph needs a finite source; use rules");
    std::vector<std::optional<Point>> images(sc.named_count());
    const auto& a = array(j["graph"], where + ".graph");
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto w = at(where + ".graph", i);
      if (!a[i].is_array() || a[i].size() != 2) fail(w, "expected a pair [x, f(x)]");
      auto x = point_from_json(a[i][0], sc, at(w, 0));
      auto y = point_from_json(a[i][1], tc, at(w, 1));
      if (images[x.id]) fail(w, "point '" + sc.format(x) + "' mapped twice");
      images[x.id] = y;
    }
    std::vector<Point> named;
    for (std::uint32_t i = 0; i < images.size(); ++i) {
      if (!images[i]) fail(where + ".graph", "no image for '" + sc.named_name(i) + "'");
      named.push_back(*images[i]);
    }
    return located(where, [&] { return SpaceMap(source, target, named); });
  }
  std::vector<std::optional<Point>> images(sc.named_count());
  if (j.contains("named")) {
    const auto& o = j["named"];
    if (!o.is_object()) fail(where + ".named", "expected an object");
    for (const auto& [key, val] : o.items()) {
      auto id = sc.find_named(key);
      if (!id) fail(where + ".named." + key, "unknown named point");
      images[*id] = point_from_json(val, tc, where + ".named." + key);
    }
  }
  std::vector<Point> named;
  for (std::uint32_t i = 0; i < images.size(); ++i) {
    if (!images[i]) fail(where + ".named", "no image for '" + sc.named_name(i) + "'");
    named.push_back(*images[i]);
  }
  std::vector<BlockRule> rules(sc.block_count());
  std::vector<bool> seen(sc.block_count(), false);
  if (j.contains("blocks")) {
    const auto& o = j["blocks"];
    if (!o.is_object()) fail(where + ".blocks", "expected an object");
    for (const auto& [key, val] : o.items()) {
      auto w = where + ".blocks." + key;
      auto b = sc.find_block(key);
      if (!b) fail(w, "unknown source block");
      if (val.contains("into")) {
        auto tb = tc.find_block(str(val["into"], w + ".into"));
        if (!tb) fail(w + ".into", "unknown target block");
        rules[*b] = {BlockRule::Kind::IntoBlock, *tb, {}};
      } else if (val.contains("constant")) {
        rules[*b] = {BlockRule::Kind::Constant, 0, point_from_json(val["constant"], tc, w + ".constant")};
      } else {
        fail(w, "expected {into: block} or {constant: point}");
      }
      seen[*b] = true;
    }
  }
  for (std::uint32_t b = 0; b < seen.size(); ++b)
    if (!seen[b]) fail(where + ".blocks", "no rule for block '" + sc.block_name(b) + "'");
  std::map<Point, Point> exceptions;
  if (j.contains("exceptions")) {
    const auto& a = array(j["exceptions"], where + ".exceptions");
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto w = at(where + ".exceptions", i);
      if (!a[i].is_array() || a[i].size() != 2) fail(w, "expected a pair [x, f(x)]");
      auto x = point_from_json(a[i][0], sc, at(w, 0));
      if (x.is_named()) fail(at(w, 0), "exceptions are for block points");
      exceptions[x] = point_from_json(a[i][1], tc, at(w, 1));
    }
  }
  return located(where, [&] { return SpaceMap(source, target, named, rules, exceptions); });
}

SpaceMap map_document_from_json(const Json& j, const std::string& where) {
  check_format(j, where, false);
  check_kind(j, "map", where);
  auto s = space_from_json(field(j, "source", where), where + ".source");
  auto t = space_from_json(field(j, "target", where), where + ".target");
  return map_from_json(j, s, t, where);
}

Json to_json(const SpaceMap& f, bool with_spaces) {
  const auto& sc = f.source().carrier();
  const auto& tc = f.target().carrier();
  Json j;
  if (with_spaces) {
    j["format"] = kFormatVersion;
    j["kind"] = "map";
    j["source"] = to_json(f.source());
    j["target"] = to_json(f.target());
  }
  if (f.source().is_finite()) {
    Json g = Json::array();
    for (std::uint32_t i = 0; i < sc.named_count(); ++i)
      g.push_back(Json::array({sc.named_name(i), tc.format(f.named_images()[i])}));
    j["graph"] = std::move(g);
    return j;
  }
  Json named = Json::object();
  for (std::uint32_t i = 0; i < sc.named_count(); ++i) named[sc.named_name(i)] = tc.format(f.named_images()[i]);
  j["named"] = std::move(named);
  Json blocks = Json::object();
  for (std::uint32_t b = 0; b < sc.block_count(); ++b) {
    const auto& r = f.rules()[b];
    Json e;
    if (r.kind == BlockRule::Kind::IntoBlock)
      e["into"] = tc.block_name(r.block);
    else
      e["constant"] = tc.format(r.point);
    blocks[sc.block_name(b)] = std::move(e);
  }
  j["blocks"] = std::move(blocks);
  Json ex = Json::array();
  for (const auto& [x, y] : f.exceptions()) ex.push_back(Json::array({sc.format(x), tc.format(y)}));
  j["exceptions"] = std::move(ex);
  return j;
}

// ---------------------------------------------------------------- pairs, lattices, rings

PairPtr pair_from_json(const Json& j, const std::string& where) {
  check_format(j, where, false);
  check_kind(j, "pair", where);
  auto x = space_from_json(field(j, "X", where), where + ".X");
  auto y = space_from_json(field(j, "Y", where), where + ".Y");
  auto e = map_from_json(field(j, "e", where), x, y, where + ".e");
  return located(where, [&] { return make_pair_ptr(std::move(e)); });
}

Json to_json(const CompactificationPair& p) {
  Json j;
  j["format"] = kFormatVersion;
  j["kind"] = "pair";
  j["X"] = to_json(p.X());
  j["Y"] = to_json(p.Y());
  j["e"] = to_json(p.e());
  return j;
}

FinDLat lattice_from_json(const Json& j, const std::string& where) {
  check_format(j, where, false);
  check_kind(j, "lattice", where);
  std::vector<std::string> ids;
  const auto& a = array(field(j, "elements", where), where + ".elements");
  for (std::size_t i = 0; i < a.size(); ++i) ids.push_back(str(a[i], at(where + ".elements", i)));
  std::vector<std::pair<std::string, std::string>> leq;
  if (j.contains("leq")) {
    const auto& l = array(j["leq"], where + ".leq");
    for (std::size_t i = 0; i < l.size(); ++i) {
      auto w = at(where + ".leq", i);
      if (!l[i].is_array() || l[i].size() != 2) fail(w, "expected a pair [a, b]");
      leq.emplace_back(str(l[i][0], at(w, 0)), str(l[i][1], at(w, 1)));
    }
  }
  auto v = located(where, [&] { return FinDLat::validate(ids, leq); });
  if (auto* bad = std::get_if<LatticeViolation>(&v)) {
    std::string els;
    for (const auto& e : bad->elements) els += (els.empty() ? "" : ", ") + e;
    fail(where, "not a distributive lattice (" + bad->axiom + ": " + els + ")");
  }
  return std::get<FinDLat>(std::move(v));
}

Json to_json(const FinDLat& d) {
  Json j;
  j["format"] = kFormatVersion;
  j["kind"] = "lattice";
  j["elements"] = d.ids();
  Json leq = Json::array();
  // Covering pairs only; the decoder closes transitively.
  for (int a = 0; a < d.size(); ++a)
    for (int b = 0; b < d.size(); ++b) {
      if (a == b || !d.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < d.size() && cover; ++c)
        if (c != a && c != b && d.leq(a, c) && d.leq(c, b)) cover = false;
      if (cover) leq.push_back(Json::array({d.id(a), d.id(b)}));
    }
  j["leq"] = std::move(leq);
  return j;
}

PairPtr builtin_pair(const std::string& name) {
  for (const auto& p : builtin_corpus().pairs)
    if (p.name == name) return p.pair;
  throw InputError("unknown built-in pair '" + name + "'");
}

namespace {

PairPtr pair_ref(const Json& j, const fs::path& base, const std::string& where) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.rfind("builtin:", 0) == 0) return located(where, [&] { return builtin_pair(s.substr(8)); });
  }
  return pair_from_json(resolve_ref(j, base, where), where);
}

}  // namespace

UpsetRing ring_from_json(const Json& j, const fs::path& base, const std::string& where) {
  check_format(j, where, false);
  check_kind(j, "ring", where);
  if (j.contains("pullback")) return UpsetRing::pullback(pair_ref(j["pullback"], base, where + ".pullback"));
  auto x = space_from_json(resolve_ref(field(j, "space", where), base, where + ".space"), where + ".space");
  std::vector<RSet> members;
  const auto& a = array(field(j, "explicit", where), where + ".explicit");
  for (std::size_t i = 0; i < a.size(); ++i)
    members.push_back(rset_from_json(a[i], x->carrier_ptr(), at(where + ".explicit", i)));
  return located(where, [&] { return UpsetRing::explicit_ring(x, std::move(members)); });
}

Json to_json(const UpsetRing& r) {
  Json j;
  j["format"] = kFormatVersion;
  j["kind"] = "ring";
  if (r.is_explicit()) {
    j["space"] = to_json(r.base());
    Json m = Json::array();
    for (const auto& s : r.members()) m.push_back(to_json(s));
    j["explicit"] = std::move(m);
  } else {
    j["pullback"] = to_json(r.pair());
  }
  return j;
}

Corpus corpus_from_json(const Json& j, const fs::path& base, const std::string& where) {
  check_format(j, where, false);
  check_kind(j, "corpus", where);
  Corpus c;
  if (j.contains("pairs")) {
    const auto& a = array(j["pairs"], where + ".pairs");
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto w = at(where + ".pairs", i);
      c.pairs.push_back({str(field(a[i], "name", w), w + ".name"), pair_ref(field(a[i], "pair", w), base, w + ".pair")});
    }
  }
  if (j.contains("spaces")) {
    const auto& a = array(j["spaces"], where + ".spaces");
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto w = at(where + ".spaces", i);
      c.spaces.push_back({str(field(a[i], "name", w), w + ".name"),
                          space_from_json(resolve_ref(field(a[i], "space", w), base, w + ".space"), w + ".space")});
    }
  }
  return c;
}

Json to_json(const Corpus& c) {
  Json j;
  j["format"] = kFormatVersion;
  j["kind"] = "corpus";
  Json pairs = Json::array();
  for (const auto& p : c.pairs) {
    Json e;
    e["name"] = p.name;
    e["pair"] = to_json(*p.pair);
    pairs.push_back(std::move(e));
  }
  Json spaces = Json::array();
  for (const auto& s : c.spaces) {
    Json e;
    e["name"] = s.name;
    e["space"] = to_json(*s.space);
    spaces.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  j["spaces"] = std::move(spaces);
  return j;
}

// ---------------------------------------------------------------- reports

Json to_json(const Verdict& v, const Carrier* carrier) {
  Json j;
  j["verdict"] = to_string(v.kind);
  if (v.ok()) {
    j["tested"] = v.tested;
    return j;
  }
  Json w = Json::object();
  if (!v.sets.empty()) {
    Json sets = Json::array();
    for (const auto& s : v.sets) sets.push_back(to_json(s));
    w["sets"] = std::move(sets);
  }
  if (carrier && v.points) w["points"] = Json::array({carrier->format(v.points->x), carrier->format(v.points->y)});
  if (carrier && v.point) w["point"] = carrier->format(*v.point);
  if (!v.detail.empty()) w["detail"] = v.detail;
  j["witness"] = std::move(w);
  return j;
}

Json to_json(const SpaceFlags& f, const Carrier& c) {
  Json j;
  j["compact"] = f.compact;
  j["priestley"] = f.priestley;
  j["continuously_ordered"] = f.continuously_ordered;
  j["esakia"] = f.esakia;
  j["order_zero_dimensional"] = f.order_zero_dimensional;
  j["image_compact"] = f.image_compact;
  j["locally_esakia"] = f.locally_esakia;
  Json w = Json::object();
  if (f.noncompact_block) w["noncompact_block"] = c.block_name(*f.noncompact_block);
  if (f.separation_witness)
    w["separation"] = Json::array({c.format(f.separation_witness->x), c.format(f.separation_witness->y)});
  if (f.basis_witness) w["basis"] = c.format(*f.basis_witness);
  if (f.continuity.upsets_closed_witness) w["up_not_closed"] = c.format(*f.continuity.upsets_closed_witness);
  if (f.continuity.down_of_open_witness) w["down_not_open"] = to_json(*f.continuity.down_of_open_witness);
  if (f.image_compact_witness) w["up_not_compact"] = c.format(*f.image_compact_witness);
  if (!w.empty()) j["witnesses"] = std::move(w);
  return j;
}

Json to_json(const PairFlags& f, const CompactificationPair& p) {
  Json j;
  j["topological_embedding"] = f.topological_embedding;
  j["order_embedding"] = f.order_embedding;
  j["dense"] = f.dense;
  j["nachbin"] = f.nachbin;
  j["order_compactification"] = f.order_compactification;
  j["priestley"] = f.priestley;
  j["heyting"] = f.heyting;
  j["esakia"] = f.esakia;
  j["n_order"] = f.n_order;
  j["x_upset"] = f.x_upset;
  if (f.n_basis) j["n_basis"] = to_json(*f.n_basis, &p.Y().carrier());
  if (f.n_direct) j["n_direct"] = *f.n_direct;
  j["X"] = to_json(f.x_flags, p.X().carrier());
  j["Y"] = to_json(f.y_flags, p.Y().carrier());
  j["notes"] = f.notes;
  return j;
}

Json to_json(const SuiteReport& r) {
  Json pairs = Json::array();
  for (const auto& s : r.pairs) {
    Json e;
    e["instance"] = s.instance;
    e["order_compactification"] = s.order_compactification;
    e["priestley"] = s.priestley;
    e["heyting"] = s.heyting;
    e["esakia"] = s.esakia;
    e["n_order"] = s.n_order;
    e["x_upset"] = s.x_upset;
    e["n_basis"] = s.n_verdict;
    pairs.push_back(std::move(e));
  }
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json e;
    e["theorem"] = row.theorem;
    e["instance"] = row.instance;
    e["lhs"] = row.lhs;
    e["rhs"] = row.rhs;
    e["agree"] = row.agree;
    if (row.informational) e["informational"] = true;
    if (!row.note.empty()) e["note"] = row.note;
    rows.push_back(std::move(e));
  }
  Json j;
  j["pairs"] = std::move(pairs);
  j["rows"] = std::move(rows);
  j["disagreements"] = r.disagreements();
  return j;
}

}  // namespace ordcomp
