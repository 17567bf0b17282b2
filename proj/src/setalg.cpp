#include "ordcomp/setalg.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <set>

#include "ordcomp/error.hpp"

namespace ordcomp {

namespace {

using Indices = std::vector<std::uint64_t>;

Indices set_union(const Indices& a, const Indices& b) {
  Indices r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}
Indices set_inter(const Indices& a, const Indices& b) {
  Indices r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}
Indices set_diff(const Indices& a, const Indices& b) {
  Indices r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Trace trace_union(const Trace& a, const Trace& b) {
  if (!a.cofinite && !b.cofinite) return {false, set_union(a.elems, b.elems)};
  if (a.cofinite && b.cofinite) return {true, set_inter(a.elems, b.elems)};
  const Trace& fin = a.cofinite ? b : a;
  const Trace& cof = a.cofinite ? a : b;
  return {true, set_diff(cof.elems, fin.elems)};
}

Trace trace_inter(const Trace& a, const Trace& b) {
  if (!a.cofinite && !b.cofinite) return {false, set_inter(a.elems, b.elems)};
  if (a.cofinite && b.cofinite) return {true, set_union(a.elems, b.elems)};
  const Trace& fin = a.cofinite ? b : a;
  const Trace& cof = a.cofinite ? a : b;
  return {false, set_diff(fin.elems, cof.elems)};
}

Trace trace_complement(const Trace& a) { return {!a.cofinite, a.elems}; }

void normalize(Trace& t) {
  std::sort(t.elems.begin(), t.elems.end());
  t.elems.erase(std::unique(t.elems.begin(), t.elems.end()), t.elems.end());
}

// Smallest index contained in the trace.
std::optional<std::uint64_t> trace_first(const Trace& t, std::optional<std::uint64_t> avoid) {
  if (!t.cofinite) {
    for (auto n : t.elems)
      if (n != avoid) return n;
    return std::nullopt;
  }
  std::uint64_t n = 0;
  std::size_t i = 0;
  while (true) {
    while (i < t.elems.size() && t.elems[i] < n) ++i;
    if ((i < t.elems.size() && t.elems[i] == n) || n == avoid) {
      ++n;
      continue;
    }
    return n;
  }
}

}  // namespace

// ---------------------------------------------------------------- Carrier

Carrier Carrier::finite(std::vector<std::string> points) {
  Carrier c;
  c.kind_ = Kind::Finite;
  std::set<std::string> seen;
  for (auto& p : points) {
    if (p.empty()) throw InputError("empty point name");
    if (!seen.insert(p).second) throw InputError("duplicate point name '" + p + "'");
  }
  c.named_ = std::move(points);
  c.named_owner_.assign(c.named_.size(), std::nullopt);
  return c;
}

Carrier Carrier::finite(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return finite(std::move(names));
}

Carrier Carrier::tail(std::vector<BlockSpec> blocks, std::vector<std::string> isolated) {
  Carrier c;
  c.kind_ = Kind::Tail;
  std::set<std::string> seen;
  auto fresh = [&](const std::string& name) {
    if (name.empty()) throw InputError("empty name in carrier");
    if (name.find(':') != std::string::npos)
      throw InputError("name '" + name + "' may not contain ':'");
    if (!seen.insert(name).second) throw InputError("duplicate name '" + name + "' in carrier");
  };
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    fresh(blocks[b].name);
    if (blocks[b].name == "points") throw InputError("block name 'points' is reserved");
    c.blocks_.push_back(blocks[b].name);
    if (blocks[b].limit) {
      fresh(*blocks[b].limit);
      c.block_limit_.push_back(static_cast<std::uint32_t>(c.named_.size()));
      c.named_.push_back(*blocks[b].limit);
      c.named_owner_.push_back(b);
    } else {
      c.block_limit_.push_back(std::nullopt);
    }
  }
  for (auto& p : isolated) {
    fresh(p);
    c.named_.push_back(p);
    c.named_owner_.push_back(std::nullopt);
  }
  return c;
}

std::optional<std::uint32_t> Carrier::find_named(std::string_view name) const {
  for (std::uint32_t i = 0; i < named_.size(); ++i)
    if (named_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::uint32_t> Carrier::find_block(std::string_view name) const {
  for (std::uint32_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] == name) return i;
  return std::nullopt;
}

bool Carrier::contains(const Point& p) const {
  return p.is_named() ? p.id < named_.size() : p.id < blocks_.size();
}

std::string Carrier::format(const Point& p) const {
  if (p.is_named()) return named_.at(p.id);
  return blocks_.at(p.id) + ":" + std::to_string(p.index);
}

Point Carrier::parse(std::string_view text) const {
  if (auto i = find_named(text)) return Point::named(*i);
  auto colon = text.rfind(':');
  if (colon != std::string_view::npos) {
    auto b = find_block(text.substr(0, colon));
    auto digits = text.substr(colon + 1);
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (b && ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
      return Point::block(*b, n);
  }
  throw InputError("unknown point '" + std::string(text) + "'");
}

bool same_carrier(const Carrier& a, const Carrier& b) { return &a == &b || a == b; }

void require_same_carrier(const Carrier& a, const Carrier& b) {
  if (!same_carrier(a, b)) throw InputError("carrier mismatch");
}

// ---------------------------------------------------------------- Trace

bool Trace::contains(std::uint64_t n) const {
  return std::binary_search(elems.begin(), elems.end(), n) != cofinite;
}

// ---------------------------------------------------------------- RSet

RSet::RSet(CarrierPtr carrier, std::vector<Trace> traces, Bits named)
    : carrier_(std::move(carrier)), traces_(std::move(traces)), named_(std::move(named)) {
  if (!carrier_) throw InputError("set without carrier");
  if (traces_.size() != carrier_->block_count())
    throw InputError("set traces do not match the carrier's blocks");
  if (named_.size() != carrier_->named_count())
    throw InputError("set point flags do not match the carrier");
  for (auto& t : traces_) normalize(t);
}

RSet RSet::empty(CarrierPtr c) {
  auto n = c->named_count();
  auto b = c->block_count();
  return RSet(std::move(c), std::vector<Trace>(b), Bits(n));
}

RSet RSet::full(CarrierPtr c) {
  auto n = c->named_count();
  auto b = c->block_count();
  return RSet(std::move(c), std::vector<Trace>(b, Trace{true, {}}), Bits::full(n));
}

RSet RSet::of(CarrierPtr c, std::span<const Point> points) {
  std::vector<Trace> traces(c->block_count());
  Bits named(c->named_count());
  for (const auto& p : points) {
    if (!c->contains(p)) throw InputError("point outside carrier");
    if (p.is_named())
      named.set(p.id);
    else
      traces[p.id].elems.push_back(p.index);
  }
  return RSet(std::move(c), std::move(traces), std::move(named));
}

RSet RSet::whole_block(CarrierPtr c, std::uint32_t b) {
  RSet s = empty(std::move(c));
  s.traces_.at(b) = Trace{true, {}};
  return s;
}

bool RSet::contains(const Point& p) const {
  if (p.is_named()) return p.id < named_.size() && named_.test(p.id);
  return p.id < traces_.size() && traces_[p.id].contains(p.index);
}

bool RSet::is_empty() const {
  if (named_.any()) return false;
  for (auto& t : traces_)
    if (!t.is_empty()) return false;
  return true;
}

bool RSet::is_full() const {
  if (named_.count() != named_.size()) return false;
  for (auto& t : traces_)
    if (!t.is_full()) return false;
  return true;
}

bool RSet::is_finite() const {
  for (auto& t : traces_)
    if (t.cofinite) return false;
  return true;
}

std::size_t RSet::support_size() const {
  std::size_t n = 0;
  for (auto& t : traces_) n += t.elems.size();
  return n;
}

bool RSet::subset_of(const RSet& o) const { return (*this - o).is_empty(); }

bool RSet::intersects(const RSet& o) const { return !(*this & o).is_empty(); }

std::optional<Point> RSet::pick() const {
  if (auto i = named_.first()) return Point::named(static_cast<std::uint32_t>(*i));
  for (std::uint32_t b = 0; b < traces_.size(); ++b)
    if (auto n = trace_first(traces_[b], std::nullopt)) return Point::block(b, *n);
  return std::nullopt;
}

std::optional<Point> RSet::pick_other_than(const Point& avoid) const {
  for (auto i = named_.first(); i; i = named_.next(*i + 1)) {
    auto p = Point::named(static_cast<std::uint32_t>(*i));
    if (p != avoid) return p;
  }
  for (std::uint32_t b = 0; b < traces_.size(); ++b) {
    std::optional<std::uint64_t> skip;
    if (!avoid.is_named() && avoid.id == b) skip = avoid.index;
    if (auto n = trace_first(traces_[b], skip)) return Point::block(b, *n);
  }
  return std::nullopt;
}

std::vector<Point> RSet::members() const {
  if (!is_finite()) throw PreconditionError("members() of an infinite set");
  std::vector<Point> out;
  for (auto i : named_.indices()) out.push_back(Point::named(static_cast<std::uint32_t>(i)));
  for (std::uint32_t b = 0; b < traces_.size(); ++b)
    for (auto n : traces_[b].elems) out.push_back(Point::block(b, n));
  return out;
}

void RSet::collect_indices(std::vector<std::uint64_t>& out) const {
  for (auto& t : traces_) out.insert(out.end(), t.elems.begin(), t.elems.end());
}

bool operator==(const RSet& a, const RSet& b) {
  if (a.carrier_ != b.carrier_ && !(a.carrier_ && b.carrier_ && *a.carrier_ == *b.carrier_))
    return false;
  return a.named_ == b.named_ && a.traces_ == b.traces_;
}

std::strong_ordering operator<=>(const RSet& a, const RSet& b) {
  if (auto c = a.named_ <=> b.named_; c != 0) return c;
  return a.traces_ <=> b.traces_;
}

RSet apply_boolean(BoolOp op, const RSet& s, const RSet* t) {
  const auto nb = s.carrier().block_count();
  std::vector<Trace> traces(nb);
  if (op == BoolOp::Complement) {
    for (std::uint32_t b = 0; b < nb; ++b) traces[b] = trace_complement(s.trace(b));
    return RSet(s.carrier_ptr(), std::move(traces), ~s.named());
  }
  if (!t) throw InputError("binary set operation without second operand");
  require_same_carrier(s.carrier(), t->carrier());
  Bits named = s.named();
  for (std::uint32_t b = 0; b < nb; ++b) {
    const Trace& x = s.trace(b);
    const Trace& y = t->trace(b);
    switch (op) {
      case BoolOp::Union: traces[b] = trace_union(x, y); break;
      case BoolOp::Intersection: traces[b] = trace_inter(x, y); break;
      case BoolOp::Difference: traces[b] = trace_inter(x, trace_complement(y)); break;
      case BoolOp::Complement: break;
    }
  }
  switch (op) {
    case BoolOp::Union: named |= t->named(); break;
    case BoolOp::Intersection: named &= t->named(); break;
    case BoolOp::Difference: named -= t->named(); break;
    case BoolOp::Complement: break;
  }
  return RSet(s.carrier_ptr(), std::move(traces), std::move(named));
}

// ---------------------------------------------------------------- topology

SetClass classify_set(const Carrier& c, const RSet& s) {
  require_same_carrier(c, s.carrier());
  SetClass k;
  k.finite = s.is_finite();
  k.open = true;
  k.closed = true;
  for (std::uint32_t b = 0; b < c.block_count(); ++b) {
    auto lim = c.limit_of(b);
    if (!lim) continue;
    bool has_limit = s.named().test(*lim);
    bool cof = s.trace(b).cofinite;
    if (has_limit && !cof) k.open = false;
    if (cof && !has_limit) k.closed = false;
  }
  k.clopen = k.open && k.closed;
  return k;
}

RSet closure(const Carrier& c, const RSet& s) {
  require_same_carrier(c, s.carrier());
  Bits named = s.named();
  std::vector<Trace> traces;
  for (std::uint32_t b = 0; b < c.block_count(); ++b) {
    traces.push_back(s.trace(b));
    if (auto lim = c.limit_of(b); lim && s.trace(b).cofinite) named.set(*lim);
  }
  return RSet(s.carrier_ptr(), std::move(traces), std::move(named));
}

RSet interior(const Carrier& c, const RSet& s) {
  require_same_carrier(c, s.carrier());
  Bits named = s.named();
  std::vector<Trace> traces;
  for (std::uint32_t b = 0; b < c.block_count(); ++b) {
    traces.push_back(s.trace(b));
    if (auto lim = c.limit_of(b); lim && !s.trace(b).cofinite) named.reset(*lim);
  }
  return RSet(s.carrier_ptr(), std::move(traces), std::move(named));
}

Density is_dense_in(const Carrier& c, const RSet& a, const RSet& b) {
  if (!a.subset_of(b)) throw PreconditionError("is_dense_in requires A ⊆ B");
  auto missing = b - closure(c, a);
  if (missing.is_empty()) return {};
  return {false, missing.pick()};
}

std::optional<RSet> clopen_separator(const Carrier& c, const RSet& inside, const RSet& outside) {
  require_same_carrier(c, inside.carrier());
  require_same_carrier(c, outside.carrier());
  if (inside.intersects(outside)) return std::nullopt;
  std::vector<Trace> traces;
  Bits named = inside.named();
  for (std::uint32_t b = 0; b < c.block_count(); ++b) {
    const Trace& in = inside.trace(b);
    auto lim = c.limit_of(b);
    if (!lim) {
      traces.push_back(in);
      continue;
    }
    bool lim_in = inside.named().test(*lim);
    bool lim_out = outside.named().test(*lim);
    // A neighbourhood of the limit must be cofinite on the block; a set
    // avoiding it must be finite there.
    bool take_limit = lim_in || (!lim_out && in.cofinite);
    if (take_limit) {
      Trace t = trace_complement(outside.trace(b));
      if (!t.cofinite) return std::nullopt;
      traces.push_back(std::move(t));
      named.set(*lim);
    } else {
      if (in.cofinite) return std::nullopt;
      traces.push_back(in);
    }
  }
  RSet w(inside.carrier_ptr(), std::move(traces), std::move(named));
  if (!classify_set(c, w).clopen || !inside.subset_of(w) || w.intersects(outside))
    return std::nullopt;
  return w;
}

std::string to_string(const RSet& s) {
  const Carrier& c = s.carrier();
  std::string out = "{";
  bool first = true;
  auto add = [&](const std::string& item) {
    if (!first) out += ", ";
    out += item;
    first = false;
  };
  for (auto i : s.named().indices()) add(c.named_name(static_cast<std::uint32_t>(i)));
  for (std::uint32_t b = 0; b < c.block_count(); ++b) {
    const Trace& t = s.trace(b);
    if (!t.cofinite) {
      for (auto n : t.elems) add(c.block_name(b) + ":" + std::to_string(n));
      continue;
    }
    std::string item = c.block_name(b);
    if (!t.elems.empty()) {
      item += "\\{";
      for (std::size_t i = 0; i < t.elems.size(); ++i)
        item += (i ? "," : "") + std::to_string(t.elems[i]);
      item += "}";
    }
    add(item);
  }
  return out + "}";
}

}  // namespace ordcomp
