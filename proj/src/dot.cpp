#include "ordcomp/dot.hpp"

#include <algorithm>
#include <sstream>

namespace ordcomp {

namespace {

struct Node {
  std::string name;
  Point sample;
  bool filled = true;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<Node> nodes_of(const SpacePresentation& x, std::vector<std::uint64_t> support) {
  const auto& c = x.carrier();
  auto reps = representatives(x, std::move(support));
  std::vector<Node> nodes;
  for (const auto& p : reps.points) {
    if (!p.is_named() && std::find(reps.indices.begin(), reps.indices.begin() + reps.support, p.index) ==
                             reps.indices.begin() + reps.support)
      continue;
    nodes.push_back({c.format(p), p, true});
  }
  for (std::uint32_t b = 0; b < c.block_count(); ++b)
    nodes.push_back({c.block_name(b) + ":*", Point::block(b, reps.indices[reps.support]), true});
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.name < b.name; });
  return nodes;
}

std::string render(const SpacePresentation& x, const std::vector<Node>& nodes, const std::string& title) {
  std::ostringstream out;
  out << "digraph " << quote(title) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    out << "  n" << i << " [label=" << quote(nodes[i].name)
        << (nodes[i].filled ? ", style=filled, fillcolor=black, fontcolor=white" : ", style=solid") << "];\n";
  auto lt = [&](std::size_t a, std::size_t b) { return a != b && x.leq(nodes[a].sample, nodes[b].sample); };
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      if (!lt(a, b)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < nodes.size() && cover; ++m)
        if (lt(a, m) && lt(m, b)) cover = false;
      if (cover) out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string render_space_dot(const SpacePresentation& x, const std::string& title) {
  return render(x, nodes_of(x, support_indices(x)), title);
}

std::string render_pair_dot(const CompactificationPair& p, const std::string& title) {
  auto nodes = nodes_of(p.Y(), p.e().support());
  auto ex = p.e().image(p.X().full());
  for (auto& n : nodes) n.filled = ex.contains(n.sample);
  return render(p.Y(), nodes, title);
}

}  // namespace ordcomp
