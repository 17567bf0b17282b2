#ifndef ORDCOMP_DOT_HPP
#define ORDCOMP_DOT_HPP

#include <string>

#include "ordcomp/pair.hpp"

namespace ordcomp {

// Hasse diagram of a space in Graphviz DOT. Infinite blocks are drawn through
// their support indices plus one node "B:*" standing for every other index.
// Nodes are emitted in order of their names, so the output only depends on
// the presented structure.
std::string render_space_dot(const SpacePresentation& x, const std::string& title = "X");

// Hasse diagram of Y with the points of e[X] filled and the rest hollow.
std::string render_pair_dot(const CompactificationPair& p, const std::string& title = "Y");

}  // namespace ordcomp

#endif  // ORDCOMP_DOT_HPP
