#pragma once

// Graphviz DOT and TikZ sources for meanders, block diagrams and Hasse
// diagrams. Output is deterministic.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "block_poset.hpp"
#include "meander.hpp"
#include "poset.hpp"
#include "weighted_meander.hpp"

namespace seaweed {

namespace detail {

inline std::string meander_dot(const Meander& m, const std::map<Edge, int>* weights) {
  std::ostringstream os;
  os << "graph meander {\n  node [shape=circle];\n";
  for (int v = 1; v <= m.n_vertices(); ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
  os << "  { rank=same;";
  for (int v = 1; v <= m.n_vertices(); ++v) os << " v" << v << ";";
  os << " }\n";
  for (const auto& e : m.edges()) {
    os << "  v" << e.lo << " -- v" << e.hi << " [side=" << to_string(e.side);
    if (weights) os << ", label=\"" << weights->at(e) << "\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string meander_tikz(const Meander& m, const std::map<Edge, int>* weights) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}\n";
  os << "  \\draw[gray] (0.5,0) -- (" << m.n_vertices() << ".5,0);\n";
  for (int v = 1; v <= m.n_vertices(); ++v)
    os << "  \\node[circle, fill, inner sep=1.5pt, label=below:{\\scriptsize " << v << "}] (v" << v << ") at (" << v
       << ",0) {};\n";
  for (const auto& e : m.edges()) {
    const bool top = e.side == Side::Top;
    const int angle = top ? 90 : -90;
    os << "  \\draw (v" << e.lo << ") to[out=" << angle << ", in=" << angle << ", looseness=1.5]";
    if (weights) os << " node[midway, " << (top ? "above" : "below") << "] {" << weights->at(e) << "}";
    os << " (v" << e.hi << ");\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

inline std::string block_label(const Interval& b) {
  return b.lo == b.hi ? std::to_string(b.lo) : std::to_string(b.lo) + ".." + std::to_string(b.hi);
}

/// Longest-chain height of each element, 1-indexed.
inline std::vector<int> poset_heights(const Poset& p) {
  std::vector<int> h(p.size() + 1, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 1; a <= p.size(); ++a)
      for (int b = 1; b <= p.size(); ++b)
        if (p.less(a, b) && h[b] < h[a] + 1) {
          h[b] = h[a] + 1;
          changed = true;
        }
  }
  return h;
}

}  // namespace detail

inline std::string meander_dot(const Meander& m) { return detail::meander_dot(m, nullptr); }
inline std::string meander_tikz(const Meander& m) { return detail::meander_tikz(m, nullptr); }
inline std::string weighted_dot(const WeightedMeander& wm) { return detail::meander_dot(wm.base(), &wm.weights()); }
inline std::string weighted_tikz(const WeightedMeander& wm) {
  return detail::meander_tikz(wm.base(), &wm.weights());
}

inline std::string block_diagram_dot(const BlockDiagram& bd) {
  std::ostringstream os;
  os << "digraph blocks {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < bd.blocks.size(); ++i)
    os << "  C" << i + 1 << " [label=\"" << detail::block_label(bd.blocks[i]) << "\"];\n";
  for (std::size_t i = 0; i < bd.arrows.size(); ++i) {
    if (bd.arrows[i] == Arrow::Forward) os << "  C" << i + 1 << " -> C" << i + 2 << ";\n";
    if (bd.arrows[i] == Arrow::Backward) os << "  C" << i + 2 << " -> C" << i + 1 << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string block_diagram_tikz(const BlockDiagram& bd) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[>=stealth]\n";
  for (std::size_t i = 0; i < bd.blocks.size(); ++i)
    os << "  \\node[circle, draw] (C" << i + 1 << ") at (" << 2 * i << ",0) {" << detail::block_label(bd.blocks[i])
       << "};\n";
  for (std::size_t i = 0; i < bd.arrows.size(); ++i) {
    if (bd.arrows[i] == Arrow::Forward) os << "  \\draw[->] (C" << i + 1 << ") -- (C" << i + 2 << ");\n";
    if (bd.arrows[i] == Arrow::Backward) os << "  \\draw[->] (C" << i + 2 << ") -- (C" << i + 1 << ");\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

/// Covering relations only, one rank per longest-chain height.
inline std::string hasse_dot(const Poset& p) {
  const auto h = detail::poset_heights(p);
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int v = 1; v <= p.size(); ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
  std::map<int, std::vector<int>> ranks;
  for (int v = 1; v <= p.size(); ++v) ranks[h[v]].push_back(v);
  for (const auto& [height, members] : ranks) {
    os << "  { rank=same;";
    for (int v : members) os << " v" << v << ";";
    os << " }\n";
  }
  for (auto [a, b] : covering_relations(p)) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string hasse_tikz(const Poset& p) {
  const auto h = detail::poset_heights(p);
  std::map<int, int> used;
  std::ostringstream os;
  os << "\\begin{tikzpicture}\n";
  for (int v = 1; v <= p.size(); ++v)
    os << "  \\node[circle, draw, inner sep=1pt] (v" << v << ") at (" << used[h[v]]++ << "," << h[v] << ") {" << v
       << "};\n";
  for (auto [a, b] : covering_relations(p)) os << "  \\draw (v" << a << ") -- (v" << b << ");\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace seaweed
