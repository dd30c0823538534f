#pragma once

// The meander of a seaweed: N vertices on a line, nested top arcs inside
// each top block and nested bottom arcs inside each bottom block.

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "notation.hpp"

namespace seaweed {

enum class Side { Top, Bottom };

inline const char* to_string(Side s) { return s == Side::Top ? "top" : "bottom"; }

/// Arc between vertices lo < hi on one side of the line.
struct Edge {
  Side side = Side::Top;
  int lo = 0;
  int hi = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Meander {
 public:
  Meander(int n_vertices, std::vector<Edge> top, std::vector<Edge> bottom)
      : n_(n_vertices), top_(std::move(top)), bottom_(std::move(bottom)) {
    check();
  }

  int n_vertices() const { return n_; }
  const std::vector<Edge>& top_edges() const { return top_; }
  const std::vector<Edge>& bottom_edges() const { return bottom_; }

  /// Top edges by left endpoint, then bottom edges by left endpoint.
  std::vector<Edge> edges() const {
    std::vector<Edge> out(top_);
    out.insert(out.end(), bottom_.begin(), bottom_.end());
    return out;
  }

  std::size_t edge_count() const { return top_.size() + bottom_.size(); }

  bool has_edge(const Edge& e) const {
    const auto& side = e.side == Side::Top ? top_ : bottom_;
    return std::find(side.begin(), side.end(), e) != side.end();
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(n_ + 1, 0);
    for (const auto& e : top_) ++deg[e.lo], ++deg[e.hi];
    for (const auto& e : bottom_) ++deg[e.lo], ++deg[e.hi];
    return deg;
  }

 private:
  void check() {
    if (n_ < 1) throw std::invalid_argument("meander needs at least one vertex");
    auto sort_side = [this](std::vector<Edge>& side, Side tag) {
      std::vector<int> seen(n_ + 1, 0);
      for (const auto& e : side) {
        if (e.side != tag || e.lo < 1 || e.hi > n_ || e.lo >= e.hi)
          throw std::invalid_argument("malformed meander edge");
        if (++seen[e.lo] > 1 || ++seen[e.hi] > 1)
          throw std::invalid_argument("vertex meets two edges on one side");
      }
      std::sort(side.begin(), side.end());
    };
    sort_side(top_, Side::Top);
    sort_side(bottom_, Side::Bottom);
  }

  int n_;
  std::vector<Edge> top_;
  std::vector<Edge> bottom_;
};

namespace detail {

inline std::vector<Edge> nested_arcs(const Composition& c, Side side) {
  std::vector<Edge> out;
  for (const auto& b : blocks(c))
    for (int lo = b.lo, hi = b.hi; lo < hi; ++lo, --hi) out.push_back({side, lo, hi});
  return out;
}

}  // namespace detail

inline Meander build_meander(const SeaweedSpec& s) {
  return Meander(s.n(), detail::nested_arcs(s.top(), Side::Top),
                 detail::nested_arcs(s.bottom(), Side::Bottom));
}

struct CycleCount {
  int cycles = 0;
  int paths = 0;
};

/// A component is a cycle when it has as many edges as vertices (a
/// parallel top/bottom pair is a 2-cycle); everything else, isolated
/// vertices included, is a path.
inline CycleCount cycles_and_paths(const Meander& m) {
  const int n = m.n_vertices();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : m.edges()) parent[find(e.lo)] = find(e.hi);

  std::vector<int> vertices(n + 1, 0), edges(n + 1, 0);
  for (int v = 1; v <= n; ++v) ++vertices[find(v)];
  for (const auto& e : m.edges()) ++edges[find(e.lo)];

  CycleCount out;
  for (int v = 1; v <= n; ++v) {
    if (find(v) != v) continue;
    if (edges[v] == vertices[v])
      ++out.cycles;
    else
      ++out.paths;
  }
  return out;
}

/// 2C + P for gl, one less for sl.
inline int index_seaweed(const SeaweedSpec& s) {
  auto [c, p] = cycles_and_paths(build_meander(s));
  return 2 * c + p - (s.is_sl() ? 1 : 0);
}

/// Vertex intervals cut at the common partial sums of top and bottom.
struct CentralComponents {
  std::vector<Interval> intervals;

  std::size_t size() const { return intervals.size(); }

  /// 0-based index of the interval holding vertex v.
  std::size_t component_of(int v) const {
    for (std::size_t i = 0; i < intervals.size(); ++i)
      if (intervals[i].contains(v)) return i;
    throw std::out_of_range("vertex outside every central component");
  }
};

inline CentralComponents central_components(const SeaweedSpec& s) {
  auto ps_top = partial_sums(s.top());
  auto ps_bottom = partial_sums(s.bottom());
  CentralComponents out;
  int lo = 1;
  for (int lambda : ps_top) {
    if (!ps_bottom.contains(lambda)) continue;
    out.intervals.push_back({lo, lambda});
    lo = lambda + 1;
  }
  return out;
}

/// One more than the number of gaps (i, i+1) that no arc spans.
inline int count_central_by_gaps(const Meander& m) {
  const int n = m.n_vertices();
  std::vector<int> cover(n + 2, 0);
  for (const auto& e : m.edges()) {
    ++cover[e.lo];
    --cover[e.hi];
  }
  int open = 0, count = 1;
  for (int i = 1; i < n; ++i) {
    open += cover[i];
    if (open == 0) ++count;
  }
  return count;
}

/// Edges with no second edge on the same vertex pair.
inline std::vector<Edge> simple_edges(const Meander& m) {
  std::map<std::pair<int, int>, int> multiplicity;
  for (const auto& e : m.edges()) ++multiplicity[{e.lo, e.hi}];
  std::vector<Edge> out;
  for (const auto& e : m.edges())
    if (multiplicity[{e.lo, e.hi}] == 1) out.push_back(e);
  return out;
}

}  // namespace seaweed
